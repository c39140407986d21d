#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fest/fingerprint.hpp"

namespace fest::text {

/// Decodes UTF-8 into Unicode scalar values. Throws UsageError on malformed
/// input.
std::vector<Symbol> decode_utf8(std::string_view bytes);

void append_utf8(std::string& out, Symbol scalar);

/// A symbol token is either exactly one UTF-8 character, or '#' followed by
/// decimal digits for a raw numeric code ("#" alone is the '#' character).
Symbol parse_symbol_token(std::string_view token);

/// Parses an unsigned decimal, throwing UsageError on anything else.
std::uint64_t parse_u64(std::string_view token);

/// Text rendering used by the script protocol: plain UTF-8 when every symbol
/// is a printable, non-space scalar; otherwise "[c1 c2 ...]" with decimal
/// codes. The empty sequence renders as "".
std::string render(std::span<const Symbol> symbols);

}  // namespace fest::text
