#include "fest/text.hpp"

#include <charconv>
#include <string>

#include "fest/errors.hpp"

namespace fest::text {
namespace {

bool printable(Symbol c) {
  if (c <= 0x20 || c == 0x7F) return false;
  if (c >= 0x80 && c <= 0x9F) return false;
  if (c >= 0xD800 && c <= 0xDFFF) return false;
  return c <= 0x10FFFF;
}

}  // namespace

std::vector<Symbol> decode_utf8(std::string_view bytes) {
  std::vector<Symbol> out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    auto lead = static_cast<unsigned char>(bytes[i]);
    int extra;
    Symbol cp;
    if (lead < 0x80) {
      extra = 0;
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      throw UsageError("malformed UTF-8 lead byte");
    }
    if (i + extra >= bytes.size() && extra > 0) {
      throw UsageError("truncated UTF-8 sequence");
    }
    for (int k = 1; k <= extra; ++k) {
      auto cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) throw UsageError("malformed UTF-8 continuation byte");
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr Symbol kMin[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw UsageError("invalid UTF-8 scalar");
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_utf8(std::string& out, Symbol c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::uint64_t parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw UsageError("expected an unsigned integer, got '" + std::string(token) + "'");
  }
  return value;
}

Symbol parse_symbol_token(std::string_view token) {
  if (token.size() > 1 && token.front() == '#') {
    std::uint64_t v = parse_u64(token.substr(1));
    if (v > 0xFFFFFFFFull) throw UsageError("symbol code out of range: " + std::string(token));
    return static_cast<Symbol>(v);
  }
  auto scalars = decode_utf8(token);
  if (scalars.size() != 1) {
    throw UsageError("expected a single character, got '" + std::string(token) + "'");
  }
  return scalars.front();
}

std::string render(std::span<const Symbol> symbols) {
  std::string out;
  bool plain = true;
  for (Symbol c : symbols) {
    if (!printable(c)) {
      plain = false;
      break;
    }
  }
  if (plain) {
    for (Symbol c : symbols) append_utf8(out, c);
    return out;
  }
  out.push_back('[');
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += std::to_string(symbols[k]);
  }
  out.push_back(']');
  return out;
}

}  // namespace fest::text
