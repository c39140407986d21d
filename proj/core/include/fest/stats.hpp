#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace fest {

enum class OpKind : std::uint8_t {
  kMakeString,
  kAccess,
  kRetrieve,
  kSubstitute,
  kInsert,
  kErase,
  kIntroduce,
  kExtract,
  kEqual,
  kLcp,
  kReverse,
  kMap,
  kRotate,
  kCircularFp,
  kEqualOmega,
  kEqualOmegaOmega,
  kLcpOmega,
};

inline constexpr std::size_t kOpKindCount = 17;

std::string_view op_name(OpKind op) noexcept;

struct OpStats {
  std::uint64_t calls = 0;
  std::uint64_t rotations = 0;
};

/// Probe counts of a single lcp / lcp_omega call.
struct LcpProbes {
  /// Equality tests made by the squaring sequence (ell_1, ell_2, ...), i.e.
  /// excluding the border-case and hitting-twice probes.
  std::uint64_t squaring = 0;
  /// Every fingerprint comparison the call made.
  std::uint64_t equality_tests = 0;
  std::size_t length = 0;
};

struct Stats {
  std::uint64_t rotations = 0;
  std::uint64_t splays = 0;
  std::uint64_t fixes = 0;
  std::array<OpStats, kOpKindCount> per_op{};
  std::uint64_t lcp_calls = 0;
  std::uint64_t lcp_squaring_probes = 0;
  std::uint64_t lcp_equality_tests = 0;
  LcpProbes last_lcp;

  const OpStats& op(OpKind k) const noexcept { return per_op[static_cast<std::size_t>(k)]; }
};

}  // namespace fest
