#pragma once

// Generic longest-common-prefix search over a pair of sequences that can be
// compared by prefix fingerprints.
//
// A Pair provides
//   bool equal(size_t l)       prefixes of length l match (one-sided: a false
//                              answer is exact)
//   int compare_at(size_t l)   sign of a[l+1] - b[l+1]
//   void narrow(size_t len)    move both prefixes of length len into small
//                              trees of their own, so later probes are cheap
//   void widen()               undo narrow
// Probes issued while narrowed stay below the narrowed length.

#include <cmath>
#include <cstddef>
#include <tuple>
#include <utility>

#include "fest/stats.hpp"

namespace fest::detail {

/// 2^ceil((log2 n)^(2/3)), at least 2.
inline std::size_t hit_twice_length(std::size_t n) {
  if (n < 2) return 2;
  double e = std::ceil(std::pow(std::log2(static_cast<double>(n)), 2.0 / 3.0));
  if (e < 1) e = 1;
  if (e >= 62) return std::size_t{1} << 62;
  return std::size_t{1} << static_cast<unsigned>(e);
}

struct LcpOutcome {
  std::size_t length = 0;
  /// The whole compared range (limit symbols) matched.
  bool exhausted = false;
  /// Sign of the first mismatch; 0 when exhausted.
  int sign = 0;
};

template <class Pair>
class Narrowed {
 public:
  Narrowed(Pair& pair, std::size_t len) : pair_(pair) { pair_.narrow(len); }
  ~Narrowed() { pair_.widen(); }
  Narrowed(const Narrowed&) = delete;
  Narrowed& operator=(const Narrowed&) = delete;

 private:
  Pair& pair_;
};

/// Runs ell_0 = lo, ell_k = min(cap, ell_{k-1}^2) until a probe fails.
/// Returns (lo, hi) with equal(lo) known true and equal(hi) known false; the
/// probe at cap is skipped because the caller already knows it fails.
template <class Eq>
std::pair<std::size_t, std::size_t> squaring(Eq&& eq, std::size_t lo, std::size_t cap, LcpProbes& probes) {
  for (;;) {
    std::size_t next = lo > cap / lo ? cap : lo * lo;
    if (next >= cap) return {lo, cap};
    ++probes.squaring;
    if (!eq(next)) return {lo, next};
    lo = next;
  }
}

/// lcp of two sequences of which at most `limit` symbols are compared.
/// `total` is the size parameter n of the hitting-twice threshold.
template <class Pair>
LcpOutcome run_lcp(Pair& pair, std::size_t limit, std::size_t total, LcpProbes& probes) {
  auto eq = [&](std::size_t l) {
    ++probes.equality_tests;
    return pair.equal(l);
  };
  if (limit == 0) return {0, true, 0};
  if (eq(limit)) return {limit, true, 0};
  if (limit <= 2 || !eq(2)) {
    int s = pair.compare_at(0);
    if (s != 0) return {0, false, s};
    return {1, false, pair.compare_at(1)};
  }

  // Crude upper bound hi, with lo <= lcp < hi.
  std::size_t lo, hi;
  const std::size_t threshold = hit_twice_length(total);
  if (threshold < limit && !eq(threshold)) {
    Narrowed<Pair> guard(pair, threshold);
    std::tie(lo, hi) = squaring(eq, 2, threshold, probes);
  } else {
    std::tie(lo, hi) = squaring(eq, 2, limit, probes);
  }

  Narrowed<Pair> guard(pair, hi);
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (eq(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, false, pair.compare_at(lo)};
}

}  // namespace fest::detail
