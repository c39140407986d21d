#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace fest::bench {

struct BenchRow {
  std::size_t n = 0;
  std::size_t ops = 0;
  double rotations_per_op = 0;
  double ns_per_op = 0;
  std::uint64_t lcp_calls = 0;
  std::uint64_t lcp_squaring_probes = 0;
  std::uint64_t lcp_equality_tests = 0;
};

/// Runs the mixed workload (10 n operations on a string of length n) for
/// each size. Counters depend only on (sizes, seed); times do not.
std::vector<BenchRow> run_suite(const std::vector<std::size_t>& sizes, std::uint64_t seed);

BenchRow run_mixed(std::size_t n, std::size_t ops, std::uint64_t seed);

void write_tsv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Median wall time (seconds) of make_string on n random symbols.
double median_build_seconds(std::size_t n, std::uint64_t seed, int repeats);

}  // namespace fest::bench
