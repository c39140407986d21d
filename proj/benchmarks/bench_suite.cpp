#include "bench_suite.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>

#include "fest/forest.hpp"

namespace fest::bench {
namespace {

using Clock = std::chrono::steady_clock;

std::vector<Symbol> random_symbols(std::size_t n, std::mt19937_64& rng, Symbol alphabet) {
  std::uniform_int_distribution<Symbol> d(0, alphabet - 1);
  std::vector<Symbol> w(n);
  for (Symbol& c : w) c = d(rng);
  return w;
}

}  // namespace

BenchRow run_mixed(std::size_t n, std::size_t ops, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (n * 0x9e3779b97f4a7c15ull));
  ForestOptions options;
  options.seed = seed;
  options.involution = InvolutionTable::adjacent_pairs(256);
  Forest forest(std::move(options));
  // A small alphabet keeps some lcp values non-trivial.
  const StringId s = forest.make_string(random_symbols(n, rng, 4));
  forest.reset_stats();

  auto pos = [&](std::size_t hi) { return std::uniform_int_distribution<std::size_t>(1, hi)(rng); };
  std::uniform_int_distribution<int> kind(0, 99);
  std::uniform_int_distribution<Symbol> sym(0, 3);

  const auto t0 = Clock::now();
  for (std::size_t k = 0; k < ops; ++k) {
    const std::size_t len = forest.length(s);
    const int r = kind(rng);
    if (r < 25) {
      forest.access(s, pos(len));
    } else if (r < 35) {
      forest.substitute(s, pos(len), sym(rng));
    } else if (r < 45) {
      forest.insert(s, pos(len + 1), sym(rng));
    } else if (r < 55) {
      forest.erase(s, pos(len));
    } else if (r < 75) {
      std::size_t i = pos(len), j = pos(len);
      if (i > j) std::swap(i, j);
      if (r < 65) {
        forest.reverse(s, i, j);
      } else {
        forest.map(s, i, j);
      }
    } else if (r < 85) {
      const std::size_t l = std::min<std::size_t>(pos(64), len);
      forest.equal(s, pos(len - l + 1), s, pos(len - l + 1), l);
    } else if (r < 95) {
      forest.lcp(s, pos(len), s, pos(len));
    } else {
      std::size_t i = pos(len), j = pos(len);
      if (i > j) std::swap(i, j);
      const StringId piece = forest.extract(s, i, j);
      forest.introduce(s, pos(forest.length(s) + 1), piece);
    }
  }
  const auto t1 = Clock::now();

  const Stats st = forest.stats();
  BenchRow row;
  row.n = n;
  row.ops = ops;
  row.rotations_per_op = static_cast<double>(st.rotations) / static_cast<double>(ops);
  row.ns_per_op = std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(ops);
  row.lcp_calls = st.lcp_calls;
  row.lcp_squaring_probes = st.lcp_squaring_probes;
  row.lcp_equality_tests = st.lcp_equality_tests;
  return row;
}

std::vector<BenchRow> run_suite(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) rows.push_back(run_mixed(n, 10 * n, seed));
  return rows;
}

void write_tsv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n\tops\trotations_per_op\tns_per_op\tlcp_calls\tlcp_squaring_probes\tlcp_equality_tests\n";
  for (const BenchRow& r : rows) {
    out << r.n << '\t' << r.ops << '\t' << r.rotations_per_op << '\t' << r.ns_per_op << '\t' << r.lcp_calls
        << '\t' << r.lcp_squaring_probes << '\t' << r.lcp_equality_tests << '\n';
  }
}

double median_build_seconds(std::size_t n, std::uint64_t seed, int repeats) {
  std::mt19937_64 rng(seed);
  const std::vector<Symbol> w = random_symbols(n, rng, 256);
  std::vector<double> times;
  for (int k = 0; k < repeats; ++k) {
    Forest forest(ForestOptions{.seed = seed});
    const auto t0 = Clock::now();
    forest.make_string(w);
    const auto t1 = Clock::now();
    times.push_back(std::chrono::duration<double>(t1 - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace fest::bench
