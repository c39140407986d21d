// fest-bench: mixed-workload report as tab-separated values.

#include <iostream>

#include "CLI11.hpp"
#include "bench_suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run the mixed workload for each size and print a TSV report."};
  std::vector<std::size_t> sizes = {1u << 10, 1u << 11, 1u << 12, 1u << 13, 1u << 14, 1u << 15, 1u << 16};
  std::uint64_t seed = 1;
  app.add_option("--sizes", sizes, "String sizes, ascending")->delimiter(',');
  app.add_option("--seed", seed, "Random seed");
  CLI11_PARSE(app, argc, argv);
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    std::cerr << "error: --sizes must be ascending\n";
    return 1;
  }
  fest::bench::write_tsv(std::cout, fest::bench::run_suite(sizes, seed));
  return 0;
}
