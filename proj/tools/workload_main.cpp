// fest-workload: writes a deterministic random script for the fest tool.

#include <iostream>

#include "CLI11.hpp"
#include "fest/workload.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a random, valid operation script."};
  std::uint64_t seed = 1;
  fest::WorkloadOptions opt;
  std::uint32_t alphabet = opt.alphabet;
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--ops", opt.op_count, "Number of commands");
  app.add_option("--strings", opt.max_strings, "Maximum number of live strings");
  app.add_option("--max-length", opt.max_length, "Maximum string length");
  app.add_option("--make-length", opt.make_length, "Typical length of new strings");
  app.add_option("--alphabet", alphabet, "Alphabet size (<= 26 uses letters)");
  CLI11_PARSE(app, argc, argv);
  opt.alphabet = alphabet;

  for (const fest::Command& c : fest::random_workload(seed, opt)) std::cout << fest::format_command(c) << "\n";
  return 0;
}
