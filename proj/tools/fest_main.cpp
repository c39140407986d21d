// fest: replays an operation script against a forest of dynamic strings.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fest/script.hpp"

namespace {

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Replay a dynamic-string script (stdin or FILE); queries print one line each."};
  std::optional<std::uint64_t> seed;
  std::string involution_path;
  std::string script_path;
  fest::ScriptConfig config;
  app.add_option("--seed", seed, "Seed for the fingerprint base (env FEST_SEED)");
  app.add_option("--involution", involution_path, "File of 'codeA codeB' pairs (env FEST_INVOLUTION)");
  app.add_flag("--shadow-oracle", config.shadow, "Check every step against the brute-force oracle");
  app.add_flag("--stats", config.stats, "Print instrumentation counters to stderr");
  app.add_flag("--audit", config.audit, "Recompute tree aggregates after every operation");
  app.add_option("script", script_path, "Script file (default: stdin)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fest::exit_code::kParse;
  }

  try {
    if (seed) {
      config.seed = *seed;
    } else if (auto v = env("FEST_SEED")) {
      config.seed = fest::text::parse_u64(*v);
    }
    if (involution_path.empty()) {
      if (auto v = env("FEST_INVOLUTION")) involution_path = *v;
    }
    if (!involution_path.empty()) {
      std::ifstream in(involution_path);
      if (!in) throw fest::UsageError("cannot open involution file " + involution_path);
      config.involution = fest::InvolutionTable::parse(in);
    }
  } catch (const fest::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fest::exit_code::kParse;
  }

  if (script_path.empty()) return fest::run_script(std::cin, std::cout, std::cerr, config);
  std::ifstream in(script_path);
  if (!in) {
    std::cerr << "error: cannot open " << script_path << "\n";
    return fest::exit_code::kParse;
  }
  return fest::run_script(in, std::cout, std::cerr, config);
}
