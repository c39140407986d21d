// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. Pass criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bench_suite.hpp"
#include "fest/errors.hpp"
#include "fest/forest.hpp"
#include "fest/oracle.hpp"
#include "fest/script.hpp"
#include "fest/slot_map.hpp"
#include "fest/splay_tree.hpp"
#include "fest/workload.hpp"

namespace fest {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// 1 ------------------------------------------------------------------------

struct ReplayResult {
  std::size_t commands = 0;
  std::size_t mismatches = 0;
  std::string first;
};

std::string outcome(auto& interp, const Command& c) {
  try {
    auto out = interp.execute(c);
    return out ? "ok " + *out : "ok";
  } catch (const Error& e) {
    return std::string("error ") + typeid(e).name();
  }
}

bool mutates(Verb v) {
  switch (v) {
    case Verb::kAccess:
    case Verb::kRetrieve:
    case Verb::kEqual:
    case Verb::kLcp:
    case Verb::kEqualOmega:
    case Verb::kEqualOmegaOmega:
    case Verb::kLcpOmega:
      return false;
    default:
      return true;
  }
}

// Runs a script on the forest and on the oracle and compares every result
// and, after every mutation, the full content of each string it names. A
// query that damaged a string is caught at the next mutation of that string
// and by the final sweep.
ReplayResult replay(const std::vector<Command>& script, const InvolutionTable& inv, std::uint64_t seed) {
  ForestOptions options;
  options.seed = seed;
  options.involution = inv;
  Forest forest(std::move(options));
  OracleForest oracle(inv);
  Interpreter<Forest> a(forest);
  Interpreter<OracleForest> b(oracle);
  ReplayResult r;
  for (const Command& c : script) {
    ++r.commands;
    const std::string x = outcome(a, c);
    const std::string y = outcome(b, c);
    bool ok = x == y;
    if (ok && mutates(c.verb)) {
      for (const std::string& name : c.names) {
        auto p = a.lookup(name);
        auto q = b.lookup(name);
        if (p.has_value() != q.has_value() || (p && forest.retrieve(*p) != oracle.content(*q))) ok = false;
      }
    }
    if (!ok) {
      if (r.mismatches++ == 0) r.first = "line " + std::to_string(c.line) + ": " + format_command(c);
    }
  }
  for (StringId id : oracle.handles()) {
    if (!forest.contains(id) || forest.retrieve(id) != oracle.content(id)) {
      if (r.mismatches++ == 0) r.first = "final state of handle " + SlotMap<int>::describe(id);
    }
  }
  return r;
}

Verdict differential() {
  const auto t0 = Clock::now();
  WorkloadOptions opt;
  opt.op_count = 100000;
  opt.max_length = 10000;
  opt.alphabet = 256;
  opt.boundary_bias = 0.2;
  const InvolutionTable inv = InvolutionTable::adjacent_pairs(256);
  std::size_t commands = 0, mismatches = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ReplayResult r = replay(random_workload(seed, opt), inv, seed * 7919);
    commands += r.commands;
    if (r.mismatches && first.empty()) first = "seed " + std::to_string(seed) + " " + r.first;
    mismatches += r.mismatches;
  }
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = mismatches == 0 && commands == 10 * opt.op_count && secs <= 120;
  v.detail = std::to_string(commands) + " commands, " + std::to_string(mismatches) + " mismatches, " +
             fmt(secs, 1) + " s (limit 120 s)";
  if (!first.empty()) v.detail += ", first at " + first;
  return v;
}

// 2 ------------------------------------------------------------------------

Verdict audit_mode() {
  WorkloadOptions opt;
  opt.op_count = 10000;
  opt.max_length = 2000;
  opt.make_length = 100;
  opt.alphabet = 256;
  const InvolutionTable inv = InvolutionTable::adjacent_pairs(256);
  Forest forest(ForestOptions{.seed = 77, .involution = inv, .audit = true});
  Interpreter<Forest> interp(forest);
  std::size_t ran = 0;
  Verdict v;
  for (const Command& c : random_workload(2024, opt)) {
    try {
      interp.execute(c);
      ++ran;
    } catch (const AuditError& e) {
      v.pass = false;
      v.detail = "audit failed at line " + std::to_string(c.line) + ": " + e.what();
      return v;
    }
  }
  const AuditReport final_report = forest.audit();
  v.pass = final_report.ok && ran == opt.op_count;
  v.detail = std::to_string(ran) + " operations audited, " + std::to_string(final_report.nodes) + " live nodes";
  return v;
}

// 3 ------------------------------------------------------------------------

Verdict isolate_contract() {
  std::mt19937_64 rng(303);
  TreeStore st(FingerprintContext::from_seed(5), InvolutionTable::adjacent_pairs(16));
  std::vector<Symbol> model(3000);
  for (Symbol& c : model) c = rng() % 16;
  NodeId root = st.build_balanced(model);
  std::size_t worst_depth = 0, bad_slices = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = model.size();
    std::size_t i = rng() % n + 1, j = rng() % n + 1;
    if (i > j) std::swap(i, j);
    if (t % 7 == 0) {
      i = 1;
    } else if (t % 11 == 0) {
      j = n;
    }
    const Isolation iso = st.isolate(root, i, j);
    worst_depth = std::max(worst_depth, st.depth(iso.node));
    std::vector<Symbol> got;
    st.collect(iso.node, got);
    if (!std::equal(got.begin(), got.end(), model.begin() + (i - 1), model.begin() + j) || got.size() != j - i + 1) {
      ++bad_slices;
    }
    // Vary the shape and the pending flags between samples.
    if (t % 3 == 0) {
      st.toggle(iso, true, t % 2 == 0);
      std::reverse(model.begin() + (i - 1), model.begin() + j);
      if (t % 2 == 0) {
        for (std::size_t k = i - 1; k < j; ++k) model[k] ^= 1;
      }
    } else if (t % 5 == 1) {
      st.find(root, rng() % n + 1);
    }
  }
  Verdict v;
  v.pass = worst_depth <= 2 && bad_slices == 0 && st.audit(root).ok;
  v.detail = "10000 samples, max ancestors " + std::to_string(worst_depth) + ", slice mismatches " +
             std::to_string(bad_slices);
  return v;
}

// 4 ------------------------------------------------------------------------

Verdict bulk_load() {
  TreeStore st(FingerprintContext::from_seed(9), {});
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 1024; ++n) {
    std::vector<Symbol> w(n, 1);
    const NodeId root = st.build_balanced(w);
    const auto bound = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n + 1))));
    if (st.height(root) > bound) ++bad;
    st.release(root);
  }
  constexpr std::size_t kN = std::size_t{1} << 20;
  // Warm the allocator so the first run does not pay for page faults alone.
  bench::median_build_seconds(kN, 11, 1);
  const double t1 = bench::median_build_seconds(kN, 11, 7);
  const double t2 = bench::median_build_seconds(2 * kN, 11, 7);
  const double ratio = t2 / t1;
  Verdict v;
  v.pass = bad == 0 && ratio >= 1.6 && ratio <= 2.6;
  v.detail = "height violations " + std::to_string(bad) + " for n=1..1024; build 2^20 " + fmt(t1 * 1e3, 1) +
             " ms, 2^21 " + fmt(t2 * 1e3, 1) + " ms, ratio " + fmt(ratio, 2) + " (want [1.6, 2.6])";
  return v;
}

// 5 ------------------------------------------------------------------------

std::size_t probe_bound(std::size_t ell) {
  const double ll = std::log2(std::log2(static_cast<double>(ell)));
  return 2 + static_cast<std::size_t>(std::ceil(ll - 1e-12)) + 1;
}

Verdict lcp_probes() {
  std::mt19937_64 rng(505);
  auto random = [&](std::size_t n) {
    std::vector<Symbol> w(n);
    for (Symbol& c : w) c = rng() % 4;
    return w;
  };
  std::size_t calls = 0, violations = 0, wrong = 0, changed = 0;
  std::string worst;
  for (std::size_t ell : {std::size_t{4}, std::size_t{64}, std::size_t{4096}}) {
    const std::size_t bound = probe_bound(ell);
    std::size_t max_seen = 0;
    for (int rep = 0; rep < 40; ++rep) {
      Forest forest(ForestOptions{.seed = 1000 + static_cast<std::uint64_t>(rep)});
      const std::vector<Symbol> common = random(ell);
      const std::size_t pre1 = rng() % 300, pre2 = rng() % 300;
      std::vector<Symbol> x = random(pre1), y = random(pre2);
      x.insert(x.end(), common.begin(), common.end());
      y.insert(y.end(), common.begin(), common.end());
      // Force a mismatch right after the planted prefix.
      x.push_back(4);
      y.push_back(5);
      const std::vector<Symbol> tail1 = random(rng() % 5000), tail2 = random(rng() % 5000);
      x.insert(x.end(), tail1.begin(), tail1.end());
      y.insert(y.end(), tail2.begin(), tail2.end());

      // Three layouts: two strings, both copies in one string, and circular.
      std::vector<Symbol> both = x;
      both.insert(both.end(), y.begin(), y.end());
      const StringId a = forest.make_string(x);
      const StringId b = forest.make_string(y);
      const StringId s = forest.make_string(both);
      const StringId c = forest.make_string(x, Mode::kCircular);
      const StringId d = forest.make_string(y, Mode::kCircular);
      forest.rotate(c, 1 + rng() % x.size());
      struct Call {
        StringId s1;
        std::size_t i1;
        StringId s2;
        std::size_t i2;
      };
      const std::vector<Call> calls_here = {
          {a, pre1 + 1, b, pre2 + 1},
          {b, pre2 + 1, a, pre1 + 1},
          {s, pre1 + 1, s, x.size() + pre2 + 1},
          {s, x.size() + pre2 + 1, s, pre1 + 1},
          {c, pre1 + 1, d, pre2 + 1},
      };
      for (const Call& q : calls_here) {
        const std::vector<Symbol> before1 = forest.retrieve(q.s1), before2 = forest.retrieve(q.s2);
        const LcpResult r = forest.lcp(q.s1, q.i1, q.s2, q.i2);
        ++calls;
        if (r.length != ell) ++wrong;
        const LcpProbes& p = forest.stats().last_lcp;
        // ell_0 = 2 plus every squaring step.
        const std::size_t step1 = 1 + p.squaring;
        max_seen = std::max(max_seen, step1);
        if (step1 > bound) ++violations;
        if (forest.retrieve(q.s1) != before1 || forest.retrieve(q.s2) != before2) ++changed;
      }
      if (!forest.audit().ok) ++changed;
    }
    worst += (worst.empty() ? "" : ", ") + std::string("l=") + std::to_string(ell) + " max " +
             std::to_string(max_seen) + "/" + std::to_string(bound);
  }
  Verdict v;
  v.pass = violations == 0 && wrong == 0 && changed == 0;
  v.detail = std::to_string(calls) + " calls, probe violations " + std::to_string(violations) + " (" + worst +
             "), wrong lengths " + std::to_string(wrong) + ", altered strings " + std::to_string(changed);
  return v;
}

// 6 ------------------------------------------------------------------------

Symbol complement(Symbol c) {
  switch (c) {
    case 'A':
      return 'T';
    case 'T':
      return 'A';
    case 'C':
      return 'G';
    case 'G':
      return 'C';
  }
  return c;
}

Verdict lazy_laws() {
  std::mt19937_64 rng(606);
  const char* bases = "ACGT";
  const InvolutionTable dna = InvolutionTable::dna();
  Forest forest(ForestOptions{.seed = 66, .involution = dna});
  OracleForest oracle(dna);
  std::vector<StringId> ids;
  for (int k = 0; k < 3; ++k) {
    std::vector<Symbol> w(500 + rng() % 500);
    for (Symbol& c : w) c = bases[rng() % 4];
    const Mode mode = k == 2 ? Mode::kCircular : Mode::kLinear;
    const StringId id = forest.make_string(w, mode);
    oracle.make_string(w, mode);
    ids.push_back(id);
  }
  std::size_t lazy_ops = 0, failures = 0;
  auto pos = [&](std::size_t n) { return rng() % n + 1; };
  while (lazy_ops < 10000) {
    const StringId s = ids[rng() % ids.size()];
    const std::size_t n = forest.length(s);
    const int r = static_cast<int>(rng() % 10);
    if (r < 3) {
      // Edits in between.
      const int e = static_cast<int>(rng() % 3);
      if (e == 0 && n < 2000) {
        const std::size_t i = pos(n + 1);
        const Symbol c = bases[rng() % 4];
        forest.insert(s, i, c);
        oracle.insert(s, i, c);
      } else if (e == 1 && n > 100) {
        const std::size_t i = pos(n);
        forest.erase(s, i);
        oracle.erase(s, i);
      } else {
        const std::size_t i = pos(n);
        const Symbol c = bases[rng() % 4];
        forest.substitute(s, i, c);
        oracle.substitute(s, i, c);
      }
      continue;
    }
    std::size_t i = pos(n), j = pos(n);
    if (forest.mode(s) == Mode::kLinear && i > j) std::swap(i, j);
    const std::vector<Symbol> before = forest.retrieve(s);
    if (r < 5) {
      // Involution laws: applying the same operation twice is the identity.
      const bool rev = r == 3;
      for (int k = 0; k < 2; ++k) {
        if (rev) {
          forest.reverse(s, i, j);
        } else {
          forest.map(s, i, j);
        }
        ++lazy_ops;
      }
      if (forest.retrieve(s) != before) ++failures;
    } else {
      // Reverse complement against the oracle and a direct computation.
      std::vector<Symbol> piece = forest.retrieve(s, i, j);
      std::reverse(piece.begin(), piece.end());
      for (Symbol& c : piece) c = complement(c);
      forest.reverse(s, i, j);
      forest.map(s, i, j);
      oracle.reverse(s, i, j);
      oracle.map(s, i, j);
      lazy_ops += 2;
      if (forest.retrieve(s) != oracle.content(s)) ++failures;
      if (forest.retrieve(s, i, j) != piece) ++failures;
    }
  }
  for (StringId s : ids) {
    if (forest.retrieve(s) != oracle.content(s)) ++failures;
  }
  Verdict v;
  v.pass = failures == 0 && forest.audit().ok;
  v.detail = std::to_string(lazy_ops) + " reverse/map operations, " + std::to_string(failures) + " failures";
  return v;
}

// 7 ------------------------------------------------------------------------

Verdict omega_algebra() {
  std::mt19937_64 rng(707);
  const FingerprintContext ctx = FingerprintContext::from_seed(17);
  const Residue p = ctx.modulus();
  std::size_t geo_bad = 0, pow_bad = 0, omega_bad = 0, infinite = 0;
  for (int t = 0; t < 100; ++t) {
    const Residue d = t < 3 ? static_cast<Residue>(t) : rng() % p;
    Residue sum = 0, term = 1;
    for (std::uint64_t k = 0; k <= 10000; ++k) {
      sum = static_cast<Residue>((static_cast<unsigned __int128>(sum) + term) % p);
      if (ctx.geomsum(d, k) != sum) ++geo_bad;
      term = static_cast<Residue>(static_cast<unsigned __int128>(term) * d % p);
    }
  }
  for (std::size_t len = 0; len <= 16; ++len) {
    std::vector<Symbol> u(len);
    for (Symbol& c : u) c = rng() % 256;
    const Fp base = ctx.eval(u);
    std::vector<Symbol> rep;
    for (std::uint64_t k = 0; k <= 256; ++k) {
      if (ctx.power_fp(base, k) != ctx.eval(rep)) ++pow_bad;
      rep.insert(rep.end(), u.begin(), u.end());
    }
  }
  Forest forest(ForestOptions{.seed = 71});
  OracleForest oracle;
  std::vector<StringId> ids;
  for (int k = 0; k < 40; ++k) {
    std::vector<Symbol> w;
    if (k % 2 == 0) {
      // Powers of a few short roots, so that infinite matches are common.
      std::vector<Symbol> root(1 + rng() % 3);
      for (Symbol& c : root) c = 'a' + rng() % 2;
      const std::size_t reps = 1 + rng() % 4;
      for (std::size_t r = 0; r < reps; ++r) w.insert(w.end(), root.begin(), root.end());
    } else {
      w.resize(1 + rng() % 12);
      for (Symbol& c : w) c = 'a' + rng() % 2;
    }
    const StringId id = forest.make_string(w, Mode::kCircular);
    oracle.make_string(w, Mode::kCircular);
    ids.push_back(id);
  }
  for (int t = 0; t < 10000; ++t) {
    const StringId a = ids[rng() % ids.size()];
    const StringId b = ids[rng() % ids.size()];
    const std::size_t n1 = oracle.length(a), n2 = oracle.length(b);
    const std::size_t i1 = rng() % n1 + 1, i2 = rng() % n2 + 1;
    if (t % 5 == 0) forest.rotate(a, rng() % n1 + 1);
    switch (t % 3) {
      case 0: {
        const OmegaLcpResult r = forest.lcp_omega(a, i1, b, i2);
        if (r.length.is_infinite()) ++infinite;
        if (r != oracle.lcp_omega(a, i1, b, i2)) ++omega_bad;
        break;
      }
      case 1: {
        const std::size_t l = rng() % (2 * (n1 + n2) + 1);
        if (forest.equal_omega(a, i1, b, i2, l) != oracle.equal_omega(a, i1, b, i2, l)) ++omega_bad;
        break;
      }
      default: {
        const std::size_t l1 = 1 + rng() % (2 * n1);
        const std::size_t l2 = t % 2 ? l1 * (1 + rng() % 3) : 1 + rng() % (2 * n2);
        if (forest.equal_omega_omega(a, i1, l1, b, i2, l2) != oracle.equal_omega_omega(a, i1, l1, b, i2, l2)) {
          ++omega_bad;
        }
        break;
      }
    }
  }
  Verdict v;
  v.pass = geo_bad == 0 && pow_bad == 0 && omega_bad == 0 && infinite > 0;
  v.detail = "geomsum mismatches " + std::to_string(geo_bad) + ", power_fp mismatches " + std::to_string(pow_bad) +
             ", omega mismatches " + std::to_string(omega_bad) + " of 10000 (" + std::to_string(infinite) +
             " infinite lcp)";
  return v;
}

// 8 ------------------------------------------------------------------------

Verdict amortized_trend() {
  std::vector<std::size_t> sizes;
  for (int e = 10; e <= 16; ++e) sizes.push_back(std::size_t{1} << e);
  const std::vector<bench::BenchRow> rows = bench::run_suite(sizes, 808);
  double worst = 0;
  std::string series;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    series += (k ? " " : "") + fmt(rows[k].rotations_per_op, 2);
    if (k > 0) worst = std::max(worst, rows[k].rotations_per_op / rows[k - 1].rotations_per_op);
  }
  Verdict v;
  v.pass = worst <= 1.35;
  v.detail = "rotations/op " + series + ", max ratio " + fmt(worst, 3) + " (limit 1.35)";
  return v;
}

// 9 ------------------------------------------------------------------------

Verdict cli_conformance(const std::filesystem::path& corpus) {
  std::istringstream in(
      "MAKE s mississippi\n"
      "EXTRACT s 9 11 t\n"
      "RETRIEVE t 1 3\n"
      "INTRO s 1 t\n"
      "RETRIEVE s 1 11\n");
  std::ostringstream out, err;
  const int code = run_script(in, out, err, ScriptConfig{});
  const bool scenario = code == exit_code::kOk && out.str() == "ppi\nppimississi\n";

  InvolutionTable inv;
  std::ifstream inv_file(corpus / "pairs256.inv");
  if (inv_file) inv = InvolutionTable::parse(inv_file);
  std::vector<std::filesystem::path> scripts;
  if (std::filesystem::is_directory(corpus)) {
    for (const auto& entry : std::filesystem::directory_iterator(corpus)) {
      if (entry.path().extension() == ".fest") scripts.push_back(entry.path());
    }
  }
  std::sort(scripts.begin(), scripts.end());
  std::size_t failed = 0;
  std::string first;
  for (const auto& path : scripts) {
    std::ifstream script(path);
    std::ostringstream sink, diag;
    ScriptConfig config;
    config.shadow = true;
    config.involution = inv;
    if (run_script(script, sink, diag, config) != exit_code::kOk) {
      if (failed++ == 0) first = path.filename().string() + ": " + diag.str().substr(0, 200);
    }
  }
  Verdict v;
  v.pass = scenario && !scripts.empty() && failed == 0;
  v.detail = std::string("mississippi scenario ") + (scenario ? "ok" : "wrong: " + out.str()) + ", shadow corpus " +
             std::to_string(scripts.size() - failed) + "/" + std::to_string(scripts.size()) + " scripts exit 0";
  if (!first.empty()) v.detail += ", first failure " + first;
  return v;
}

}  // namespace
}  // namespace fest

int main(int argc, char** argv) {
  CLI::App app{"fest acceptance checks"};
  std::vector<int> only;
  std::string corpus = FEST_CORPUS_DIR;
  app.add_option("criteria", only, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 9));
  app.add_option("--corpus", corpus, "Directory of shadow-mode scripts");
  CLI11_PARSE(app, argc, argv);

  using fest::Verdict;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"differential suite", fest::differential},
      {"aggregate audit", fest::audit_mode},
      {"isolate contract", fest::isolate_contract},
      {"bulk-load shape", fest::bulk_load},
      {"lcp probe bound", fest::lcp_probes},
      {"lazy-op laws", fest::lazy_laws},
      {"omega algebra", fest::omega_algebra},
      {"amortized trend", fest::amortized_trend},
      {"cli conformance", [&] { return fest::cli_conformance(corpus); }},
  };
  const std::set<int> wanted(only.begin(), only.end());
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k + 1);
    if (!wanted.empty() && !wanted.count(number)) continue;
    const auto t0 = fest::Clock::now();
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.pass;
    std::printf("%s %d %s: %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", number, criteria[k].first.c_str(),
                v.detail.c_str(), fest::seconds_since(t0));
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
