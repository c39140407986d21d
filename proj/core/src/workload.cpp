#include "fest/workload.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "fest/oracle.hpp"

namespace fest {

std::array<double, kVerbCount> WorkloadOptions::default_weights() {
  std::array<double, kVerbCount> w{};
  auto set = [&](Verb v, double x) { w[static_cast<std::size_t>(v)] = x; };
  set(Verb::kMake, 2);
  set(Verb::kMakeCircular, 1);
  set(Verb::kMakeNumeric, 2);
  set(Verb::kMakeNumericCircular, 1);
  set(Verb::kAccess, 6);
  set(Verb::kRetrieve, 4);
  set(Verb::kSubstitute, 6);
  set(Verb::kInsert, 8);
  set(Verb::kDelete, 6);
  set(Verb::kIntroduce, 3);
  set(Verb::kExtract, 3);
  set(Verb::kEqual, 8);
  set(Verb::kLcp, 8);
  set(Verb::kReverse, 6);
  set(Verb::kMap, 6);
  set(Verb::kRotate, 3);
  set(Verb::kEqualOmega, 3);
  set(Verb::kEqualOmegaOmega, 3);
  set(Verb::kLcpOmega, 3);
  return w;
}

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const WorkloadOptions& opt) : opt_(opt), rng_(seed), interp_(oracle_) {}

  std::vector<Command> run() {
    std::vector<Command> out;
    const auto& w = opt_.weights;
    if (std::all_of(w.begin(), w.end(), [](double x) { return x <= 0; })) return out;
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
    std::size_t attempts = 0;
    while (out.size() < opt_.op_count && attempts < 50 * opt_.op_count + 100) {
      ++attempts;
      Command c;
      c.verb = static_cast<Verb>(pick(rng_));
      if (!generate(c)) continue;
      c.line = out.size() + 1;
      try {
        interp_.execute(c);
      } catch (const Error& e) {
        throw std::logic_error("workload generator emitted an invalid command '" + format_command(c) +
                               "': " + e.what());
      }
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  /// Index in [lo, hi], over-weighting the ends.
  std::size_t index(std::size_t lo, std::size_t hi) {
    if (hi <= lo) return lo;
    if (chance(opt_.boundary_bias)) {
      switch (uniform(0, 3)) {
        case 0:
          return lo;
        case 1:
          return hi;
        case 2:
          return lo + 1;
        default:
          return hi - 1;
      }
    }
    return uniform(lo, hi);
  }

  Symbol symbol() {
    const Symbol r = static_cast<Symbol>(uniform(0, opt_.alphabet - 1));
    return opt_.alphabet <= 26 ? 'a' + r : r;
  }

  std::string name_of(std::size_t k) const { return "s" + std::to_string(k); }

  std::vector<std::string> live(Mode* mode = nullptr, bool nonempty = false) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < opt_.max_strings; ++k) {
      auto id = interp_.lookup(name_of(k));
      if (!id) continue;
      if (mode && oracle_.mode(*id) != *mode) continue;
      if (nonempty && oracle_.length(*id) == 0) continue;
      out.push_back(name_of(k));
    }
    return out;
  }

  std::optional<std::string> free_name() {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < opt_.max_strings; ++k) {
      if (!interp_.lookup(name_of(k))) names.push_back(name_of(k));
    }
    if (names.empty()) return std::nullopt;
    return names[uniform(0, names.size() - 1)];
  }

  const std::string& any(const std::vector<std::string>& v) { return v[uniform(0, v.size() - 1)]; }

  StringId id(const std::string& name) { return *interp_.lookup(name); }
  std::size_t len(const std::string& name) { return oracle_.length(id(name)); }
  bool circular(const std::string& name) { return oracle_.mode(id(name)) == Mode::kCircular; }

  std::vector<Symbol> content(bool nonempty) {
    std::size_t n = chance(0.05) ? 0 : uniform(1, std::max<std::size_t>(1, 2 * opt_.make_length));
    n = std::min(n, opt_.max_length);
    if (nonempty) n = std::max<std::size_t>(n, 1);
    std::vector<Symbol> w;
    const std::vector<std::string> existing = live(nullptr, true);
    const double style = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (style < 0.3 && !existing.empty()) {
      // Planted copy of a substring, optionally with one changed symbol.
      const std::vector<Symbol>& src = oracle_.content(id(any(existing)));
      const std::size_t a = uniform(0, src.size() - 1);
      const std::size_t b = std::min(src.size(), a + n);
      w.assign(src.begin() + static_cast<std::ptrdiff_t>(a), src.begin() + static_cast<std::ptrdiff_t>(b));
      if (!w.empty() && chance(0.5)) w[uniform(0, w.size() - 1)] = symbol();
    } else if (style < 0.55) {
      std::vector<Symbol> word(uniform(1, 4));
      for (Symbol& c : word) c = symbol();
      for (std::size_t k = 0; k < n; ++k) w.push_back(word[k % word.size()]);
    } else {
      for (std::size_t k = 0; k < n; ++k) w.push_back(symbol());
    }
    return w;
  }

  /// Range [i..j] of a non-empty string, wrapping allowed when circular.
  void range(const std::string& s, Command& c) {
    const std::size_t n = len(s);
    const std::size_t i = index(1, n);
    const std::size_t j = circular(s) ? index(1, n) : index(i, n);
    c.nums = {i, j};
  }

  /// Two names (possibly equal) among candidates.
  std::pair<std::string, std::string> pair_of(const std::vector<std::string>& v, double same) {
    const std::string a = any(v);
    if (chance(same)) return {a, a};
    return {a, any(v)};
  }

  bool generate(Command& c) {
    Mode circ = Mode::kCircular;
    switch (c.verb) {
      case Verb::kMake:
      case Verb::kMakeCircular:
      case Verb::kMakeNumeric:
      case Verb::kMakeNumericCircular: {
        auto name = free_name();
        if (!name) return false;
        const bool literal = c.verb == Verb::kMake || c.verb == Verb::kMakeCircular;
        if (literal && opt_.alphabet > 26) return false;
        c.names = {*name};
        c.symbols = content(literal);
        return true;
      }
      case Verb::kAccess:
      case Verb::kSubstitute:
      case Verb::kDelete: {
        auto v = live(nullptr, true);
        if (v.empty()) return false;
        const std::string& s = any(v);
        c.names = {s};
        c.nums = {index(1, len(s))};
        if (c.verb == Verb::kSubstitute) c.symbols = {symbol()};
        return true;
      }
      case Verb::kInsert: {
        std::vector<std::string> v;
        for (const std::string& s : live()) {
          if (len(s) < opt_.max_length) v.push_back(s);
        }
        if (v.empty()) return false;
        const std::string& s = any(v);
        c.names = {s};
        c.nums = {index(1, len(s) + 1)};
        c.symbols = {symbol()};
        return true;
      }
      case Verb::kRetrieve: {
        auto v = live();
        if (v.empty()) return false;
        const std::string& s = any(v);
        const std::size_t n = len(s);
        c.names = {s};
        if (n == 0) {
          c.nums = {1, 0};
        } else if (circular(s)) {
          range(s, c);
        } else {
          const std::size_t i = index(1, n + 1);
          c.nums = {i, index(i - 1, n)};
        }
        return true;
      }
      case Verb::kIntroduce: {
        auto v = live();
        if (v.size() < 2) return false;
        auto [a, b] = pair_of(v, 0);
        if (a == b || len(a) + len(b) > opt_.max_length) return false;
        c.names = {a, b};
        c.nums = {index(1, len(a) + 1)};
        return true;
      }
      case Verb::kExtract: {
        auto v = live(nullptr, true);
        auto name = free_name();
        if (v.empty() || !name) return false;
        const std::string& s = any(v);
        c.names = {s, *name};
        range(s, c);
        return true;
      }
      case Verb::kReverse:
      case Verb::kMap: {
        auto v = live(nullptr, true);
        if (v.empty()) return false;
        const std::string& s = any(v);
        c.names = {s};
        range(s, c);
        return true;
      }
      case Verb::kRotate: {
        auto v = live(&circ, true);
        if (v.empty()) return false;
        const std::string& s = any(v);
        c.names = {s};
        c.nums = {index(1, len(s))};
        return true;
      }
      case Verb::kEqual: {
        auto v = live();
        if (v.empty()) return false;
        auto [a, b] = pair_of(v, 0.3);
        const std::size_t na = len(a), nb = len(b);
        const std::size_t i1 = na == 0 ? 1 : index(1, circular(a) ? na : na + 1);
        const std::size_t i2 = nb == 0 ? 1 : index(1, circular(b) ? nb : nb + 1);
        const std::size_t room1 = circular(a) ? na : na + 1 - i1;
        const std::size_t room2 = circular(b) ? nb : nb + 1 - i2;
        const std::size_t room = std::min(room1, room2);
        std::size_t l;
        if (chance(0.5)) {
          // Aim at the boundary between equal and unequal.
          const std::vector<Symbol>& x = oracle_.content(id(a));
          const std::vector<Symbol>& y = oracle_.content(id(b));
          std::size_t m = 0;
          while (m < room && x[(i1 - 1 + m) % na] == y[(i2 - 1 + m) % nb]) ++m;
          l = std::min(room, m + (chance(0.5) ? 1 : 0));
        } else {
          l = index(0, room);
        }
        c.names = {a, b};
        c.nums = {i1, i2, l};
        return true;
      }
      case Verb::kLcp: {
        auto v = live(nullptr, true);
        if (v.empty()) return false;
        auto [a, b] = pair_of(v, 0.4);
        c.names = {a, b};
        c.nums = {index(1, len(a)), index(1, len(b))};
        return true;
      }
      case Verb::kEqualOmega:
      case Verb::kEqualOmegaOmega:
      case Verb::kLcpOmega: {
        auto v = live(&circ, true);
        if (v.empty()) return false;
        auto [a, b] = pair_of(v, 0.3);
        const std::size_t na = len(a), nb = len(b);
        const std::size_t i1 = index(1, na), i2 = index(1, nb);
        c.names = {a, b};
        if (c.verb == Verb::kLcpOmega) {
          c.nums = {i1, i2};
        } else if (c.verb == Verb::kEqualOmega) {
          const std::size_t cap = na + nb;
          std::size_t l = chance(0.3) ? index(cap - 1, cap + 1) : uniform(0, 3 * cap);
          c.nums = {i1, i2, l};
        } else {
          const std::size_t l1 = uniform(1, 2 * na);
          const std::size_t l2 = chance(0.3) ? l1 * uniform(1, 3) : uniform(1, 2 * nb);
          c.nums = {i1, l1, i2, l2};
        }
        return true;
      }
    }
    return false;
  }

  const WorkloadOptions& opt_;
  std::mt19937_64 rng_;
  OracleForest oracle_;
  Interpreter<OracleForest> interp_;
};

}  // namespace

std::vector<Command> random_workload(std::uint64_t seed, const WorkloadOptions& options) {
  return Generator(seed, options).run();
}

}  // namespace fest
