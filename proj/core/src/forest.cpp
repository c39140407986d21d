#include "fest/forest.hpp"

#include <algorithm>
#include <string>

#include "fest/checks.hpp"
#include "fest/errors.hpp"
#include "forest_internal.hpp"
#include "lcp_engine.hpp"

namespace fest {

std::string_view op_name(OpKind op) noexcept {
  static constexpr std::string_view kNames[kOpKindCount] = {
      "make_string", "access", "retrieve", "substitute",  "insert",      "delete",
      "introduce",   "extract", "equal",   "lcp",         "reverse",     "map",
      "rotate",      "circular_fp", "equal_omega", "equal_omega_omega", "lcp_omega"};
  return kNames[static_cast<std::size_t>(op)];
}

namespace {

int compare_symbols(Symbol a, Symbol b) { return a < b ? -1 : (a > b ? 1 : 0); }

/// Two linear suffixes, possibly of the same tree.
class LinearPair {
 public:
  LinearPair(TreeStore& st, NodeId& root_a, std::size_t a, NodeId& root_b, std::size_t b)
      : st_(st), home_a_(&root_a), home_b_(&root_b), a0_(a), b0_(b) {
    reset();
  }

  bool equal(std::size_t l) {
    const Fp x = st_.range_fp(*ra_, a_, a_ + l - 1);
    const Fp y = st_.range_fp(*rb_, b_, b_ + l - 1);
    return x == y;
  }

  int compare_at(std::size_t l) {
    const Symbol x = st_.node(st_.find(*ra_, a_ + l)).ch;
    const Symbol y = st_.node(st_.find(*rb_, b_ + l)).ch;
    return compare_symbols(x, y);
  }

  void narrow(std::size_t len) {
    if (home_a_ != home_b_) {
      win_a_ = st_.cut(*home_a_, a0_, a0_ + len - 1);
      win_b_ = st_.cut(*home_b_, b0_, b0_ + len - 1);
      ra_ = &win_a_;
      rb_ = &win_b_;
      a_ = b_ = 1;
      return;
    }
    const std::size_t lo = std::min(a0_, b0_);
    const std::size_t hi = std::max(a0_, b0_);
    if (lo + len > hi) {
      // Overlapping windows: cut one piece covering both.
      single_ = true;
      win_a_ = st_.cut(*home_a_, lo, hi + len - 1);
      ra_ = rb_ = &win_a_;
      a_ = a0_ - lo + 1;
      b_ = b0_ - lo + 1;
      return;
    }
    // Cut the later window first so the earlier position stays valid.
    NodeId w_hi = st_.cut(*home_a_, hi, hi + len - 1);
    NodeId w_lo = st_.cut(*home_a_, lo, lo + len - 1);
    win_a_ = a0_ < b0_ ? w_lo : w_hi;
    win_b_ = a0_ < b0_ ? w_hi : w_lo;
    ra_ = &win_a_;
    rb_ = &win_b_;
    a_ = b_ = 1;
  }

  void widen() {
    if (home_a_ != home_b_) {
      st_.paste(*home_b_, b0_, win_b_);
      st_.paste(*home_a_, a0_, win_a_);
    } else if (single_) {
      st_.paste(*home_a_, std::min(a0_, b0_), win_a_);
    } else if (a0_ < b0_) {
      st_.paste(*home_a_, a0_, win_a_);
      st_.paste(*home_a_, b0_, win_b_);
    } else {
      st_.paste(*home_a_, b0_, win_b_);
      st_.paste(*home_a_, a0_, win_a_);
    }
    win_a_ = win_b_ = kNull;
    reset();
  }

 private:
  void reset() {
    single_ = false;
    ra_ = home_a_;
    rb_ = home_b_;
    a_ = a0_;
    b_ = b0_;
  }

  TreeStore& st_;
  NodeId* home_a_;
  NodeId* home_b_;
  std::size_t a0_, b0_;
  NodeId* ra_ = nullptr;
  NodeId* rb_ = nullptr;
  std::size_t a_ = 0, b_ = 0;
  NodeId win_a_ = kNull, win_b_ = kNull;
  bool single_ = false;
};

}  // namespace

Forest::Forest(ForestOptions options)
    : store_(FingerprintContext::from_seed(options.seed, options.modulus), std::move(options.involution)),
      audit_(options.audit) {}

StringId Forest::make_string(std::span<const Symbol> w, Mode mode) {
  OpScope scope(*this, OpKind::kMakeString);
  for (Symbol c : w) {
    if (c >= context().modulus()) {
      throw DomainError("symbol " + std::to_string(c) + " does not fit the fingerprint modulus");
    }
  }
  detail::Entry e;
  e.mode = mode;
  e.root = store_.build_balanced(w);
  total_length_ += w.size();
  StringId id = strings_.insert(e);
  audit_after(e);
  return id;
}

std::size_t Forest::length(StringId s) const { return size_of(entry(s)); }

Mode Forest::mode(StringId s) const { return entry(s).mode; }

std::size_t Forest::start(StringId s) const { return entry(s).start; }

std::vector<StringId> Forest::handles() const {
  std::vector<StringId> out;
  strings_.for_each([&](StringId id, const detail::Entry&) { out.push_back(id); });
  return out;
}

std::size_t Forest::to_stored(const detail::Entry& e, std::size_t i) const noexcept {
  if (e.mode == Mode::kLinear) return i;
  const std::size_t n = size_of(e);
  return (n + i - e.start) % n + 1;
}

std::size_t Forest::insert_slot(const detail::Entry& e, std::size_t i) const noexcept {
  const std::size_t n = size_of(e);
  if (e.mode == Mode::kLinear || n == 0) return i;
  return i <= n ? to_stored(e, i) : n - e.start + 2;
}

void Forest::rotate_stored(detail::Entry& e, std::size_t k) {
  const std::size_t n = size_of(e);
  if (n == 0 || k == 1) return;
  NodeId tail = store_.cut(e.root, k, n);
  store_.paste(e.root, 1, tail);
  e.start = (e.start - 1 + k - 1) % n + 1;
}

void Forest::set_start(detail::Entry& e, std::size_t target) {
  if (target == e.start) return;
  const std::size_t n = size_of(e);
  rotate_stored(e, target > e.start ? target - e.start + 1 : n + target - e.start + 1);
}

std::size_t Forest::linearize(detail::Entry& e, std::size_t i, std::size_t len) {
  if (e.mode == Mode::kLinear || len == 0) return i;
  const std::size_t n = size_of(e);
  const std::size_t q = to_stored(e, i);
  if (q + len - 1 <= n) return q;
  if (i + len - 1 <= n) {
    set_start(e, 1);
    return i;
  }
  // The range wraps in canonical coordinates too; only start = i makes it
  // contiguous.
  set_start(e, i);
  return 1;
}

Fp Forest::window_fp(detail::Entry& e, std::size_t i, std::size_t len) {
  if (len == 0) return {};
  const std::size_t n = size_of(e);
  const std::size_t q = to_stored(e, i);
  if (q + len - 1 <= n) return store_.range_fp(e.root, q, q + len - 1);
  const Fp head = store_.range_fp(e.root, q, n);
  const Fp tail = store_.range_fp(e.root, 1, len - (n - q + 1));
  return context().concat(head, tail);
}

Symbol Forest::canonical_symbol(detail::Entry& e, std::size_t i) {
  return store_.node(store_.find(e.root, to_stored(e, i))).ch;
}

Symbol Forest::access(StringId s, std::size_t i) {
  OpScope scope(*this, OpKind::kAccess);
  detail::Entry& e = entry(s);
  checks::position(size_of(e), i);
  const Symbol c = canonical_symbol(e, i);
  audit_after(e);
  return c;
}

std::vector<Symbol> Forest::retrieve(StringId s, std::size_t i, std::size_t j) {
  OpScope scope(*this, OpKind::kRetrieve);
  detail::Entry& e = entry(s);
  const std::size_t len = checks::range(e.mode, size_of(e), i, j, true);
  std::vector<Symbol> out;
  if (len == 0) return out;
  out.reserve(len);
  const std::size_t q = linearize(e, i, len);
  store_.collect(store_.isolate(e.root, q, q + len - 1).node, out);
  audit_after(e);
  return out;
}

std::vector<Symbol> Forest::retrieve(StringId s) {
  const std::size_t n = length(s);
  if (n == 0) return {};
  return retrieve(s, 1, n);
}

std::vector<Symbol> Forest::stored(StringId s) {
  detail::Entry& e = entry(s);
  std::vector<Symbol> out;
  out.reserve(size_of(e));
  store_.collect(e.root, out);
  return out;
}

Fp Forest::fingerprint(StringId s) {
  detail::Entry& e = entry(s);
  if (e.mode == Mode::kCircular) return window_fp(e, 1, size_of(e));
  return store_.fingerprint(e.root);
}

void Forest::substitute(StringId s, std::size_t i, Symbol c) {
  OpScope scope(*this, OpKind::kSubstitute);
  detail::Entry& e = entry(s);
  checks::position(size_of(e), i);
  store_.substitute_at(e.root, to_stored(e, i), c);
  audit_after(e);
}

void Forest::insert(StringId s, std::size_t i, Symbol c) {
  OpScope scope(*this, OpKind::kInsert);
  detail::Entry& e = entry(s);
  checks::insert_position(size_of(e), i);
  store_.insert_at(e.root, insert_slot(e, i), c);
  if (e.mode == Mode::kCircular && i < e.start) ++e.start;
  ++total_length_;
  audit_after(e);
}

namespace {

/// Start offset after removing `len` canonical positions from i (possibly
/// wrapping) out of n, when the removed block began at stored position q.
std::size_t start_after_removal(std::size_t n, std::size_t r, std::size_t i, std::size_t len, std::size_t q) {
  if (n == len) return 1;
  // Canonical index of the first surviving stored symbol.
  const std::size_t t = q == 1 ? (r - 1 + len) % n + 1 : r;
  const std::size_t end = i + len - 1;
  std::size_t below;
  if (end <= n) {
    below = t > i ? std::min(t - 1, end) - i + 1 : 0;
  } else {
    below = std::min(end - n, t - 1) + (t > i ? t - i : 0);
  }
  return t - below;
}

}  // namespace

void Forest::erase(StringId s, std::size_t i) {
  OpScope scope(*this, OpKind::kErase);
  detail::Entry& e = entry(s);
  const std::size_t n = size_of(e);
  checks::position(n, i);
  const std::size_t q = to_stored(e, i);
  store_.erase_at(e.root, q);
  if (e.mode == Mode::kCircular) e.start = start_after_removal(n, e.start, i, 1, q);
  --total_length_;
  audit_after(e);
}

void Forest::introduce(StringId s1, std::size_t i, StringId s2) {
  OpScope scope(*this, OpKind::kIntroduce);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  if (s1 == s2) throw UsageError("introduce needs two distinct strings");
  checks::insert_position(size_of(e1), i);
  if (e2.mode == Mode::kCircular) set_start(e2, 1);
  const std::size_t m = size_of(e2);
  const NodeId sub = e2.root;
  store_.paste(e1.root, insert_slot(e1, i), sub);
  if (e1.mode == Mode::kCircular && i < e1.start) e1.start += m;
  strings_.erase(s2);
  audit_after(e1);
}

StringId Forest::extract(StringId s, std::size_t i, std::size_t j) {
  OpScope scope(*this, OpKind::kExtract);
  detail::Entry& e = entry(s);
  const std::size_t n = size_of(e);
  const std::size_t len = checks::range(e.mode, n, i, j, false);
  const std::size_t q = linearize(e, i, len);
  detail::Entry piece;
  piece.mode = e.mode;
  piece.root = store_.cut(e.root, q, q + len - 1);
  if (e.mode == Mode::kCircular) e.start = start_after_removal(n, e.start, i, len, q);
  audit_after(e);
  // `e` may dangle once the registry grows.
  StringId id = strings_.insert(piece);
  audit_after(piece);
  return id;
}

bool Forest::equal(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l) {
  OpScope scope(*this, OpKind::kEqual);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  checks::window(e1.mode, size_of(e1), i1, l);
  checks::window(e2.mode, size_of(e2), i2, l);
  if (l == 0) return true;
  const std::size_t q1 = linearize(e1, i1, l);
  const Fp a = store_.range_fp(e1.root, q1, q1 + l - 1);
  const std::size_t q2 = linearize(e2, i2, l);
  const Fp b = store_.range_fp(e2.root, q2, q2 + l - 1);
  audit_after(e1);
  audit_after(e2);
  return a == b;
}

LcpResult Forest::lcp(StringId s1, std::size_t i1, StringId s2, std::size_t i2) {
  OpScope scope(*this, OpKind::kLcp);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  const std::size_t n1 = size_of(e1);
  const std::size_t n2 = size_of(e2);
  checks::position(n1, i1);
  checks::position(n2, i2);

  // Remaining lengths: circular suffixes are whole conjugates.
  const std::size_t rem1 = e1.mode == Mode::kCircular ? n1 : n1 - i1 + 1;
  const std::size_t rem2 = e2.mode == Mode::kCircular ? n2 : n2 - i2 + 1;
  auto order_when_exhausted = [&] {
    return rem1 == rem2 ? Ordering::kEqual : (rem1 < rem2 ? Ordering::kLess : Ordering::kGreater);
  };

  LcpProbes probes;
  LcpResult result;
  if (s1 == s2 && i1 == i2) {
    result = {rem1, Ordering::kEqual};
  } else if (s1 == s2 && e1.mode == Mode::kCircular) {
    // Two conjugates of one string: probe with spliced fingerprints.
    struct SelfPair {
      Forest& f;
      detail::Entry& e;
      std::size_t a, b;
      bool equal(std::size_t l) {
        const Fp x = f.window_fp(e, a, l);
        return x == f.window_fp(e, b, l);
      }
      int compare_at(std::size_t l) {
        const std::size_t n = f.size_of(e);
        return compare_symbols(f.canonical_symbol(e, (a - 1 + l) % n + 1),
                               f.canonical_symbol(e, (b - 1 + l) % n + 1));
      }
      void narrow(std::size_t) {}
      void widen() {}
    } pair{*this, e1, i1, i2};
    const detail::LcpOutcome out = detail::run_lcp(pair, n1, n1 + n2, probes);
    result = {out.length, out.exhausted ? Ordering::kEqual : ordering_from_sign(out.sign)};
  } else {
    // Circular sides are rotated so the conjugate is the stored sequence.
    const std::size_t start1 = e1.start;
    const std::size_t start2 = e2.start;
    std::size_t a = i1, b = i2;
    if (e1.mode == Mode::kCircular) {
      set_start(e1, i1);
      a = 1;
    }
    if (e2.mode == Mode::kCircular) {
      set_start(e2, i2);
      b = 1;
    }
    LinearPair pair(store_, e1.root, a, e2.root, b);
    const detail::LcpOutcome out = detail::run_lcp(pair, std::min(rem1, rem2), n1 + n2, probes);
    result = {out.length, out.exhausted ? order_when_exhausted() : ordering_from_sign(out.sign)};
    if (e1.mode == Mode::kCircular) set_start(e1, start1);
    if (e2.mode == Mode::kCircular) set_start(e2, start2);
  }
  probes.length = result.length;
  record_lcp(probes);
  audit_after(e1);
  audit_after(e2);
  return result;
}

void Forest::reverse(StringId s, std::size_t i, std::size_t j) {
  OpScope scope(*this, OpKind::kReverse);
  detail::Entry& e = entry(s);
  const std::size_t len = checks::range(e.mode, size_of(e), i, j, false);
  const std::size_t q = linearize(e, i, len);
  const Isolation iso = store_.isolate(e.root, q, q + len - 1);
  store_.toggle(iso, true, false);
  audit_after(e);
}

void Forest::map(StringId s, std::size_t i, std::size_t j) {
  OpScope scope(*this, OpKind::kMap);
  detail::Entry& e = entry(s);
  const std::size_t len = checks::range(e.mode, size_of(e), i, j, false);
  const std::size_t q = linearize(e, i, len);
  const Isolation iso = store_.isolate(e.root, q, q + len - 1);
  store_.toggle(iso, false, true);
  audit_after(e);
}

void Forest::record_lcp(const LcpProbes& probes) {
  ++lcp_calls_;
  lcp_squaring_ += probes.squaring;
  lcp_tests_ += probes.equality_tests;
  last_lcp_ = probes;
}

Stats Forest::stats() const {
  Stats s;
  const SplayCounters& c = store_.counters();
  s.rotations = c.rotations;
  s.splays = c.splays;
  s.fixes = c.fixes;
  s.per_op = per_op_;
  s.lcp_calls = lcp_calls_;
  s.lcp_squaring_probes = lcp_squaring_;
  s.lcp_equality_tests = lcp_tests_;
  s.last_lcp = last_lcp_;
  return s;
}

void Forest::reset_stats() {
  store_.reset_counters();
  per_op_ = {};
  lcp_calls_ = lcp_squaring_ = lcp_tests_ = 0;
  last_lcp_ = {};
}

AuditReport Forest::audit(StringId s) const { return store_.audit(entry(s).root); }

AuditReport Forest::audit() const {
  AuditReport total;
  strings_.for_each([&](StringId id, const detail::Entry& e) {
    if (!total.ok) return;
    AuditReport r = store_.audit(e.root);
    total.nodes += r.nodes;
    if (!r.ok) {
      total.ok = false;
      total.error = "string " + SlotMap<detail::Entry>::describe(id) + ": " + r.error;
    }
  });
  return total;
}

void Forest::audit_after(const detail::Entry& e) const {
  if (!audit_) return;
  AuditReport r = store_.audit(e.root);
  if (!r.ok) throw AuditError(r.error);
}

}  // namespace fest
