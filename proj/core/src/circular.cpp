// Circular strings and omega extensions.

#include <algorithm>

#include "fest/checks.hpp"
#include "fest/errors.hpp"
#include "fest/forest.hpp"
#include "forest_internal.hpp"
#include "lcp_engine.hpp"

namespace fest {

/// Prefixes of v1^w and v2^w, where v = s^[i..] s^[..i-1] is the conjugate
/// read from position i. Distinct strings are rotated so that v is the
/// stored sequence (undone on destruction); a string compared with itself
/// is read through spliced fingerprints instead.
class Forest::OmegaPair {
 public:
  OmegaPair(Forest& f, detail::Entry& e1, std::size_t i1, detail::Entry& e2, std::size_t i2)
      : f_(f) {
    const bool same = &e1 == &e2;
    sides_[0].e = &e1;
    sides_[0].i = i1;
    sides_[1].e = &e2;
    sides_[1].i = i2;
    for (Side& s : sides_) {
      s.n = f_.size_of(*s.e);
      s.saved_start = s.e->start;
      s.rotated = !same;
      if (s.rotated) {
        f_.set_start(*s.e, s.i);
        s.whole = f_.store_.fingerprint(s.e->root);
      } else {
        s.whole = f_.window_fp(*s.e, s.i, s.n);
      }
    }
  }

  ~OmegaPair() {
    for (Side& s : sides_) {
      if (s.rotated) f_.set_start(*s.e, s.saved_start);
    }
  }

  OmegaPair(const OmegaPair&) = delete;
  OmegaPair& operator=(const OmegaPair&) = delete;

  /// Fingerprint of the first l symbols of v^w.
  Fp prefix(int which, std::size_t l) {
    Side& s = sides_[which];
    if (l == 0) return {};
    if (s.window != kNull) return f_.store_.range_fp(s.window, 1, l);
    const std::size_t k = l / s.n;
    const std::size_t j = l % s.n;
    Fp head;
    if (j > 0) head = s.rotated ? f_.store_.range_fp(s.e->root, 1, j) : f_.window_fp(*s.e, s.i, j);
    const FingerprintContext& ctx = f_.context();
    return ctx.concat(ctx.power_fp(s.whole, k), head);
  }

  bool equal(std::size_t l) { return prefix(0, l) == prefix(1, l); }

  int compare_at(std::size_t l) {
    const Symbol a = symbol(sides_[0], l);
    const Symbol b = symbol(sides_[1], l);
    return a < b ? -1 : (a > b ? 1 : 0);
  }

  void narrow(std::size_t len) {
    for (Side& s : sides_) {
      if (s.rotated && len <= s.n) s.window = f_.store_.cut(s.e->root, 1, len);
    }
  }

  void widen() {
    for (Side& s : sides_) {
      if (s.window == kNull) continue;
      f_.store_.paste(s.e->root, 1, s.window);
      s.window = kNull;
    }
  }

 private:
  struct Side {
    detail::Entry* e = nullptr;
    std::size_t i = 1;
    std::size_t n = 0;
    std::size_t saved_start = 1;
    bool rotated = false;
    Fp whole;
    NodeId window = kNull;
  };

  /// Symbol at 0-based offset l of v^w.
  Symbol symbol(Side& s, std::size_t l) {
    const std::size_t pos = l % s.n;
    if (s.window != kNull) return f_.store_.node(f_.store_.find(s.window, l + 1)).ch;
    if (s.rotated) return f_.store_.node(f_.store_.find(s.e->root, pos + 1)).ch;
    return f_.canonical_symbol(*s.e, (s.i - 1 + pos) % s.n + 1);
  }

  Forest& f_;
  Side sides_[2];
};

void Forest::rotate(StringId s, std::size_t i) {
  OpScope scope(*this, OpKind::kRotate);
  detail::Entry& e = entry(s);
  checks::circular(e.mode, "rotate");
  checks::position(size_of(e), i);
  rotate_stored(e, i);
  audit_after(e);
}

Fp Forest::circular_fp(StringId s, std::size_t i, std::size_t j) {
  OpScope scope(*this, OpKind::kCircularFp);
  detail::Entry& e = entry(s);
  checks::circular(e.mode, "circular_fp");
  const std::size_t n = size_of(e);
  if (i < 1 || i > n + 1 || j > n) {
    throw RangeError("circular_fp bounds (" + std::to_string(i) + ", " + std::to_string(j) + ") for length " +
                     std::to_string(n));
  }
  Fp out;
  if (i <= j) {
    out = window_fp(e, i, j - i + 1);
  } else {
    const Fp sigma = window_fp(e, i, n + 1 - i);
    const Fp tau = window_fp(e, 1, j);
    out = context().concat(sigma, tau);
  }
  audit_after(e);
  return out;
}

bool Forest::equal_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l) {
  OpScope scope(*this, OpKind::kEqualOmega);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  checks::omega_start(e1.mode, size_of(e1), i1, "equal_omega");
  checks::omega_start(e2.mode, size_of(e2), i2, "equal_omega");
  // Two omega words agreeing on |u| + |v| symbols agree forever.
  const std::size_t cap = std::min(l, size_of(e1) + size_of(e2));
  bool result = true;
  if (cap > 0) {
    OmegaPair pair(*this, e1, i1, e2, i2);
    result = pair.equal(cap);
  }
  audit_after(e1);
  audit_after(e2);
  return result;
}

bool Forest::equal_omega_omega(StringId s1, std::size_t i1, std::size_t l1, StringId s2, std::size_t i2,
                               std::size_t l2) {
  OpScope scope(*this, OpKind::kEqualOmegaOmega);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  checks::omega_start(e1.mode, size_of(e1), i1, "equal_omega_omega");
  checks::omega_start(e2.mode, size_of(e2), i2, "equal_omega_omega");
  if (l1 == 0 || l2 == 0) throw RangeError("equal_omega_omega needs positive lengths");
  Fp u, v;
  {
    OmegaPair pair(*this, e1, i1, e2, i2);
    u = pair.prefix(0, l1);
    v = pair.prefix(1, l2);
  }
  // u^w = v^w iff u^|v| = v^|u|.
  const FingerprintContext& ctx = context();
  const bool result = ctx.mul(u.fp, ctx.geomsum(u.power, l2 - 1)) == ctx.mul(v.fp, ctx.geomsum(v.power, l1 - 1));
  audit_after(e1);
  audit_after(e2);
  return result;
}

OmegaLcpResult Forest::lcp_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2) {
  OpScope scope(*this, OpKind::kLcpOmega);
  detail::Entry& e1 = entry(s1);
  detail::Entry& e2 = entry(s2);
  checks::omega_start(e1.mode, size_of(e1), i1, "lcp_omega");
  checks::omega_start(e2.mode, size_of(e2), i2, "lcp_omega");
  const std::size_t bound = size_of(e1) + size_of(e2);
  LcpProbes probes;
  detail::LcpOutcome out;
  {
    OmegaPair pair(*this, e1, i1, e2, i2);
    out = detail::run_lcp(pair, bound, bound, probes);
  }
  OmegaLcpResult result;
  if (out.exhausted) {
    result = {OmegaLength::infinite(), Ordering::kEqual};
  } else {
    result = {OmegaLength::finite(out.length), ordering_from_sign(out.sign)};
  }
  probes.length = out.length;
  record_lcp(probes);
  audit_after(e1);
  audit_after(e2);
  return result;
}

}  // namespace fest
