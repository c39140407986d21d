#include "fest/oracle.hpp"

#include <algorithm>
#include <string>

#include "fest/checks.hpp"
#include "fest/errors.hpp"

namespace fest {
namespace {

Ordering compare(Symbol a, Symbol b) { return a < b ? Ordering::kLess : Ordering::kGreater; }

}  // namespace

OracleForest::OracleForest(InvolutionTable involution, Residue modulus)
    : f_(std::move(involution)), modulus_(modulus) {}

void OracleForest::check_symbol(Symbol c) const {
  if (c >= modulus_) throw DomainError("symbol " + std::to_string(c) + " does not fit the fingerprint modulus");
}

std::vector<std::size_t> OracleForest::offsets(const Str& s, std::size_t i, std::size_t len) const {
  std::vector<std::size_t> out(len);
  const std::size_t n = s.symbols.size();
  for (std::size_t t = 0; t < len; ++t) out[t] = (i - 1 + t) % n;
  return out;
}

StringId OracleForest::make_string(std::span<const Symbol> w, Mode mode) {
  for (Symbol c : w) check_symbol(c);
  total_length_ += w.size();
  return strings_.insert(Str{{w.begin(), w.end()}, mode});
}

std::vector<StringId> OracleForest::handles() const {
  std::vector<StringId> out;
  strings_.for_each([&](StringId id, const Str&) { out.push_back(id); });
  return out;
}

Symbol OracleForest::access(StringId s, std::size_t i) {
  const Str& str = strings_.at(s);
  checks::position(str.symbols.size(), i);
  return str.symbols[i - 1];
}

std::vector<Symbol> OracleForest::retrieve(StringId s, std::size_t i, std::size_t j) {
  const Str& str = strings_.at(s);
  const std::size_t len = checks::range(str.mode, str.symbols.size(), i, j, true);
  std::vector<Symbol> out;
  for (std::size_t k : offsets(str, i, len)) out.push_back(str.symbols[k]);
  return out;
}

void OracleForest::substitute(StringId s, std::size_t i, Symbol c) {
  Str& str = strings_.at(s);
  checks::position(str.symbols.size(), i);
  check_symbol(c);
  str.symbols[i - 1] = c;
}

void OracleForest::insert(StringId s, std::size_t i, Symbol c) {
  Str& str = strings_.at(s);
  checks::insert_position(str.symbols.size(), i);
  check_symbol(c);
  str.symbols.insert(str.symbols.begin() + static_cast<std::ptrdiff_t>(i - 1), c);
  ++total_length_;
}

void OracleForest::erase(StringId s, std::size_t i) {
  Str& str = strings_.at(s);
  checks::position(str.symbols.size(), i);
  str.symbols.erase(str.symbols.begin() + static_cast<std::ptrdiff_t>(i - 1));
  --total_length_;
}

void OracleForest::introduce(StringId s1, std::size_t i, StringId s2) {
  Str& a = strings_.at(s1);
  Str& b = strings_.at(s2);
  if (s1 == s2) throw UsageError("introduce needs two distinct strings");
  checks::insert_position(a.symbols.size(), i);
  a.symbols.insert(a.symbols.begin() + static_cast<std::ptrdiff_t>(i - 1), b.symbols.begin(), b.symbols.end());
  strings_.erase(s2);
}

StringId OracleForest::extract(StringId s, std::size_t i, std::size_t j) {
  Str& str = strings_.at(s);
  const std::size_t len = checks::range(str.mode, str.symbols.size(), i, j, false);
  const std::vector<std::size_t> picked = offsets(str, i, len);
  Str piece{{}, str.mode};
  std::vector<bool> removed(str.symbols.size(), false);
  for (std::size_t k : picked) {
    piece.symbols.push_back(str.symbols[k]);
    removed[k] = true;
  }
  std::vector<Symbol> rest;
  for (std::size_t k = 0; k < str.symbols.size(); ++k) {
    if (!removed[k]) rest.push_back(str.symbols[k]);
  }
  str.symbols = std::move(rest);
  return strings_.insert(std::move(piece));
}

bool OracleForest::equal(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l) {
  const Str& a = strings_.at(s1);
  const Str& b = strings_.at(s2);
  checks::window(a.mode, a.symbols.size(), i1, l);
  checks::window(b.mode, b.symbols.size(), i2, l);
  if (l == 0) return true;
  const auto oa = offsets(a, i1, l);
  const auto ob = offsets(b, i2, l);
  for (std::size_t t = 0; t < l; ++t) {
    if (a.symbols[oa[t]] != b.symbols[ob[t]]) return false;
  }
  return true;
}

LcpResult OracleForest::lcp(StringId s1, std::size_t i1, StringId s2, std::size_t i2) {
  const Str& a = strings_.at(s1);
  const Str& b = strings_.at(s2);
  checks::position(a.symbols.size(), i1);
  checks::position(b.symbols.size(), i2);
  // Suffix of a linear string, whole conjugate of a circular one.
  auto suffix = [](const Str& s, std::size_t i) {
    std::vector<Symbol> out;
    const std::size_t n = s.symbols.size();
    const std::size_t len = s.mode == Mode::kCircular ? n : n - i + 1;
    for (std::size_t t = 0; t < len; ++t) out.push_back(s.symbols[(i - 1 + t) % n]);
    return out;
  };
  const std::vector<Symbol> u = suffix(a, i1);
  const std::vector<Symbol> v = suffix(b, i2);
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t t = 0; t < m; ++t) {
    if (u[t] != v[t]) return {t, compare(u[t], v[t])};
  }
  if (u.size() == v.size()) return {m, Ordering::kEqual};
  return {m, u.size() < v.size() ? Ordering::kLess : Ordering::kGreater};
}

void OracleForest::reverse(StringId s, std::size_t i, std::size_t j) {
  Str& str = strings_.at(s);
  const std::size_t len = checks::range(str.mode, str.symbols.size(), i, j, false);
  const std::vector<std::size_t> o = offsets(str, i, len);
  for (std::size_t a = 0, b = len - 1; a < b; ++a, --b) std::swap(str.symbols[o[a]], str.symbols[o[b]]);
}

void OracleForest::map(StringId s, std::size_t i, std::size_t j) {
  Str& str = strings_.at(s);
  const std::size_t len = checks::range(str.mode, str.symbols.size(), i, j, false);
  for (std::size_t k : offsets(str, i, len)) str.symbols[k] = f_(str.symbols[k]);
}

void OracleForest::rotate(StringId s, std::size_t i) {
  const Str& str = strings_.at(s);
  checks::circular(str.mode, "rotate");
  checks::position(str.symbols.size(), i);
}

bool OracleForest::equal_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l) {
  const Str& a = strings_.at(s1);
  const Str& b = strings_.at(s2);
  checks::omega_start(a.mode, a.symbols.size(), i1, "equal_omega");
  checks::omega_start(b.mode, b.symbols.size(), i2, "equal_omega");
  const std::size_t n1 = a.symbols.size(), n2 = b.symbols.size();
  const std::size_t cap = std::min(l, n1 + n2);
  for (std::size_t t = 0; t < cap; ++t) {
    if (a.symbols[(i1 - 1 + t) % n1] != b.symbols[(i2 - 1 + t) % n2]) return false;
  }
  return true;
}

bool OracleForest::equal_omega_omega(StringId s1, std::size_t i1, std::size_t l1, StringId s2, std::size_t i2,
                                     std::size_t l2) {
  const Str& a = strings_.at(s1);
  const Str& b = strings_.at(s2);
  checks::omega_start(a.mode, a.symbols.size(), i1, "equal_omega_omega");
  checks::omega_start(b.mode, b.symbols.size(), i2, "equal_omega_omega");
  if (l1 == 0 || l2 == 0) throw RangeError("equal_omega_omega needs positive lengths");
  const std::size_t n1 = a.symbols.size(), n2 = b.symbols.size();
  // u^w = v^w iff they agree on the first |u| + |v| symbols.
  for (std::size_t t = 0; t < l1 + l2; ++t) {
    const Symbol x = a.symbols[(i1 - 1 + t % l1) % n1];
    const Symbol y = b.symbols[(i2 - 1 + t % l2) % n2];
    if (x != y) return false;
  }
  return true;
}

OmegaLcpResult OracleForest::lcp_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2) {
  const Str& a = strings_.at(s1);
  const Str& b = strings_.at(s2);
  checks::omega_start(a.mode, a.symbols.size(), i1, "lcp_omega");
  checks::omega_start(b.mode, b.symbols.size(), i2, "lcp_omega");
  const std::size_t n1 = a.symbols.size(), n2 = b.symbols.size();
  for (std::size_t t = 0; t < n1 + n2; ++t) {
    const Symbol x = a.symbols[(i1 - 1 + t) % n1];
    const Symbol y = b.symbols[(i2 - 1 + t) % n2];
    if (x != y) return {OmegaLength::finite(t), compare(x, y)};
  }
  return {OmegaLength::infinite(), Ordering::kEqual};
}

}  // namespace fest
