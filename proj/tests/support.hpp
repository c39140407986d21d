#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fest/fingerprint.hpp"

namespace fest::testing {

inline std::vector<Symbol> sym(std::string_view s) { return {s.begin(), s.end()}; }

inline std::string str(const std::vector<Symbol>& v) { return {v.begin(), v.end()}; }

/// Schoolbook arithmetic mod p, independent of FingerprintContext.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t k = 0; k < e; ++k) r = mulmod(r, a, p);
  return r;
}

/// kappa(s) = sum s[n-i] b^i mod p, evaluated term by term.
inline std::uint64_t naive_kappa(const std::vector<Symbol>& s, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = 0;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) r = (r + mulmod(s[n - 1 - i] % p, powmod(b, i, p), p)) % p;
  return r;
}

}  // namespace fest::testing
