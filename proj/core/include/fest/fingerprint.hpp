#pragma once

#include <cstdint>
#include <span>

namespace fest {

using Symbol = std::uint32_t;
using Residue = std::uint64_t;

inline constexpr Residue kMersenne61 = (Residue{1} << 61) - 1;

/// Karp-Rabin value of a string s: fp = kappa(s), power = b^|s| mod p, len = |s|.
///
/// The default value is the empty string (fp 0, power 1, len 0), which is the
/// two-sided identity of FingerprintContext::concat.
struct Fp {
  Residue fp = 0;
  Residue power = 1;
  std::uint64_t len = 0;

  friend bool operator==(const Fp&, const Fp&) = default;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// Modular arithmetic over Z_p with a fixed base b.
///
/// kappa(s[1..n]) = sum_{i=0}^{n-1} s[n-i] * b^i mod p. Values are immutable
/// after construction and can be shared freely between threads.
class FingerprintContext {
 public:
  /// Throws UsageError unless modulus is prime and 1 <= base < modulus.
  FingerprintContext(Residue modulus, Residue base);

  /// Draws the base uniformly from [1..p-1] with a seeded mt19937_64.
  static FingerprintContext from_seed(std::uint64_t seed, Residue modulus = kMersenne61);

  Residue modulus() const noexcept { return p_; }
  Residue base() const noexcept { return b_; }
  std::uint64_t seed() const noexcept { return seed_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  Residue mul(Residue a, Residue b) const noexcept {
    unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    if (mersenne_) {
      Residue r = static_cast<Residue>(t & kMersenne61) + static_cast<Residue>(t >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= kMersenne61 ? r - kMersenne61 : r;
    }
    return static_cast<Residue>(t % p_);
  }

  Residue pow(Residue a, std::uint64_t e) const noexcept;

  /// Horner evaluation. Throws DomainError if a symbol is >= p.
  Fp eval(std::span<const Symbol> symbols) const;
  Fp single(Symbol c) const;

  /// kappa(left . right) = kappa(left) * b^|right| + kappa(right).
  Fp concat(const Fp& left, const Fp& right) const noexcept {
    return {add(mul(left.fp, right.power), right.fp), mul(left.power, right.power),
            left.len + right.len};
  }

  /// (d^k + d^{k-1} + ... + 1) mod p in O(log k) multiplications, no inverses.
  Residue geomsum(Residue d, std::uint64_t k) const noexcept;

  /// Fingerprint of the k-fold repetition of `base`; k = 0 yields the empty Fp.
  Fp power_fp(const Fp& base, std::uint64_t k) const noexcept;

 private:
  Residue p_;
  Residue b_;
  std::uint64_t seed_ = 0;
  bool mersenne_;
};

}  // namespace fest
