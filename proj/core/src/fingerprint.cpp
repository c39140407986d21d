#include "fest/fingerprint.hpp"

#include <random>
#include <string>

#include "fest/errors.hpp"

namespace fest {
namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FingerprintContext::FingerprintContext(Residue modulus, Residue base)
    : p_(modulus), b_(base), mersenne_(modulus == kMersenne61) {
  if (!is_prime(modulus)) {
    throw UsageError("fingerprint modulus " + std::to_string(modulus) + " is not prime");
  }
  if (base == 0 || base >= modulus) {
    throw UsageError("fingerprint base must lie in [1..p-1]");
  }
}

FingerprintContext FingerprintContext::from_seed(std::uint64_t seed, Residue modulus) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> pick(1, modulus - 1);
  FingerprintContext ctx(modulus, pick(rng));
  ctx.seed_ = seed;
  return ctx;
}

Residue FingerprintContext::pow(Residue a, std::uint64_t e) const noexcept {
  Residue r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fp FingerprintContext::eval(std::span<const Symbol> symbols) const {
  Fp out;
  for (Symbol c : symbols) {
    if (c >= p_) {
      throw DomainError("symbol " + std::to_string(c) + " does not fit modulus " + std::to_string(p_));
    }
    out.fp = add(mul(out.fp, b_), c);
    out.power = mul(out.power, b_);
  }
  out.len = symbols.size();
  return out;
}

Fp FingerprintContext::single(Symbol c) const {
  return eval(std::span<const Symbol>(&c, 1));
}

// geomsum(d, 0)    = 1
// geomsum(d, 2k+1) = (d + 1) * geomsum(d^2, k)
// geomsum(d, 2k)   = d * geomsum(d, 2k - 1) + 1
//
// Unrolled: the answer is always scale * geomsum(d, k) + shift.
Residue FingerprintContext::geomsum(Residue d, std::uint64_t k) const noexcept {
  Residue scale = 1;
  Residue shift = 0;
  d %= p_;
  while (k > 0) {
    if (k & 1) {
      scale = mul(scale, add(d, 1));
      d = mul(d, d);
      k >>= 1;
    } else {
      shift = add(shift, scale);
      scale = mul(scale, d);
      --k;
    }
  }
  return add(scale, shift);
}

Fp FingerprintContext::power_fp(const Fp& base, std::uint64_t k) const noexcept {
  if (k == 0) return {};
  return {mul(base.fp, geomsum(base.power, k - 1)), pow(base.power, k), base.len * k};
}

}  // namespace fest
