#pragma once

// Argument validation shared by Forest and OracleForest, so both reject the
// same inputs with the same exception type.

#include <cstddef>
#include <string>

#include "fest/errors.hpp"
#include "fest/types.hpp"

namespace fest::checks {

inline std::string pos(std::size_t v) { return std::to_string(v); }

/// 1 <= i <= n.
inline void position(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw RangeError("index " + pos(i) + " outside [1.." + pos(n) + "]");
}

/// 1 <= i <= n + 1.
inline void insert_position(std::size_t n, std::size_t i) {
  if (i < 1 || i > n + 1) throw RangeError("index " + pos(i) + " outside [1.." + pos(n + 1) + "]");
}

inline void circular(Mode m, const char* op) {
  if (m != Mode::kCircular) throw UsageError(std::string(op) + " requires a circular string");
}

/// Length of the range [i..j]. Linear: 1 <= i <= j <= n, or i = j + 1 when
/// allow_empty. Circular: i, j in [1..n] and the range may wrap (i > j);
/// the only empty circular range is (1, 0) on an empty string.
inline std::size_t range(Mode m, std::size_t n, std::size_t i, std::size_t j, bool allow_empty) {
  if (m == Mode::kCircular) {
    if (n == 0 && allow_empty && i == 1 && j == 0) return 0;
    if (i < 1 || i > n || j < 1 || j > n) {
      throw RangeError("circular range [" + pos(i) + ".." + pos(j) + "] outside [1.." + pos(n) + "]");
    }
    return i <= j ? j - i + 1 : n - i + 1 + j;
  }
  if (allow_empty && i >= 1 && i == j + 1 && i <= n + 1) return 0;
  if (i < 1 || j < i || j > n) {
    throw RangeError("range [" + pos(i) + ".." + pos(j) + "] outside [1.." + pos(n) + "]");
  }
  return j - i + 1;
}

/// A window of l symbols starting at i. Linear: i + l - 1 <= n (i <= n + 1
/// when l = 0). Circular: l <= n and i in [1..n] (i = 1 for the empty string).
inline void window(Mode m, std::size_t n, std::size_t i, std::size_t l) {
  if (m == Mode::kCircular) {
    bool start_ok = n == 0 ? i == 1 : (i >= 1 && i <= n);
    if (!start_ok || l > n) {
      throw RangeError("circular window at " + pos(i) + " of length " + pos(l) + " exceeds length " + pos(n));
    }
    return;
  }
  if (i < 1 || i > n + 1 || l > n + 1 - i) {
    throw RangeError("window at " + pos(i) + " of length " + pos(l) + " exceeds length " + pos(n));
  }
}

/// Start position of an omega read: the string must be circular and
/// non-empty, 1 <= i <= n.
inline void omega_start(Mode m, std::size_t n, std::size_t i, const char* op) {
  circular(m, op);
  if (n == 0) throw RangeError(std::string(op) + " on an empty string");
  position(n, i);
}

}  // namespace fest::checks
