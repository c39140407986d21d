#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "fest/script.hpp"

namespace fest {

struct WorkloadOptions {
  std::size_t op_count = 1000;
  std::size_t max_strings = 32;
  /// No single string grows beyond this.
  std::size_t max_length = 10000;
  /// Typical length of strings created by MAKE.
  std::size_t make_length = 200;
  /// Symbols are drawn from [0, alphabet). With alphabet <= 26 strings are
  /// spelled with 'a'.. letters and MAKE/MAKEC literals; otherwise MAKEN.
  Symbol alphabet = 256;
  /// Fraction of index draws that pick a boundary value (1, n, n+1, ...).
  double boundary_bias = 0.2;
  /// Relative frequency of each verb; zero removes it from the script.
  std::array<double, kVerbCount> weights = default_weights();

  static std::array<double, kVerbCount> default_weights();
};

/// Deterministic random script. Every command is valid when replayed from
/// an empty forest (tracked internally with the oracle), so both the forest
/// and the oracle run it without errors.
std::vector<Command> random_workload(std::uint64_t seed, const WorkloadOptions& options);

}  // namespace fest
