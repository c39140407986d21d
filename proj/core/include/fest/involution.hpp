#pragma once

#include <cstddef>
#include <istream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fest/fingerprint.hpp"

namespace fest {

/// A symbol mapping f with f(f(c)) = c. Symbols without an entry map to
/// themselves.
class InvolutionTable {
 public:
  InvolutionTable() = default;

  /// Watson-Crick complement on ASCII codes: A<->T, C<->G.
  static InvolutionTable dna();
  /// Pairs 2k <-> 2k+1 for every code below `alphabet` (rounded down to even).
  static InvolutionTable adjacent_pairs(Symbol alphabet);

  /// Reads lines "codeA codeB". A token made only of digits is a numeric
  /// code, any other token must be a single UTF-8 character. Blank lines and
  /// lines starting with '#' are skipped. Throws UsageError on malformed
  /// lines or on pairs that would break the involution property.
  static InvolutionTable parse(std::istream& in);

  /// Makes f(a) = b and f(b) = a. Re-adding an existing pair is a no-op;
  /// conflicting with an existing pair throws UsageError.
  void add_pair(Symbol a, Symbol b);

  Symbol operator()(Symbol c) const noexcept {
    if (c < dense_.size()) return dense_[c];
    if (sparse_.empty()) return c;
    auto it = sparse_.find(c);
    return it == sparse_.end() ? c : it->second;
  }

  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  Symbol max_symbol() const noexcept { return max_symbol_; }
  const std::vector<std::pair<Symbol, Symbol>>& pairs() const noexcept { return pairs_; }

 private:
  void set(Symbol from, Symbol to);

  std::vector<Symbol> dense_;
  std::unordered_map<Symbol, Symbol> sparse_;
  std::vector<std::pair<Symbol, Symbol>> pairs_;
  Symbol max_symbol_ = 0;
};

}  // namespace fest
