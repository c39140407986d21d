#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fest/fingerprint.hpp"
#include "fest/involution.hpp"
#include "fest/slot_map.hpp"
#include "fest/types.hpp"

namespace fest {

/// Reference implementation of the Forest API on plain arrays: exact
/// symbol-by-symbol answers, O(n) per operation, no hashing.
///
/// Handles are allocated exactly like Forest's, so the same operation
/// sequence yields the same ids in both. Circular strings are kept in
/// canonical form; rotate only validates its arguments.
class OracleForest {
 public:
  explicit OracleForest(InvolutionTable involution = {}, Residue modulus = kMersenne61);

  StringId make_string(std::span<const Symbol> w, Mode mode = Mode::kLinear);

  bool contains(StringId s) const noexcept { return strings_.contains(s); }
  std::size_t length(StringId s) const { return strings_.at(s).symbols.size(); }
  Mode mode(StringId s) const { return strings_.at(s).mode; }
  std::size_t string_count() const noexcept { return strings_.size(); }
  std::size_t total_length() const noexcept { return total_length_; }
  std::vector<StringId> handles() const;
  const std::vector<Symbol>& content(StringId s) const { return strings_.at(s).symbols; }
  const InvolutionTable& involution() const noexcept { return f_; }

  Symbol access(StringId s, std::size_t i);
  std::vector<Symbol> retrieve(StringId s, std::size_t i, std::size_t j);
  std::vector<Symbol> retrieve(StringId s) { return content(s); }
  void substitute(StringId s, std::size_t i, Symbol c);
  void insert(StringId s, std::size_t i, Symbol c);
  void erase(StringId s, std::size_t i);
  void introduce(StringId s1, std::size_t i, StringId s2);
  StringId extract(StringId s, std::size_t i, std::size_t j);
  bool equal(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l);
  LcpResult lcp(StringId s1, std::size_t i1, StringId s2, std::size_t i2);
  void reverse(StringId s, std::size_t i, std::size_t j);
  void map(StringId s, std::size_t i, std::size_t j);

  void rotate(StringId s, std::size_t i);
  bool equal_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l);
  bool equal_omega_omega(StringId s1, std::size_t i1, std::size_t l1, StringId s2, std::size_t i2,
                         std::size_t l2);
  OmegaLcpResult lcp_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2);

 private:
  struct Str {
    std::vector<Symbol> symbols;
    Mode mode = Mode::kLinear;
  };

  void check_symbol(Symbol c) const;
  /// 0-based offsets of the range [i..j] (wrapping for circular strings).
  std::vector<std::size_t> offsets(const Str& s, std::size_t i, std::size_t len) const;

  InvolutionTable f_;
  Residue modulus_;
  SlotMap<Str> strings_;
  std::size_t total_length_ = 0;
};

}  // namespace fest
