#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fest/fingerprint.hpp"
#include "fest/involution.hpp"
#include "fest/slot_map.hpp"
#include "fest/splay_tree.hpp"
#include "fest/stats.hpp"
#include "fest/types.hpp"

namespace fest {

struct ForestOptions {
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
  Residue modulus = kMersenne61;
  InvolutionTable involution;
  /// Recompute the aggregates of every touched tree after each public
  /// operation and throw AuditError on mismatch. Slow; for testing.
  bool audit = false;
};

namespace detail {

struct Entry {
  NodeId root = kNull;
  Mode mode = Mode::kLinear;
  /// Circular strings: the stored sequence is s^[start..] s^[..start-1].
  std::size_t start = 1;
};

}  // namespace detail

/// A collection of dynamic strings, one splay tree each, sharing a
/// fingerprint context and an involution.
///
/// Positions are 1-based. For circular strings every position refers to the
/// canonical string s^ (the one passed to make_string), whatever the current
/// stored rotation is, and ranges [i..j] with i > j wrap around.
///
/// Queries restructure trees, so even const-looking calls are non-const. A
/// Forest must be confined to one thread at a time.
class Forest {
 public:
  explicit Forest(ForestOptions options = {});

  const FingerprintContext& context() const noexcept { return store_.context(); }
  const InvolutionTable& involution() const noexcept { return store_.involution(); }

  StringId make_string(std::span<const Symbol> w, Mode mode = Mode::kLinear);

  bool contains(StringId s) const noexcept { return strings_.contains(s); }
  std::size_t length(StringId s) const;
  Mode mode(StringId s) const;
  std::size_t string_count() const noexcept { return strings_.size(); }
  std::size_t total_length() const noexcept { return total_length_; }
  std::vector<StringId> handles() const;

  Symbol access(StringId s, std::size_t i);
  /// s[i..j]; i = j + 1 gives the empty sequence on linear strings.
  std::vector<Symbol> retrieve(StringId s, std::size_t i, std::size_t j);
  std::vector<Symbol> retrieve(StringId s);
  void substitute(StringId s, std::size_t i, Symbol c);
  void insert(StringId s, std::size_t i, Symbol c);
  void erase(StringId s, std::size_t i);
  /// s1 becomes s1[..i-1] s2 s1[i..]; the handle s2 is destroyed.
  void introduce(StringId s1, std::size_t i, StringId s2);
  /// Removes s[i..j] and returns it as a new string of the same mode.
  StringId extract(StringId s, std::size_t i, std::size_t j);
  bool equal(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l);
  /// Longest common prefix of s1[i1..] and s2[i2..] and their lexicographic
  /// order (a proper prefix is smaller). For circular strings the suffixes
  /// are the conjugates s^[i..] s^[..i-1].
  LcpResult lcp(StringId s1, std::size_t i1, StringId s2, std::size_t i2);
  void reverse(StringId s, std::size_t i, std::size_t j);
  void map(StringId s, std::size_t i, std::size_t j);

  /// Fingerprint of the whole (canonical) string.
  Fp fingerprint(StringId s);

  // Circular strings.

  /// Rotates the stored sequence so that its stored position i comes first.
  /// The canonical content is unchanged.
  void rotate(StringId s, std::size_t i);
  std::size_t start(StringId s) const;
  /// Stored (rotated) sequence.
  std::vector<Symbol> stored(StringId s);
  /// kappa(s^[i..j]) when i <= j, kappa(s^[i..] s^[..j]) when j < i, without
  /// rotating. 1 <= i <= n + 1, 0 <= j <= n.
  Fp circular_fp(StringId s, std::size_t i, std::size_t j);

  // Omega extensions of circular strings: s^w = s^ s^ s^ ...

  bool equal_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2, std::size_t l);
  /// Whether (s1^w[i1..i1+l1-1])^w equals (s2^w[i2..i2+l2-1])^w.
  bool equal_omega_omega(StringId s1, std::size_t i1, std::size_t l1, StringId s2, std::size_t i2,
                         std::size_t l2);
  OmegaLcpResult lcp_omega(StringId s1, std::size_t i1, StringId s2, std::size_t i2);

  // Introspection.

  Stats stats() const;
  void reset_stats();
  AuditReport audit(StringId s) const;
  AuditReport audit() const;
  NodeId root(StringId s) const { return strings_.at(s).root; }
  TreeStore& store() noexcept { return store_; }
  const TreeStore& store() const noexcept { return store_; }

 private:
  class OpScope;
  class OmegaPair;

  detail::Entry& entry(StringId s) { return strings_.at(s); }
  const detail::Entry& entry(StringId s) const { return strings_.at(s); }

  std::size_t size_of(const detail::Entry& e) const noexcept { return store_.size(e.root); }
  std::size_t to_stored(const detail::Entry& e, std::size_t i) const noexcept;
  void rotate_stored(detail::Entry& e, std::size_t k);
  void set_start(detail::Entry& e, std::size_t target);
  /// Stored start position of the canonical range of `len` symbols at i,
  /// rotating first if the range is not contiguous in storage.
  std::size_t linearize(detail::Entry& e, std::size_t i, std::size_t len);
  /// Stored position at which a symbol inserted before canonical position i
  /// must go (i = n + 1 appends).
  std::size_t insert_slot(const detail::Entry& e, std::size_t i) const noexcept;
  /// Fingerprint of `len` canonical symbols from i, splicing over the
  /// stored end if needed. len <= n.
  Fp window_fp(detail::Entry& e, std::size_t i, std::size_t len);
  Symbol canonical_symbol(detail::Entry& e, std::size_t i);

  void record_lcp(const LcpProbes& probes);
  void audit_after(const detail::Entry& e) const;

  TreeStore store_;
  SlotMap<detail::Entry> strings_;
  std::size_t total_length_ = 0;
  bool audit_;
  std::array<OpStats, kOpKindCount> per_op_{};
  std::uint64_t lcp_calls_ = 0;
  std::uint64_t lcp_squaring_ = 0;
  std::uint64_t lcp_tests_ = 0;
  LcpProbes last_lcp_;
};

}  // namespace fest
