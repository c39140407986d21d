#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fest/fingerprint.hpp"
#include "fest/involution.hpp"

namespace fest {

using NodeId = std::uint32_t;

/// Index 0 is the shared empty node: size 0, power 1, all fingerprints 0.
inline constexpr NodeId kNull = 0;

/// One symbol of a string plus the aggregates of its subtree.
///
/// The stored aggregates describe the subtree *before* this node's own
/// pending flags are applied: with `rev` set the subtree must be read right to
/// left, with `map` set every symbol below must be read through the
/// involution. Fields of a node never reflect its own flags, only those of
/// its descendants (through TreeStore::view).
struct Node {
  Symbol ch = 0;
  NodeId left = kNull;
  NodeId right = kNull;
  NodeId parent = kNull;
  std::uint32_t size = 0;
  bool rev = false;
  bool map = false;
  Residue power = 1;
  Residue fp = 0;      // kappa(in-order)
  Residue fprev = 0;   // kappa(reverse in-order)
  Residue mfp = 0;     // kappa(f applied to in-order)
  Residue mfprev = 0;  // kappa(f applied to reverse in-order)
};

/// Aggregates of a subtree as seen from its parent, i.e. with the subtree
/// root's own flags applied.
struct Aggregates {
  std::uint64_t size = 0;
  Residue power = 1;
  Residue fp = 0;
  Residue fprev = 0;
  Residue mfp = 0;
  Residue mfprev = 0;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

enum class Side : std::uint8_t { kLeft, kRight };

/// An empty child slot. parent == kNull denotes the root slot of an empty tree.
struct AttachPoint {
  NodeId parent = kNull;
  Side side = Side::kLeft;
};

/// Result of isolate: `node` roots the isolated range (kNull for an empty
/// range), `slot` is where it hangs.
struct Isolation {
  NodeId node = kNull;
  AttachPoint slot;
};

struct SplayCounters {
  std::uint64_t rotations = 0;
  std::uint64_t splays = 0;
  std::uint64_t fixes = 0;
};

struct AuditReport {
  bool ok = true;
  std::size_t nodes = 0;
  std::string error;
};

/// Node arena shared by every tree of a forest, with the enhanced splay tree
/// algorithms on top of it. Trees are identified by their root id; moving a
/// subtree from one tree to another is a pointer splice.
///
/// Ranks are 1-based. Every descent fixes the nodes it visits, so splay and
/// rotate always act on flag-free ancestors. Not thread-safe: reads splay.
class TreeStore {
 public:
  TreeStore(FingerprintContext ctx, InvolutionTable involution);

  const FingerprintContext& context() const noexcept { return ctx_; }
  const InvolutionTable& involution() const noexcept { return f_; }

  const Node& node(NodeId x) const noexcept { return nodes_[x]; }
  std::uint64_t size(NodeId x) const noexcept { return nodes_[x].size; }
  NodeId parent(NodeId x) const noexcept { return nodes_[x].parent; }
  std::size_t live_nodes() const noexcept { return nodes_.size() - 1 - free_.size(); }

  NodeId create(Symbol c);
  void release(NodeId x);

  Aggregates view(NodeId x) const noexcept;
  /// Logical fingerprint of the whole subtree rooted at x.
  Fp fingerprint(NodeId x) const noexcept {
    Aggregates a = view(x);
    return {a.fp, a.power, a.size};
  }

  void pull(NodeId x) noexcept;
  void fix(NodeId x) noexcept;

  /// Rotates the edge between x and its parent.
  void rotate(NodeId x) noexcept;

  /// Splays x until its parent is `until` (kNull: until it is the root). With
  /// forbid_final_zigzig, a zig-zig whose grandparent is a child of `until`
  /// is replaced by two single rotations of x, so the grandparent stays
  /// directly below x.
  void splay(NodeId x, NodeId until = kNull, bool forbid_final_zigzig = false) noexcept;

  /// Node of rank i, splayed to the root. Throws RangeError.
  NodeId find(NodeId& root, std::uint64_t i, bool forbid_final_zigzig = false);

  /// Makes s[i..j] one subtree with at most two ancestors. For i = j + 1 the
  /// result is the empty slot between ranks i-1 and i.
  Isolation isolate(NodeId& root, std::uint64_t i, std::uint64_t j);

  NodeId join(NodeId left, NodeId right);
  NodeId build_balanced(std::span<const Symbol> symbols);

  /// Detaches s[i..j] as a tree of its own and returns its root.
  NodeId cut(NodeId& root, std::uint64_t i, std::uint64_t j);
  /// Inserts the tree `sub` so its first symbol gets rank i (1 <= i <= n+1).
  void paste(NodeId& root, std::uint64_t i, NodeId sub);

  /// New node holding c at rank i (1 <= i <= n+1); it ends up as the root.
  NodeId insert_at(NodeId& root, std::uint64_t i, Symbol c);
  /// Removes the node of rank i and returns its symbol.
  Symbol erase_at(NodeId& root, std::uint64_t i);
  void substitute_at(NodeId& root, std::uint64_t i, Symbol c);

  /// Toggles the lazy flags of an isolated subtree and refreshes its
  /// ancestors.
  void toggle(const Isolation& iso, bool rev, bool map) noexcept;

  /// Fingerprint of s[i..j] (empty when i = j + 1).
  Fp range_fp(NodeId& root, std::uint64_t i, std::uint64_t j);

  /// Appends the in-order symbols below x, fixing every node on the way.
  void collect(NodeId x, std::vector<Symbol>& out);

  /// Fixes every node below x, leaving a flag-free subtree.
  void materialize(NodeId x);

  /// Recomputes every aggregate below root from scratch and compares with the
  /// stored fields; also checks parent links. Does not modify anything.
  AuditReport audit(NodeId root) const;

  std::size_t height(NodeId root) const;
  std::size_t depth(NodeId x) const noexcept;

  const SplayCounters& counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = {}; }

 private:
  NodeId& child(NodeId parent, Side side) noexcept {
    return side == Side::kLeft ? nodes_[parent].left : nodes_[parent].right;
  }
  void pull_upward(NodeId x) noexcept;
  NodeId build(std::span<const Symbol> symbols, std::size_t lo, std::size_t hi);
  void check_rank(NodeId root, std::uint64_t i) const;

  FingerprintContext ctx_;
  InvolutionTable f_;
  std::vector<Node> nodes_;
  std::vector<NodeId> free_;
  SplayCounters counters_;
};

}  // namespace fest
