#include "fest/splay_tree.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "fest/errors.hpp"

namespace fest {

TreeStore::TreeStore(FingerprintContext ctx, InvolutionTable involution)
    : ctx_(std::move(ctx)), f_(std::move(involution)), nodes_(1) {
  if (f_.max_symbol() >= ctx_.modulus()) {
    throw DomainError("involution uses symbols that do not fit the fingerprint modulus");
  }
}

NodeId TreeStore::create(Symbol c) {
  if (c >= ctx_.modulus()) {
    throw DomainError("symbol " + std::to_string(c) + " does not fit the fingerprint modulus");
  }
  NodeId x;
  if (!free_.empty()) {
    x = free_.back();
    free_.pop_back();
    nodes_[x] = Node{};
  } else {
    if (nodes_.size() >= std::numeric_limits<NodeId>::max()) throw UsageError("node arena exhausted");
    x = static_cast<NodeId>(nodes_.size());
    nodes_.emplace_back();
  }
  nodes_[x].ch = c;
  pull(x);
  return x;
}

void TreeStore::release(NodeId x) {
  if (x == kNull) return;
  nodes_[x] = Node{};
  free_.push_back(x);
}

Aggregates TreeStore::view(NodeId x) const noexcept {
  const Node& n = nodes_[x];
  Aggregates a{n.size, n.power, n.fp, n.fprev, n.mfp, n.mfprev};
  if (n.rev) {
    std::swap(a.fp, a.fprev);
    std::swap(a.mfp, a.mfprev);
  }
  if (n.map) {
    std::swap(a.fp, a.mfp);
    std::swap(a.fprev, a.mfprev);
  }
  return a;
}

void TreeStore::pull(NodeId x) noexcept {
  const Aggregates l = view(nodes_[x].left);
  const Aggregates r = view(nodes_[x].right);
  Node& n = nodes_[x];
  const Residue b = ctx_.base();
  const Residue c = n.ch;
  const Residue fc = f_(n.ch);
  n.size = static_cast<std::uint32_t>(l.size + 1 + r.size);
  n.power = ctx_.mul(ctx_.mul(l.power, b), r.power);
  n.fp = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(l.fp, b), c), r.power), r.fp);
  n.fprev = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(r.fprev, b), c), l.power), l.fprev);
  n.mfp = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(l.mfp, b), fc), r.power), r.mfp);
  n.mfprev = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(r.mfprev, b), fc), l.power), l.mfprev);
}

// rev is resolved before map; both only permute the four fingerprints, so the
// order does not change the outcome.
void TreeStore::fix(NodeId x) noexcept {
  Node& n = nodes_[x];
  if (!n.rev && !n.map) return;
  ++counters_.fixes;
  if (n.rev) {
    n.rev = false;
    if (n.left != kNull) nodes_[n.left].rev = !nodes_[n.left].rev;
    if (n.right != kNull) nodes_[n.right].rev = !nodes_[n.right].rev;
    std::swap(n.left, n.right);
    std::swap(n.fp, n.fprev);
    std::swap(n.mfp, n.mfprev);
  }
  if (n.map) {
    n.map = false;
    if (n.left != kNull) nodes_[n.left].map = !nodes_[n.left].map;
    if (n.right != kNull) nodes_[n.right].map = !nodes_[n.right].map;
    n.ch = f_(n.ch);
    std::swap(n.fp, n.mfp);
    std::swap(n.fprev, n.mfprev);
  }
}

void TreeStore::rotate(NodeId x) noexcept {
  const NodeId p = nodes_[x].parent;
  const NodeId g = nodes_[p].parent;
  if (nodes_[p].left == x) {
    const NodeId b = nodes_[x].right;
    nodes_[p].left = b;
    if (b != kNull) nodes_[b].parent = p;
    nodes_[x].right = p;
  } else {
    const NodeId b = nodes_[x].left;
    nodes_[p].right = b;
    if (b != kNull) nodes_[b].parent = p;
    nodes_[x].left = p;
  }
  nodes_[p].parent = x;
  nodes_[x].parent = g;
  if (g != kNull) {
    if (nodes_[g].left == p) {
      nodes_[g].left = x;
    } else {
      nodes_[g].right = x;
    }
  }
  pull(p);
  pull(x);
  ++counters_.rotations;
}

void TreeStore::splay(NodeId x, NodeId until, bool forbid_final_zigzig) noexcept {
  ++counters_.splays;
  while (nodes_[x].parent != until) {
    const NodeId p = nodes_[x].parent;
    const NodeId g = nodes_[p].parent;
    if (g == until) {
      rotate(x);
      break;
    }
    const bool zigzig = (nodes_[g].left == p) == (nodes_[p].left == x);
    if (zigzig && !(forbid_final_zigzig && nodes_[g].parent == until)) {
      rotate(p);
      rotate(x);
    } else {
      // zig-zag, or the modified final zig-zig: x climbs one edge at a time.
      rotate(x);
      rotate(x);
    }
  }
}

void TreeStore::check_rank(NodeId root, std::uint64_t i) const {
  if (i < 1 || i > size(root)) {
    throw RangeError("rank " + std::to_string(i) + " outside [1.." + std::to_string(size(root)) + "]");
  }
}

NodeId TreeStore::find(NodeId& root, std::uint64_t i, bool forbid_final_zigzig) {
  check_rank(root, i);
  NodeId x = root;
  for (;;) {
    fix(x);
    const std::uint64_t before = nodes_[nodes_[x].left].size;
    if (i == before + 1) break;
    if (i <= before) {
      x = nodes_[x].left;
    } else {
      i -= before + 1;
      x = nodes_[x].right;
    }
  }
  splay(x, kNull, forbid_final_zigzig);
  root = x;
  return x;
}

Isolation TreeStore::isolate(NodeId& root, std::uint64_t i, std::uint64_t j) {
  const std::uint64_t n = size(root);
  if (i < 1 || j > n || i > j + 1) {
    throw RangeError("range [" + std::to_string(i) + ".." + std::to_string(j) + "] outside [1.." +
                     std::to_string(n) + "]");
  }
  if (i == j + 1) {
    if (n == 0) return {kNull, {kNull, Side::kLeft}};
    if (i == 1) {
      find(root, 1);
      return {kNull, {root, Side::kLeft}};
    }
    if (i == n + 1) {
      find(root, n);
      return {kNull, {root, Side::kRight}};
    }
    find(root, i);
    find(root, i - 1, true);
    return {kNull, {nodes_[root].right, Side::kLeft}};
  }
  if (i == 1 && j == n) return {root, {kNull, Side::kLeft}};
  if (i == 1) {
    find(root, j + 1);
    return {nodes_[root].left, {root, Side::kLeft}};
  }
  if (j == n) {
    find(root, i - 1);
    return {nodes_[root].right, {root, Side::kRight}};
  }
  find(root, j + 1);
  find(root, i - 1, true);
  const NodeId upper = nodes_[root].right;
  return {nodes_[upper].left, {upper, Side::kLeft}};
}

void TreeStore::pull_upward(NodeId x) noexcept {
  while (x != kNull) {
    pull(x);
    x = nodes_[x].parent;
  }
}

NodeId TreeStore::join(NodeId left, NodeId right) {
  if (left == kNull) return right;
  if (right == kNull) return left;
  find(left, size(left));
  nodes_[left].right = right;
  nodes_[right].parent = left;
  pull(left);
  return left;
}

NodeId TreeStore::build(std::span<const Symbol> symbols, std::size_t lo, std::size_t hi) {
  if (lo >= hi) return kNull;
  const std::size_t mid = lo + (hi - lo) / 2;
  const NodeId x = create(symbols[mid]);
  const NodeId l = build(symbols, lo, mid);
  const NodeId r = build(symbols, mid + 1, hi);
  nodes_[x].left = l;
  nodes_[x].right = r;
  if (l != kNull) nodes_[l].parent = x;
  if (r != kNull) nodes_[r].parent = x;
  pull(x);
  return x;
}

NodeId TreeStore::build_balanced(std::span<const Symbol> symbols) {
  if (symbols.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw UsageError("string too long for one tree");
  }
  for (Symbol c : symbols) {
    if (c >= ctx_.modulus()) {
      throw DomainError("symbol " + std::to_string(c) + " does not fit the fingerprint modulus");
    }
  }
  if (symbols.size() > free_.size()) nodes_.reserve(nodes_.size() + symbols.size() - free_.size());
  return build(symbols, 0, symbols.size());
}

NodeId TreeStore::cut(NodeId& root, std::uint64_t i, std::uint64_t j) {
  const Isolation iso = isolate(root, i, j);
  if (iso.node == kNull) return kNull;
  if (iso.slot.parent == kNull) {
    root = kNull;
  } else {
    child(iso.slot.parent, iso.slot.side) = kNull;
    pull_upward(iso.slot.parent);
  }
  nodes_[iso.node].parent = kNull;
  return iso.node;
}

void TreeStore::paste(NodeId& root, std::uint64_t i, NodeId sub) {
  if (sub == kNull) {
    if (i < 1 || i > size(root) + 1) throw RangeError("insertion rank out of range");
    return;
  }
  if (static_cast<std::uint64_t>(size(root)) + size(sub) >= std::numeric_limits<std::uint32_t>::max()) {
    throw UsageError("string too long for one tree");
  }
  const Isolation iso = isolate(root, i, i - 1);
  if (iso.slot.parent == kNull) {
    root = sub;
    return;
  }
  child(iso.slot.parent, iso.slot.side) = sub;
  nodes_[sub].parent = iso.slot.parent;
  pull_upward(iso.slot.parent);
}

NodeId TreeStore::insert_at(NodeId& root, std::uint64_t i, Symbol c) {
  const std::uint64_t n = size(root);
  if (i < 1 || i > n + 1) throw RangeError("insertion rank out of range");
  const NodeId y = create(c);
  if (n == 0) {
    root = y;
    return y;
  }
  if (i == n + 1) {
    // Append: the old maximum becomes the left child of the new root.
    const NodeId x = find(root, n);
    nodes_[y].left = x;
    nodes_[x].parent = y;
  } else {
    const NodeId x = find(root, i);
    const NodeId l = nodes_[x].left;
    nodes_[y].left = l;
    if (l != kNull) nodes_[l].parent = y;
    nodes_[x].left = kNull;
    pull(x);
    nodes_[y].right = x;
    nodes_[x].parent = y;
  }
  pull(y);
  root = y;
  return y;
}

Symbol TreeStore::erase_at(NodeId& root, std::uint64_t i) {
  const NodeId x = find(root, i);
  const Symbol c = nodes_[x].ch;
  const NodeId l = nodes_[x].left;
  const NodeId r = nodes_[x].right;
  if (l != kNull) nodes_[l].parent = kNull;
  if (r != kNull) nodes_[r].parent = kNull;
  release(x);
  root = join(l, r);
  return c;
}

void TreeStore::substitute_at(NodeId& root, std::uint64_t i, Symbol c) {
  if (c >= ctx_.modulus()) {
    throw DomainError("symbol " + std::to_string(c) + " does not fit the fingerprint modulus");
  }
  const NodeId x = find(root, i);
  nodes_[x].ch = c;
  pull(x);
}

void TreeStore::toggle(const Isolation& iso, bool rev, bool map) noexcept {
  if (iso.node == kNull) return;
  nodes_[iso.node].rev ^= rev;
  nodes_[iso.node].map ^= map;
  if (iso.slot.parent != kNull) pull_upward(iso.slot.parent);
}

Fp TreeStore::range_fp(NodeId& root, std::uint64_t i, std::uint64_t j) {
  return fingerprint(isolate(root, i, j).node);
}

void TreeStore::collect(NodeId x, std::vector<Symbol>& out) {
  std::vector<NodeId> stack;
  NodeId cur = x;
  while (cur != kNull || !stack.empty()) {
    while (cur != kNull) {
      fix(cur);
      stack.push_back(cur);
      cur = nodes_[cur].left;
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(nodes_[cur].ch);
    cur = nodes_[cur].right;
  }
}

void TreeStore::materialize(NodeId x) {
  std::vector<NodeId> stack;
  if (x != kNull) stack.push_back(x);
  while (!stack.empty()) {
    const NodeId y = stack.back();
    stack.pop_back();
    fix(y);
    if (nodes_[y].left != kNull) stack.push_back(nodes_[y].left);
    if (nodes_[y].right != kNull) stack.push_back(nodes_[y].right);
  }
}

AuditReport TreeStore::audit(NodeId root) const {
  AuditReport report;
  if (root == kNull) return report;
  if (nodes_[root].parent != kNull) {
    report.ok = false;
    report.error = "root " + std::to_string(root) + " has a parent";
    return report;
  }
  // Post-order (left, right, node) without recursion.
  std::vector<NodeId> order;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId y = stack.back();
    stack.pop_back();
    order.push_back(y);
    for (NodeId c : {nodes_[y].left, nodes_[y].right}) {
      if (c == kNull) continue;
      if (nodes_[c].parent != y) {
        report.ok = false;
        report.error = "node " + std::to_string(c) + " does not point back to parent " + std::to_string(y);
        return report;
      }
      stack.push_back(c);
    }
  }
  std::reverse(order.begin(), order.end());

  // Each node's logical aggregates are rebuilt from its children's rebuilt
  // logical aggregates only; stored fields are never read as inputs.
  const Residue b = ctx_.base();
  std::vector<Aggregates> values;
  for (NodeId y : order) {
    const Node& n = nodes_[y];
    Aggregates r;
    if (n.right != kNull) {
      r = values.back();
      values.pop_back();
    }
    Aggregates l;
    if (n.left != kNull) {
      l = values.back();
      values.pop_back();
    }
    const Residue c = n.ch;
    const Residue fc = f_(n.ch);
    Aggregates raw;
    raw.size = l.size + 1 + r.size;
    raw.power = ctx_.mul(ctx_.mul(l.power, b), r.power);
    raw.fp = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(l.fp, b), c), r.power), r.fp);
    raw.fprev = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(r.fprev, b), c), l.power), l.fprev);
    raw.mfp = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(l.mfp, b), fc), r.power), r.mfp);
    raw.mfprev = ctx_.add(ctx_.mul(ctx_.add(ctx_.mul(r.mfprev, b), fc), l.power), l.mfprev);
    const Aggregates stored{n.size, n.power, n.fp, n.fprev, n.mfp, n.mfprev};
    if (!(raw == stored)) {
      report.ok = false;
      report.error = "node " + std::to_string(y) + " stores stale aggregates";
      return report;
    }
    if (n.rev) {
      std::swap(raw.fp, raw.fprev);
      std::swap(raw.mfp, raw.mfprev);
    }
    if (n.map) {
      std::swap(raw.fp, raw.mfp);
      std::swap(raw.fprev, raw.mfprev);
    }
    values.push_back(raw);
    ++report.nodes;
  }
  return report;
}

std::size_t TreeStore::height(NodeId root) const {
  if (root == kNull) return 0;
  std::size_t best = 0;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 1}};
  while (!stack.empty()) {
    auto [y, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes_[y].left != kNull) stack.emplace_back(nodes_[y].left, d + 1);
    if (nodes_[y].right != kNull) stack.emplace_back(nodes_[y].right, d + 1);
  }
  return best;
}

std::size_t TreeStore::depth(NodeId x) const noexcept {
  std::size_t d = 0;
  while (x != kNull && nodes_[x].parent != kNull) {
    x = nodes_[x].parent;
    ++d;
  }
  return d;
}

}  // namespace fest
