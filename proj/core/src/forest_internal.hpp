#pragma once

#include "fest/forest.hpp"

namespace fest {

/// Counts a call and the rotations it caused.
class Forest::OpScope {
 public:
  OpScope(Forest& f, OpKind op) : f_(f), op_(op), before_(f.store_.counters().rotations) {}
  ~OpScope() {
    OpStats& s = f_.per_op_[static_cast<std::size_t>(op_)];
    ++s.calls;
    s.rotations += f_.store_.counters().rotations - before_;
  }
  OpScope(const OpScope&) = delete;
  OpScope& operator=(const OpScope&) = delete;

 private:
  Forest& f_;
  OpKind op_;
  std::uint64_t before_;
};

}  // namespace fest
