#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fest/errors.hpp"
#include "fest/types.hpp"

namespace fest {

/// Generational handle registry. Freed slots are reused last-in first-out,
/// so two registries fed the same insert/erase sequence hand out identical
/// ids (the oracle relies on this to mirror a Forest).
template <class T>
class SlotMap {
 public:
  StringId insert(T value) {
    std::uint32_t slot;
    if (!free_.empty()) {
      slot = free_.back();
      free_.pop_back();
    } else {
      slot = static_cast<std::uint32_t>(slots_.size());
      slots_.emplace_back();
    }
    Slot& s = slots_[slot];
    s.value = std::move(value);
    s.live = true;
    ++live_;
    return {slot, s.generation};
  }

  bool contains(StringId id) const noexcept {
    return id.slot < slots_.size() && slots_[id.slot].live && slots_[id.slot].generation == id.generation;
  }

  T& at(StringId id) {
    if (!contains(id)) throw HandleError("invalid string handle " + describe(id));
    return slots_[id.slot].value;
  }

  const T& at(StringId id) const {
    if (!contains(id)) throw HandleError("invalid string handle " + describe(id));
    return slots_[id.slot].value;
  }

  void erase(StringId id) {
    if (!contains(id)) throw HandleError("invalid string handle " + describe(id));
    Slot& s = slots_[id.slot];
    s.value = T{};
    s.live = false;
    ++s.generation;
    free_.push_back(id.slot);
    --live_;
  }

  std::size_t size() const noexcept { return live_; }

  template <class F>
  void for_each(F&& fn) const {
    for (std::uint32_t k = 0; k < slots_.size(); ++k) {
      if (slots_[k].live) fn(StringId{k, slots_[k].generation}, slots_[k].value);
    }
  }

  static std::string describe(StringId id) {
    return std::to_string(id.slot) + "/" + std::to_string(id.generation);
  }

 private:
  struct Slot {
    T value{};
    std::uint32_t generation = 0;
    bool live = false;
  };

  std::vector<Slot> slots_;
  std::vector<std::uint32_t> free_;
  std::size_t live_ = 0;
};

}  // namespace fest
