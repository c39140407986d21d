#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace fest {

/// Handle to a dynamic string. The generation makes stale handles (strings
/// consumed by introduce) detectable instead of aliasing a newer string.
struct StringId {
  std::uint32_t slot = 0;
  std::uint32_t generation = 0;

  friend bool operator==(const StringId&, const StringId&) = default;
};

enum class Mode : std::uint8_t { kLinear, kCircular };

enum class Ordering : std::int8_t { kLess = -1, kEqual = 0, kGreater = 1 };

inline std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess:
      return "LESS";
    case Ordering::kEqual:
      return "EQUAL";
    case Ordering::kGreater:
      return "GREATER";
  }
  return "?";
}

inline Ordering ordering_from_sign(int sign) {
  return sign < 0 ? Ordering::kLess : (sign > 0 ? Ordering::kGreater : Ordering::kEqual);
}

struct LcpResult {
  std::size_t length = 0;
  Ordering order = Ordering::kEqual;

  friend bool operator==(const LcpResult&, const LcpResult&) = default;
};

/// Length of a longest common prefix of two omega extensions: a finite value,
/// or infinite when the two infinite strings coincide.
class OmegaLength {
 public:
  static OmegaLength finite(std::size_t value) { return OmegaLength(false, value); }
  static OmegaLength infinite() { return OmegaLength(true, 0); }

  bool is_infinite() const noexcept { return infinite_; }
  /// Meaningful only for finite lengths.
  std::size_t value() const noexcept { return value_; }

  friend bool operator==(const OmegaLength&, const OmegaLength&) = default;

 private:
  OmegaLength(bool infinite, std::size_t value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  std::size_t value_;
};

struct OmegaLcpResult {
  OmegaLength length = OmegaLength::finite(0);
  Ordering order = Ordering::kEqual;

  friend bool operator==(const OmegaLcpResult&, const OmegaLcpResult&) = default;
};

}  // namespace fest

template <>
struct std::hash<fest::StringId> {
  std::size_t operator()(const fest::StringId& id) const noexcept {
    return (static_cast<std::size_t>(id.generation) << 32) | id.slot;
  }
};
