#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace braidrep {

/// Group-independent key of a representation class: canonical cycle vertex,
/// b-tuple and, for braid group classes, the element c. Values are 0-based
/// element indices. Engine and oracle censuses are compared through this.
struct ClassKey {
  std::uint32_t a0 = 0;
  std::uint32_t a1 = 0;
  std::vector<std::uint32_t> b;
  std::optional<std::uint32_t> c;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

}  // namespace braidrep
