#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "braidrep/group.hpp"
#include "braidrep/shift.hpp"

namespace braidrep {

/// A representation of K_n: the z-sequence is the cycle read from `phase`
/// (z_m -> a_{m + phase}); x_i -> b[i - 3] for i = 3..n-1.
struct Representation {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const Cycle> cycle;
  std::size_t phase = 0;
  std::vector<Element> b;

  int n() const { return 3 + static_cast<int>(b.size()); }
  std::size_t period() const { return cycle->length(); }
  /// Image of z_m.
  Element a(long long m) const { return cycle->a(m + static_cast<long long>(phase)); }
  /// Image of x_i, i >= 3.
  Element x(int i) const { return b.at(static_cast<std::size_t>(i - 3)); }
  bool is_trivial() const;
  /// a_0..a_{p-1} followed by the b's.
  std::vector<Element> generators() const;
};

/// Applies the shift: the phase advances by one, the b's are unchanged.
Representation shift(const Representation& rep);

namespace relations {

/// a_m x a_{m+2} = x a_{m+1} x for every m mod p.
bool k4(const FiniteGroup& g, const Cycle& cycle, Element x);
/// a_m x = x a_{m+1} for every m mod p.
bool intertwines(const FiniteGroup& g, const Cycle& cycle, Element x);
/// x y x = y x y.
bool braid(const FiniteGroup& g, Element x, Element y);
/// Every K_n relation: cycle recurrence, the x_3 relation, intertwining of
/// x_i for i >= 4, far commutation and neighbor braiding among the x's.
bool all_hold(const Representation& rep);

}  // namespace relations

}  // namespace braidrep
