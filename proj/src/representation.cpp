#include "braidrep/representation.hpp"

namespace braidrep {

bool Representation::is_trivial() const {
  if (!cycle->is_trivial()) {
    return false;
  }
  for (Element x : b) {
    if (x != group->identity()) {
      return false;
    }
  }
  return true;
}

std::vector<Element> Representation::generators() const {
  std::vector<Element> out = cycle->elements();
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Representation shift(const Representation& rep) {
  Representation next = rep;
  next.phase = (rep.phase + 1) % rep.period();
  return next;
}

namespace relations {

bool k4(const FiniteGroup& g, const Cycle& cycle, Element x) {
  const auto p = static_cast<long long>(cycle.length());
  for (long long m = 0; m < p; ++m) {
    const Element lhs = g.mul(g.mul(cycle.a(m), x), cycle.a(m + 2));
    const Element rhs = g.mul(g.mul(x, cycle.a(m + 1)), x);
    if (lhs != rhs) {
      return false;
    }
  }
  return true;
}

bool intertwines(const FiniteGroup& g, const Cycle& cycle, Element x) {
  const auto p = static_cast<long long>(cycle.length());
  for (long long m = 0; m < p; ++m) {
    if (g.mul(cycle.a(m), x) != g.mul(x, cycle.a(m + 1))) {
      return false;
    }
  }
  return true;
}

bool braid(const FiniteGroup& g, Element x, Element y) {
  return g.mul(g.mul(x, y), x) == g.mul(g.mul(y, x), y);
}

bool all_hold(const Representation& rep) {
  const FiniteGroup& g = *rep.group;
  const auto p = static_cast<long long>(rep.period());
  for (long long m = 0; m < p; ++m) {
    if (g.mul(rep.a(m), rep.a(m + 2)) != rep.a(m + 1)) {
      return false;
    }
  }
  const int n = rep.n();
  if (n >= 4 && !k4(g, *rep.cycle, rep.x(3))) {
    return false;
  }
  for (int i = 4; i < n; ++i) {
    if (!intertwines(g, *rep.cycle, rep.x(i))) {
      return false;
    }
  }
  for (int i = 3; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool ok = j - i >= 2 ? g.commute(rep.x(i), rep.x(j)) : braid(g, rep.x(i), rep.x(j));
      if (!ok) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace relations

}  // namespace braidrep
