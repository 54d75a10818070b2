#pragma once

#include <cstddef>
#include <vector>

#include "braidrep/census.hpp"
#include "braidrep/group.hpp"

namespace braidrep::oracle {

/// Brute-force enumeration of Hom(K_n, Sigma) and Hom(B_n, Sigma) from the
/// group presentations alone.
///
/// Nothing here touches the shift decomposition or the staged extension
/// search: tuples of generator images are scanned exhaustively and every
/// defining relation is evaluated. For K_n the z-sequence is regenerated from
/// (a_0, a_1) with a_{m+2} = a_m^-1 a_{m+1} until the starting pair returns.
/// Checking each relation family over that single period is enough: every
/// family is stated for all m in Z, and replacing m by m + p maps the family
/// onto itself because a_{m+p} = a_m.

struct Result {
  /// Number of homomorphisms.
  std::size_t count = 0;
  /// Distinct classes (canonical vertex, b-tuple, c), sorted.
  std::vector<ClassKey> classes;
  /// Relation evaluations spent.
  std::size_t checks = 0;
};

inline constexpr std::size_t kDefaultBudget = 100'000'000;

/// Hom(K_3, Sigma); the count is always |Sigma|^2.
Result brute_hom_k3(const FiniteGroup& group);

/// Scans (a_0, a_1, b_3, ..., b_{n-1}) in Sigma^(n-1). Throws ResourceError
/// when the tuple count or the relation evaluations exceed `budget`.
Result brute_hom_kn(const FiniteGroup& group, int n, std::size_t budget = kDefaultBudget);

/// Scans (s_1, ..., s_{n-1}) in Sigma^(n-1) against the braid relations.
/// Each hit is keyed by its restriction to K_n together with c = s_1^-1,
/// matching the engine's braid extension convention.
Result brute_hom_bn(const FiniteGroup& group, int n, std::size_t budget = kDefaultBudget);

}  // namespace braidrep::oracle
