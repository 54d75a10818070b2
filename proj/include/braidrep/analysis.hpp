#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "braidrep/extension.hpp"
#include "braidrep/representation.hpp"

namespace braidrep {

/// Orbits of the subgroup generated by `generators` on {1..r}, each sorted,
/// ordered by smallest point. Requires a permutation realization.
std::vector<std::vector<int>> orbit_partition(const FiniteGroup& group,
                                              std::span<const Element> generators);

/// Whether the image of the representation acts transitively on {1..r}.
bool is_transitive(const Representation& rep);

struct LevelTransitivity {
  int n = 3;
  std::vector<std::vector<std::vector<int>>> class_orbits;  // per class
  std::vector<bool> class_transitive;
  std::size_t transitive_representations = 0;
  /// transitive_representations / (r-1)!
  std::size_t subgroup_count = 0;
};

struct TransitivityReport {
  int degree = 0;
  std::vector<LevelTransitivity> levels;

  const LevelTransitivity& level(int n) const;
};

/// Transitivity of every class at every tower level. Throws InternalError if
/// a transitive count is not divisible by (r-1)!.
TransitivityReport analyze_transitivity(const TowerResult& tower);

struct TypeICensus {
  std::size_t cycle_count = 0;
  std::size_t representation_count = 0;
  std::size_t transitive_representation_count = 0;

  friend bool operator==(const TypeICensus&, const TypeICensus&) = default;
};

/// Closed forms for S_r: ((1 + n_r + r!)/2, 3 r! - 2, 3 (r-1)!), the last
/// one for r >= 2.
TypeICensus type_I_census(int r);
/// The same three numbers counted on an S_r decomposition.
TypeICensus type_I_census(const ShiftDecomposition& decomposition);

/// Number of subgroups of K_n of index r, from the transitive
/// representations into S_r.
std::size_t count_subgroups(int n, int r, const TowerOptions& options = {});

/// Number of subgroups of B_n of index r, from the transitive
/// representations of B_n into S_r.
std::size_t count_braid_subgroups(int n, int r, const TowerOptions& options = {});

/// Orbit length of (a, b) under (a, b) -> (b, b - a) in an abelian group:
/// 1 if a = b = 0; 2 if a = -b and 3a = 0; 3 if 2a = 2b = 0; otherwise 6.
/// Throws UsageError on a non-commutative group.
int abelian_cycle_length(const FiniteGroup& group, Vertex v);

/// The restriction of sigma_i -> (i i+1) to K_n inside S_r:
/// z_m -> (132) for even m, (123) for odd m; x_i -> (12)(i i+1).
Representation pi_representation(int n, int r);

/// Enumerates Hom(K_n, S_n) and confirms every nontrivial class is
/// transitive. Needs n >= 5; smaller n has non-transitive examples.
bool nontrivial_implies_transitive_check(int n, const TowerOptions& options = {});

}  // namespace braidrep
