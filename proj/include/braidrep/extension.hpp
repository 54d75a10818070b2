#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "braidrep/census.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/shift.hpp"

namespace braidrep {

/// All b_3 with a_m b_3 a_{m+2} = b_3 a_{m+1} b_3 for every m, in index
/// order. Always contains the identity; type I cycles admit nothing else.
std::vector<Element> extend_to_k4(const FiniteGroup& group, const Cycle& cycle);

/// Nontrivial b_i extending a K_i representation (i >= 4) to K_{i+1}:
/// intertwines the z-sequence by one step, commutes with b_3..b_{i-2} and
/// braids with b_{i-1}. `rep` must be trivial (result empty) or ride a
/// type II cycle with every b nontrivial; anything else is a UsageError.
std::vector<Element> extend_step(const Representation& rep);

/// Elements c with a_m c = c a_{m+1} for every m and c b_i = b_i c for every
/// i. Such a c yields the braid group representation
///   sigma_1 -> c^-1,  sigma_2 -> a_0 c^-1,  sigma_i -> b_i c^-1 (i >= 3).
/// The trivial representation admits every element.
std::vector<Element> extend_to_braid(const Representation& rep);

/// One surviving (cycle, b-tuple) class at some level of the tower.
struct TowerClass {
  std::shared_ptr<const Cycle> cycle;
  std::vector<Element> b;
  /// Admissible c for the braid group extension, in index order.
  std::vector<Element> braid;
  /// Index of the class this one restricts to at the previous level.
  std::size_t parent = static_cast<std::size_t>(-1);

  bool is_trivial(const FiniteGroup& group) const;
};

struct TowerLevel {
  int n = 3;
  std::vector<TowerClass> classes;

  std::size_t class_count() const { return classes.size(); }
  /// |Hom(K_n, Sigma)|: every class contributes its cycle length.
  std::size_t representation_count() const;
  /// Number of (class, c) pairs.
  std::size_t braid_class_count() const;
  /// |Hom(B_n, Sigma)|.
  std::size_t braid_representation_count() const;
};

struct TowerOptions {
  unsigned threads = 1;
  /// Re-derive every level by direct scans (extend_step, extend_to_braid)
  /// and require agreement with the staged search.
  bool cross_check = false;
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// Census of Hom(K_i, Sigma) and Hom(B_i, Sigma) for i = 3..n_max.
class TowerResult {
 public:
  TowerResult(std::shared_ptr<const ShiftDecomposition> decomposition,
              std::vector<TowerLevel> levels);

  const FiniteGroup& group() const { return decomposition_->group(); }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return decomposition_->group_ptr(); }
  const ShiftDecomposition& decomposition() const { return *decomposition_; }
  int n_max() const { return 2 + static_cast<int>(levels_.size()); }
  const std::vector<TowerLevel>& levels() const { return levels_; }
  const TowerLevel& level(int n) const;
  Representation representation(int n, std::size_t class_index, std::size_t phase = 0) const;

 private:
  std::shared_ptr<const ShiftDecomposition> decomposition_;
  std::vector<TowerLevel> levels_;
};

TowerResult compute_tower(std::shared_ptr<const FiniteGroup> group, int n_max,
                          const TowerOptions& options = {});

/// |Hom(B_n, Sigma)| = |Sigma| when Hom(K_n, Sigma) is trivial: every
/// representation has cyclic image. Throws UsageError if the level holds a
/// nontrivial class.
std::size_t hom_bn_when_kn_trivial(const TowerResult& tower, int n);

/// Sorted class keys of Hom(K_n, Sigma).
std::vector<ClassKey> k_census(const TowerResult& tower, int n);
/// Sorted (class, c) keys of Hom(B_n, Sigma); n = 2 gives the trivial class
/// with every c.
std::vector<ClassKey> b_census(const TowerResult& tower, int n);

}  // namespace braidrep
