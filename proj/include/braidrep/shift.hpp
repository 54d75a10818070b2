#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidrep/group.hpp"

namespace braidrep {

/// A node (a_0, a_1) of the shift graph: the images of z_0 and z_1.
struct Vertex {
  Element a0;
  Element a1;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// (a_0, a_1) -> (a_1, a_0^-1 a_1).
Vertex successor(const FiniteGroup& group, Vertex v);
/// (a, b) -> (a b^-1, a); inverse of successor.
Vertex predecessor(const FiniteGroup& group, Vertex v);

enum class CycleType { I, II };

/// A periodic orbit of the successor map, stored from its lexicographically
/// smallest vertex.
class Cycle {
 public:
  Cycle(std::vector<Vertex> vertices, CycleType type);

  std::size_t length() const { return vertices_.size(); }
  CycleType type() const { return type_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex representative() const { return vertices_.front(); }
  /// The fixed point (1, 1) is the only cycle of length one.
  bool is_trivial() const { return vertices_.size() == 1; }

  /// a_m, indices taken mod p (negative m allowed).
  Element a(long long m) const;
  /// a_0, ..., a_{p-1}.
  std::vector<Element> elements() const;
  /// a_2, a_3, ..., a_{p-1}, a_0, a_1: the listing word of a cycle.
  std::vector<Element> word() const;
  /// Position of v in the stored order, or npos.
  std::size_t phase_of(Vertex v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Vertex> vertices_;
  CycleType type_;
};

/// The cycle through v, rotated to its canonical representative.
Cycle cycle_through(const FiniteGroup& group, Vertex v);

/// Partition of Sigma^2 into successor cycles.
class ShiftDecomposition {
 public:
  ShiftDecomposition(std::shared_ptr<const FiniteGroup> group,
                     std::vector<std::shared_ptr<const Cycle>> cycles,
                     std::vector<std::uint32_t> cycle_index);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }

  /// Sorted by canonical representative.
  const std::vector<std::shared_ptr<const Cycle>>& cycles() const { return cycles_; }
  /// p -> number of cycles of length p (the fixed point counted at p = 1).
  const std::map<std::size_t, std::size_t>& period_census() const { return census_; }

  std::size_t cycle_count(CycleType type) const;
  /// Number of representations (vertices) on cycles of the given type.
  std::size_t representation_count(CycleType type) const;

  std::size_t index_of(Vertex v) const;
  const std::shared_ptr<const Cycle>& cycle_of(Vertex v) const {
    return cycles_[index_of(v)];
  }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<std::shared_ptr<const Cycle>> cycles_;
  std::vector<std::uint32_t> cycle_index_;
  std::map<std::size_t, std::size_t> census_;
};

inline constexpr std::size_t kDefaultVertexCap = 10'000'000;

/// Decomposes Sigma^2 into cycles, discovering them from seeds in
/// lexicographic order. Every cycle is checked for a_0 a_1 ... a_{p-1} = 1.
/// Throws ResourceError when |Sigma|^2 exceeds `vertex_cap`.
std::shared_ptr<const ShiftDecomposition> decompose(std::shared_ptr<const FiniteGroup> group,
                                                    std::size_t vertex_cap = kDefaultVertexCap);

/// Predicted length of the type I cycle through (a, a): 1, 3 or 6.
int order2_cycle_shape(const FiniteGroup& group, Element a);

/// Graphviz rendering of the shift graph; type I cycles are colored blue,
/// type II red.
std::string to_dot(const ShiftDecomposition& decomposition);

}  // namespace braidrep
