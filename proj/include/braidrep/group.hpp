#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "braidrep/finite_field.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

/// Handle to an element of one FiniteGroup. The index is the element's
/// position in the group's canonical enumeration (0-based); the group id
/// ties the handle to the instance that issued it.
class Element {
 public:
  constexpr Element() = default;

  constexpr std::uint32_t index() const { return index_; }
  constexpr std::uint32_t group_id() const { return group_id_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  friend class FiniteGroup;
  constexpr Element(std::uint32_t group_id, std::uint32_t index)
      : group_id_(group_id), index_(index) {}

  std::uint32_t group_id_ = 0;
  std::uint32_t index_ = 0;
};

enum class Backend { Symmetric, SL2, Abelian, CayleyTable };

/// Largest group order for which a full multiplication table is built.
inline constexpr std::size_t kMaxGroupOrder = 5040;

/// An enumerable finite group with its full multiplication table.
///
/// Enumeration orders:
///  - Symmetric(r): lexicographic on image vectors, so index i has lex rank i+1.
///  - SL2(q): lexicographic on (a, b, c, d) field indices.
///  - Abelian(k_1..k_t): lexicographic on the residue tuple.
///  - CayleyTable: the file's own numbering; subgroups keep the parent's order.
///
/// Instances are immutable after construction.
class FiniteGroup {
 public:
  static FiniteGroup symmetric(int degree);
  static FiniteGroup alternating(int degree);
  static FiniteGroup sl2(int q);
  static FiniteGroup abelian(std::vector<int> moduli);
  /// rows[i][j] = index of i*j. Validated: closure, identity, inverses,
  /// associativity (exhaustive up to order 200, sampled above).
  static FiniteGroup from_table(const std::vector<std::vector<std::uint32_t>>& rows,
                                std::string name = "table");
  static FiniteGroup from_table_file(const std::string& path);
  /// The subgroup formed by `elements` (must be closed), enumerated in the
  /// parent's order. Permutation and matrix realizations carry over.
  static FiniteGroup subgroup(const FiniteGroup& parent, std::span<const Element> elements,
                              std::string name);

  std::size_t order() const { return order_; }
  Backend backend() const { return backend_; }
  const std::string& name() const { return name_; }
  std::uint32_t id() const { return id_; }

  Element identity() const { return Element(id_, identity_); }
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;

  Element mul(Element g, Element h) const;
  Element inv(Element g) const;
  Element pow(Element g, long long exponent) const;
  Element conjugate(Element g, Element by) const;  // by * g * by^-1
  Element commutator(Element g, Element h) const;  // g^-1 h^-1 g h
  bool commute(Element g, Element h) const { return mul(g, h) == mul(h, g); }
  bool contains(Element g) const { return g.group_id() == id_ && g.index() < order_; }

  /// Display label used by every reporter: index + 1 (the lex rank for S_r).
  std::string label(Element g) const;
  /// Human-readable element: cycle notation, matrix, residue tuple or "g<i>".
  std::string describe(Element g) const;

  /// Degree r when elements are permutations of {1..r}.
  std::optional<int> degree() const { return degree_; }
  const Permutation& permutation(Element g) const;
  /// Element whose permutation is p; requires a permutation realization.
  std::optional<Element> find(const Permutation& p) const;

  const std::vector<int>& moduli() const { return moduli_; }
  const std::vector<int>& residues(Element g) const;
  const Mat2& matrix(Element g) const;
  const FiniteField* field() const { return field_.get(); }

 private:
  FiniteGroup() = default;
  void check(Element g) const;
  void finish_table();

  std::uint32_t id_ = 0;
  Backend backend_ = Backend::CayleyTable;
  std::string name_;
  std::size_t order_ = 0;
  std::uint32_t identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::optional<int> degree_;
  std::vector<Permutation> perms_;
  std::vector<int> moduli_;
  std::vector<std::vector<int>> residues_;
  std::shared_ptr<const FiniteField> field_;
  std::vector<Mat2> mats_;
};

/// Parses "S4", "A5", "SL2(3)", "Z6", "Z2xZ4" or "table:<path>".
FiniteGroup parse_group(const std::string& spec);

/// Least k >= 1 with g^k = 1.
std::size_t element_order(const FiniteGroup& group, Element g);

/// Number of elements of order exactly two.
std::size_t involution_count(const FiniteGroup& group);

/// Subgroup generated by `generators`, as a sorted element list.
std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        std::span<const Element> generators);

struct DerivedSeries {
  /// G, G', G'', ... each strictly smaller than the previous; the last term
  /// is the perfect core. Terms are sorted element lists.
  std::vector<std::vector<Element>> terms;
  bool solvable = false;

  const std::vector<Element>& perfect_core() const { return terms.back(); }
};

/// Throws ResourceError when the group order exceeds `cap`.
DerivedSeries derived_series(const FiniteGroup& group, std::size_t cap = 5040);

}  // namespace braidrep
