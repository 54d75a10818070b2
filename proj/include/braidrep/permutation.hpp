#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace braidrep {

/// A permutation of {1,...,r} stored as its image vector (tau(1),...,tau(r)).
///
/// Products follow function composition: (p * q)(x) = p(q(x)), so the right
/// factor acts first.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on {1,...,degree}.
  explicit Permutation(int degree);

  /// From a 1-based image vector; throws UsageError unless it is a bijection.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);

  /// From disjoint cycles in 1-based notation, e.g. {{1, 2}, {3, 4}}.
  static Permutation from_cycles(int degree,
                                 std::initializer_list<std::initializer_list<int>> cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point - 1]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;

  /// Cycle notation with the identity written as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// Position (1-based) of p among all permutations of its degree ordered
/// lexicographically by image vector. The identity has rank 1.
std::uint64_t lex_rank(const Permutation& p);

/// Inverse of lex_rank. Throws UsageError when rank is outside 1..degree!.
Permutation lex_unrank(int degree, std::uint64_t rank);

std::uint64_t factorial(int n);

}  // namespace braidrep
