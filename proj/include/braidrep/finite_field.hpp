#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace braidrep {

/// The field F_q for q prime or q in {4, 8, 9}.
///
/// Elements are indices 0..q-1. For a prime q the index is the residue; for
/// q = p^k the index encodes the polynomial sum c_i x^i as sum c_i p^i,
/// reduced modulo a fixed irreducible polynomial.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }

  int add(int x, int y) const { return add_[x * q_ + y]; }
  int mul(int x, int y) const { return mul_[x * q_ + y]; }
  int neg(int x) const { return neg_[x]; }
  int sub(int x, int y) const { return add(x, neg(y)); }

  static bool supported(int q);

 private:
  int q_;
  int p_;
  int k_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
};

/// A 2x2 matrix (a b; c d) over a FiniteField, entries as field indices.
struct Mat2 {
  std::array<int, 4> entries{};  // a, b, c, d

  int a() const { return entries[0]; }
  int b() const { return entries[1]; }
  int c() const { return entries[2]; }
  int d() const { return entries[3]; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

Mat2 mat2_mul(const FiniteField& field, const Mat2& x, const Mat2& y);
int mat2_det(const FiniteField& field, const Mat2& m);
std::string mat2_to_string(const Mat2& m);

}  // namespace braidrep
