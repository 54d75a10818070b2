#include "braidrep/finite_field.hpp"

#include <sstream>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

bool is_prime(int n) {
  if (n < 2) {
    return false;
  }
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

struct PrimePower {
  int p;
  int k;
  // monic irreducible modulus, low coefficients c_0..c_{k-1} (x^k = -sum c_i x^i)
  std::vector<int> low;
};

// x^2+x+1 over F_2, x^3+x+1 over F_2, x^2+1 over F_3
const PrimePower* prime_power_entry(int q) {
  static const PrimePower table[] = {
      {2, 2, {1, 1}},
      {2, 3, {1, 1, 0}},
      {3, 2, {1, 0}},
  };
  for (const auto& entry : table) {
    int value = 1;
    for (int i = 0; i < entry.k; ++i) {
      value *= entry.p;
    }
    if (value == q) {
      return &entry;
    }
  }
  return nullptr;
}

std::vector<int> digits(int x, int p, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out[i] = x % p;
    x /= p;
  }
  return out;
}

int from_digits(const std::vector<int>& d, int p) {
  int x = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    x = x * p + *it;
  }
  return x;
}

}  // namespace

bool FiniteField::supported(int q) {
  return (is_prime(q) && q < 256) || prime_power_entry(q) != nullptr;
}

FiniteField::FiniteField(int q) : q_(q), p_(q), k_(1) {
  if (!supported(q)) {
    throw UsageError("unsupported field order " + std::to_string(q));
  }
  const auto qs = static_cast<std::size_t>(q);
  add_.resize(qs * qs);
  mul_.resize(qs * qs);
  neg_.resize(qs);

  if (is_prime(q)) {
    for (int x = 0; x < q; ++x) {
      neg_[x] = (q - x) % q;
      for (int y = 0; y < q; ++y) {
        add_[x * q + y] = (x + y) % q;
        mul_[x * q + y] = (x * y) % q;
      }
    }
    return;
  }

  const PrimePower& pp = *prime_power_entry(q);
  p_ = pp.p;
  k_ = pp.k;
  for (int x = 0; x < q; ++x) {
    const auto dx = digits(x, p_, k_);
    std::vector<int> n(dx.size());
    for (std::size_t i = 0; i < dx.size(); ++i) {
      n[i] = (p_ - dx[i]) % p_;
    }
    neg_[x] = from_digits(n, p_);
    for (int y = 0; y < q; ++y) {
      const auto dy = digits(y, p_, k_);
      std::vector<int> s(dx.size());
      for (std::size_t i = 0; i < dx.size(); ++i) {
        s[i] = (dx[i] + dy[i]) % p_;
      }
      add_[x * q + y] = from_digits(s, p_);

      std::vector<int> prod(static_cast<std::size_t>(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          prod[i + j] = (prod[i + j] + dx[i] * dy[j]) % p_;
        }
      }
      for (int deg = 2 * k_ - 2; deg >= k_; --deg) {
        const int lead = prod[deg];
        if (lead == 0) {
          continue;
        }
        prod[deg] = 0;
        for (int i = 0; i < k_; ++i) {
          prod[deg - k_ + i] = ((prod[deg - k_ + i] - lead * pp.low[i]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(k_));
      mul_[x * q + y] = from_digits(prod, p_);
    }
  }
}

Mat2 mat2_mul(const FiniteField& f, const Mat2& x, const Mat2& y) {
  return Mat2{{f.add(f.mul(x.a(), y.a()), f.mul(x.b(), y.c())),
               f.add(f.mul(x.a(), y.b()), f.mul(x.b(), y.d())),
               f.add(f.mul(x.c(), y.a()), f.mul(x.d(), y.c())),
               f.add(f.mul(x.c(), y.b()), f.mul(x.d(), y.d()))}};
}

int mat2_det(const FiniteField& f, const Mat2& m) {
  return f.sub(f.mul(m.a(), m.d()), f.mul(m.b(), m.c()));
}

std::string mat2_to_string(const Mat2& m) {
  std::ostringstream out;
  out << '(' << m.a() << ',' << m.b() << ';' << m.c() << ',' << m.d() << ')';
  return out.str();
}

}  // namespace braidrep
