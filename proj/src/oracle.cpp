#include "braidrep/oracle.hpp"

#include <algorithm>
#include <utility>

#include "braidrep/errors.hpp"

namespace braidrep::oracle {

namespace {

struct Sequence {
  std::vector<Element> a;  // one full period a_0..a_{p-1}
  std::pair<std::uint32_t, std::uint32_t> canonical;
};

// Regenerates the z-sequence from (a0, a1) until the pair repeats.
Sequence z_sequence(const FiniteGroup& g, Element a0, Element a1) {
  Sequence s;
  s.a = {a0, a1};
  while (true) {
    const std::size_t k = s.a.size();
    const Element next = g.mul(g.inv(s.a[k - 2]), s.a[k - 1]);
    if (s.a[k - 1] == a0 && next == a1) {
      s.a.pop_back();
      break;
    }
    s.a.push_back(next);
  }
  const std::size_t p = s.a.size();
  s.canonical = {s.a[0].index(), s.a[1 % p].index()};
  for (std::size_t m = 0; m < p; ++m) {
    s.canonical = std::min(s.canonical, std::pair{s.a[m].index(), s.a[(m + 1) % p].index()});
  }
  return s;
}

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  bool check(bool holds) {
    if (++spent_ > limit_) {
      throw ResourceError("oracle budget of " + std::to_string(limit_) +
                          " relation checks exhausted");
    }
    return holds;
  }
  std::size_t spent() const { return spent_; }

 private:
  std::size_t limit_;
  std::size_t spent_ = 0;
};

std::size_t tuple_count(std::size_t order, int length, std::size_t budget) {
  std::size_t total = 1;
  for (int i = 0; i < length; ++i) {
    if (total > budget / std::max<std::size_t>(order, 1)) {
      throw ResourceError("oracle scan of " + std::to_string(order) + "^" +
                          std::to_string(length) + " tuples exceeds the budget of " +
                          std::to_string(budget));
    }
    total *= order;
  }
  return total;
}

// Odometer over Sigma^length; calls visit(tuple) for each.
template <typename Visit>
void for_each_tuple(const FiniteGroup& g, int length, Visit visit) {
  std::vector<std::size_t> digits(static_cast<std::size_t>(length), 0);
  std::vector<Element> tuple(digits.size(), g.element(0));
  while (true) {
    visit(tuple);
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < g.order()) {
        tuple[pos] = g.element(digits[pos]);
        break;
      }
      digits[pos] = 0;
      tuple[pos] = g.element(0);
      if (pos == 0) {
        return;
      }
    }
    if (digits.empty()) {
      return;
    }
  }
}

void finish(Result& r) {
  std::sort(r.classes.begin(), r.classes.end());
  r.classes.erase(std::unique(r.classes.begin(), r.classes.end()), r.classes.end());
}

}  // namespace

Result brute_hom_k3(const FiniteGroup& group) {
  return brute_hom_kn(group, 3, kDefaultBudget);
}

Result brute_hom_kn(const FiniteGroup& g, int n, std::size_t budget) {
  if (n < 3) {
    throw UsageError("brute_hom_kn needs n >= 3");
  }
  tuple_count(g.order(), n - 1, budget);
  Budget spend(budget);
  Result result;

  // z-sequences per (a0, a1), with the recurrence re-verified
  std::vector<Sequence> sequences;
  sequences.reserve(g.order() * g.order());
  for (Element a0 : g.elements()) {
    for (Element a1 : g.elements()) {
      Sequence s = z_sequence(g, a0, a1);
      const std::size_t p = s.a.size();
      for (std::size_t m = 0; m < p; ++m) {
        spend.check(true);
        ensure(g.mul(s.a[m], s.a[(m + 2) % p]) == s.a[(m + 1) % p],
               "oracle z-sequence breaks z_m z_{m+2} = z_{m+1}");
      }
      sequences.push_back(std::move(s));
    }
  }

  const int xs = n - 3;
  auto visit_b = [&](const Sequence& s, const std::vector<Element>& b) {
    const std::size_t p = s.a.size();
    auto z = [&](std::size_t m) { return s.a[m % p]; };
    auto x = [&](int i) { return b[static_cast<std::size_t>(i - 3)]; };
    for (int i = 3; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const Element xi = x(i);
        const Element xj = x(j);
        const bool holds = j - i >= 2
                               ? g.mul(xi, xj) == g.mul(xj, xi)
                               : g.mul(g.mul(xi, xj), xi) == g.mul(g.mul(xj, xi), xj);
        if (!spend.check(holds)) {
          return;
        }
      }
    }
    if (n >= 4) {
      for (std::size_t m = 0; m < p; ++m) {
        const Element lhs = g.mul(g.mul(z(m), x(3)), z(m + 2));
        const Element rhs = g.mul(g.mul(x(3), z(m + 1)), x(3));
        if (!spend.check(lhs == rhs)) {
          return;
        }
      }
    }
    for (int i = 4; i < n; ++i) {
      for (std::size_t m = 0; m < p; ++m) {
        if (!spend.check(g.mul(z(m), x(i)) == g.mul(x(i), z(m + 1)))) {
          return;
        }
      }
    }
    ++result.count;
    ClassKey key;
    key.a0 = s.canonical.first;
    key.a1 = s.canonical.second;
    for (Element e : b) {
      key.b.push_back(e.index());
    }
    result.classes.push_back(std::move(key));
  };

  for (const Sequence& s : sequences) {
    if (xs == 0) {
      visit_b(s, {});
    } else {
      for_each_tuple(g, xs, [&](const std::vector<Element>& b) { visit_b(s, b); });
    }
  }
  result.checks = spend.spent();
  finish(result);
  return result;
}

Result brute_hom_bn(const FiniteGroup& g, int n, std::size_t budget) {
  if (n < 2) {
    throw UsageError("brute_hom_bn needs n >= 2");
  }
  tuple_count(g.order(), n - 1, budget);
  Budget spend(budget);
  Result result;

  for_each_tuple(g, n - 1, [&](const std::vector<Element>& s) {
    // s[k] is the image of sigma_{k+1}
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = i + 1; j + 1 < n; ++j) {
        const bool holds = j - i >= 2
                               ? g.mul(s[i], s[j]) == g.mul(s[j], s[i])
                               : g.mul(g.mul(s[i], s[j]), s[i]) == g.mul(g.mul(s[j], s[i]), s[j]);
        if (!spend.check(holds)) {
          return;
        }
      }
    }
    ++result.count;
    const Element c = g.inv(s[0]);
    ClassKey key;
    key.c = c.index();
    if (n == 2) {
      key.a0 = key.a1 = g.identity().index();
    } else {
      // z_0 = sigma_2 sigma_1^-1, z_1 = sigma_1 z_0 sigma_1^-1, x_i = sigma_i sigma_1^-1
      const Element a0 = g.mul(s[1], c);
      const Element a1 = g.mul(g.mul(s[0], a0), c);
      const Sequence seq = z_sequence(g, a0, a1);
      key.a0 = seq.canonical.first;
      key.a1 = seq.canonical.second;
      for (int i = 3; i < n; ++i) {
        key.b.push_back(g.mul(s[static_cast<std::size_t>(i - 1)], c).index());
      }
    }
    result.classes.push_back(std::move(key));
  });
  result.checks = spend.spent();
  finish(result);
  return result;
}

}  // namespace braidrep::oracle
