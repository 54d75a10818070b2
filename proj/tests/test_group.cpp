#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/group.hpp"
#include "doctest.h"

using namespace braidrep;

namespace {

// Test-side S_r: image vectors in lex order straight from next_permutation,
// composed by hand. Shares nothing with FiniteGroup.
std::vector<std::vector<int>> lex_images(int r) {
  std::vector<int> v(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    v[i] = i + 1;
  }
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p[q[i] - 1];
  }
  return out;
}

bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i) + 1) {
      return false;
    }
  }
  return true;
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[p[i] - 1] = static_cast<int>(i) + 1;
  }
  return out;
}

// Orders of the derived series terms of S_r by naive closure.
std::vector<std::size_t> brute_derived_orders(int r) {
  using Set = std::set<std::vector<int>>;
  Set current;
  for (auto& p : lex_images(r)) {
    current.insert(p);
  }
  std::vector<std::size_t> orders{current.size()};
  while (true) {
    Set next;
    for (const auto& g : current) {
      for (const auto& h : current) {
        next.insert(compose(compose(invert(g), invert(h)), compose(g, h)));
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      Set add;
      for (const auto& x : next) {
        for (const auto& y : next) {
          auto z = compose(x, y);
          if (!next.count(z)) {
            add.insert(z);
          }
        }
      }
      if (!add.empty()) {
        grew = true;
        next.insert(add.begin(), add.end());
      }
    }
    if (next.size() == current.size()) {
      break;
    }
    orders.push_back(next.size());
    current = next;
  }
  return orders;
}

void check_axioms_exhaustive(const FiniteGroup& g) {
  const auto elems = g.elements();
  const Element e = g.identity();
  for (Element x : elems) {
    REQUIRE(g.mul(e, x) == x);
    REQUIRE(g.mul(x, e) == x);
    REQUIRE(g.mul(x, g.inv(x)) == e);
    REQUIRE(g.mul(g.inv(x), x) == e);
    for (Element y : elems) {
      const Element xy = g.mul(x, y);
      for (Element z : elems) {
        REQUIRE(g.mul(xy, z) == g.mul(x, g.mul(y, z)));
      }
    }
  }
}

void check_axioms_sampled(const FiniteGroup& g) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const Element x = g.element(pick(rng));
    const Element y = g.element(pick(rng));
    const Element z = g.element(pick(rng));
    REQUIRE(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
    REQUIRE(g.mul(x, g.inv(x)) == g.identity());
    REQUIRE(g.mul(g.identity(), y) == y);
  }
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
  const auto s3 = FiniteGroup::symmetric(3);
  for (Element g : s3.elements()) {
    CHECK(s3.mul(s3.identity(), g) == g);
  }
  // (23)(12) = (132): lex index 2 times lex index 3 is lex index 5
  CHECK(s3.mul(s3.element(1), s3.element(2)) == s3.element(4));
  CHECK(s3.describe(s3.element(4)) == "(132)");

  const auto images = lex_images(4);
  const auto s4 = FiniteGroup::symmetric(4);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      const auto expected = compose(images[i], images[j]);
      const auto k = std::find(images.begin(), images.end(), expected) - images.begin();
      REQUIRE(s4.mul(s4.element(i), s4.element(j)).index() == static_cast<std::uint32_t>(k));
    }
  }
}

TEST_CASE("SL2(3) product of (0,1;-1,0) with itself is -I") {
  const auto g = FiniteGroup::sl2(3);
  Element s{};
  Element minus_one{};
  for (Element x : g.elements()) {
    if (g.matrix(x) == Mat2{{0, 1, 2, 0}}) {
      s = x;
    }
    if (g.matrix(x) == Mat2{{2, 0, 0, 2}}) {
      minus_one = x;
    }
  }
  CHECK(g.mul(s, s) == minus_one);
  CHECK(element_order(g, minus_one) == 2);
}

TEST_CASE("lex rank and unrank") {
  CHECK(lex_rank(Permutation(3)) == 1);
  CHECK(lex_unrank(3, 4) == Permutation::from_images({2, 3, 1}));
  CHECK(lex_unrank(3, 4).to_cycle_string() == "(123)");
  CHECK(lex_unrank(3, 5).to_cycle_string() == "(132)");

  const auto images = lex_images(4);
  for (std::uint64_t rank : {8u, 17u, 24u}) {
    CHECK(lex_unrank(4, rank) == Permutation::from_images(images[rank - 1]));
  }
  CHECK(lex_unrank(4, 8) == Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(lex_unrank(4, 17) == Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
  CHECK(lex_unrank(4, 24) == Permutation::from_cycles(4, {{1, 4}, {2, 3}}));

  for (int r = 1; r <= 6; ++r) {
    for (std::uint64_t rank = 1; rank <= factorial(r); ++rank) {
      REQUIRE(lex_rank(lex_unrank(r, rank)) == rank);
    }
  }
  CHECK_THROWS_AS(lex_unrank(3, 0), UsageError);
  CHECK_THROWS_AS(lex_unrank(3, 7), UsageError);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), UsageError);
}

TEST_CASE("involution counts match a scan of image vectors") {
  for (int r = 2; r <= 5; ++r) {
    std::size_t expected = 0;
    for (const auto& p : lex_images(r)) {
      if (!is_identity(p) && is_identity(compose(p, p))) {
        ++expected;
      }
    }
    CHECK(involution_count(FiniteGroup::symmetric(r)) == expected);
  }
  CHECK(involution_count(FiniteGroup::symmetric(2)) == 1);
  CHECK(involution_count(FiniteGroup::symmetric(3)) == 3);
  CHECK(involution_count(FiniteGroup::symmetric(4)) == 9);
}

TEST_CASE("element orders") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(element_order(s3, s3.identity()) == 1);
  CHECK(element_order(s3, s3.element(3)) == 3);  // (123)
  for (const char* spec : {"S3", "S4", "S5", "S6", "SL2(5)", "Z2xZ4"}) {
    const auto g = parse_group(spec);
    for (Element x : g.elements()) {
      REQUIRE(g.order() % element_order(g, x) == 0);
    }
  }
}

TEST_CASE("group orders") {
  for (int r = 1; r <= 6; ++r) {
    CHECK(FiniteGroup::symmetric(r).order() == factorial(r));
  }
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const std::size_t qs = static_cast<std::size_t>(q);
    CHECK(FiniteGroup::sl2(q).order() == qs * (qs - 1) * (qs + 1));
  }
  CHECK(FiniteGroup::abelian({2, 3, 4}).order() == 24);
  CHECK(FiniteGroup::alternating(5).order() == 60);
}

TEST_CASE("group axioms hold for every backend") {
  for (const char* spec : {"S1", "S2", "S3", "S4", "SL2(2)", "SL2(3)", "SL2(4)", "SL2(5)",
                           "Z6", "Z2xZ4", "A4", "A5"}) {
    CAPTURE(spec);
    const auto g = parse_group(spec);
    if (g.order() <= 120) {
      check_axioms_exhaustive(g);
    } else {
      check_axioms_sampled(g);
    }
  }
  for (const char* spec : {"S5", "S6", "SL2(7)", "SL2(8)", "SL2(9)"}) {
    CAPTURE(spec);
    check_axioms_sampled(parse_group(spec));
  }
}

TEST_CASE("every SL2 element has determinant one") {
  for (int q : {2, 3, 4, 5, 8, 9}) {
    const auto g = FiniteGroup::sl2(q);
    for (Element x : g.elements()) {
      REQUIRE(mat2_det(*g.field(), g.matrix(x)) == 1);
    }
  }
}

TEST_CASE("field arithmetic for prime powers") {
  for (int q : {4, 8, 9}) {
    const FiniteField f(q);
    for (int x = 1; x < q; ++x) {
      int inverses = 0;
      for (int y = 1; y < q; ++y) {
        inverses += f.mul(x, y) == 1;
      }
      REQUIRE(inverses == 1);
      REQUIRE(f.add(x, f.neg(x)) == 0);
    }
  }
  CHECK_THROWS_AS(FiniteField(6), UsageError);
}

TEST_CASE("derived series") {
  const auto z6 = FiniteGroup::abelian({6});
  const auto dz = derived_series(z6);
  CHECK(dz.terms.size() == 2);
  CHECK(dz.terms[0].size() == 6);
  CHECK(dz.perfect_core().size() == 1);
  CHECK(dz.solvable);

  const auto s4 = derived_series(FiniteGroup::symmetric(4));
  std::vector<std::size_t> orders;
  for (const auto& t : s4.terms) {
    orders.push_back(t.size());
  }
  CHECK(orders == brute_derived_orders(4));
  CHECK(orders == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(s4.solvable);

  const auto g5 = FiniteGroup::symmetric(5);
  const auto s5 = derived_series(g5);
  orders.clear();
  for (const auto& t : s5.terms) {
    orders.push_back(t.size());
  }
  CHECK(orders == brute_derived_orders(5));
  CHECK(orders == std::vector<std::size_t>{120, 60});
  CHECK_FALSE(s5.solvable);
  for (Element x : s5.perfect_core()) {
    CHECK(g5.permutation(x).is_even());
  }

  CHECK_THROWS_AS(derived_series(g5, 100), ResourceError);
}

TEST_CASE("mixing elements of different groups is a usage error") {
  const auto a = FiniteGroup::symmetric(3);
  const auto b = FiniteGroup::symmetric(3);
  CHECK_THROWS_AS(a.mul(a.identity(), b.identity()), UsageError);
  CHECK_THROWS_AS(a.element(6), UsageError);
}

TEST_CASE("group specs parse and round-trip") {
  for (const char* spec : {"S4", "SL2(3)", "Z6", "Z2xZ4", "A5"}) {
    const auto g = parse_group(spec);
    CHECK(g.name() == spec);
    CHECK(parse_group(g.name()).order() == g.order());
  }
  CHECK(parse_group("SL2(3)").backend() == Backend::SL2);
  CHECK(parse_group("Z2xZ4").backend() == Backend::Abelian);
  CHECK_THROWS_AS(parse_group("Q8"), UsageError);
  CHECK_THROWS_AS(parse_group("S8"), ResourceError);
}

TEST_CASE("Cayley table files") {
  const auto path = std::filesystem::temp_directory_path() / "braidrep_z3.txt";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n2 0 1\n";
  }
  const auto g = parse_group("table:" + path.string());
  CHECK(g.order() == 3);
  CHECK(g.backend() == Backend::CayleyTable);
  CHECK(g.name() == "table:" + path.string());
  CHECK(element_order(g, g.element(1)) == 3);

  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 0 2\n2 2 1\n";
  }
  CHECK_THROWS_AS(parse_group("table:" + path.string()), UsageError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_group("table:/nonexistent/file"), UsageError);
}
