#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/representation.hpp"
#include "braidrep/shift.hpp"
#include "doctest.h"

using namespace braidrep;

namespace {

std::shared_ptr<const FiniteGroup> make(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(parse_group(spec));
}

Vertex vertex(const FiniteGroup& g, int label0, int label1) {
  return {g.element(static_cast<std::size_t>(label0 - 1)),
          g.element(static_cast<std::size_t>(label1 - 1))};
}

std::vector<int> labels(const std::vector<Element>& xs) {
  std::vector<int> out;
  for (Element x : xs) {
    out.push_back(static_cast<int>(x.index()) + 1);
  }
  return out;
}

const Cycle& find_cycle(const ShiftDecomposition& d, int label0, int label1) {
  return *d.cycle_of(vertex(d.group(), label0, label1));
}

}  // namespace

TEST_CASE("successor examples") {
  const auto s3 = make("S3");
  const FiniteGroup& g = *s3;
  const Element one = g.identity();
  CHECK(successor(g, {one, one}) == Vertex{one, one});

  // (1,a) -> (a,a) -> (a,1) -> (1,a^-1) -> (a^-1,a^-1) -> (a^-1,1) -> (1,a)
  const Element a = g.element(3);  // (123)
  const Element ai = g.inv(a);
  std::vector<Vertex> expected{{one, a}, {a, a}, {a, one}, {one, ai}, {ai, ai}, {ai, one}};
  Vertex v{one, a};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(v == expected[k]);
    v = successor(g, v);
  }
  CHECK(v == expected.front());

  CHECK(successor(g, vertex(g, 2, 3)) == vertex(g, 3, 5));
  CHECK(successor(g, vertex(g, 3, 5)) == vertex(g, 5, 6));
}

TEST_CASE("successor is a bijection with the stated predecessor") {
  for (const char* spec : {"S3", "S4", "S5", "SL2(3)", "Z2xZ4", "SL2(5)"}) {
    const auto group = make(spec);
    const FiniteGroup& g = *group;
    for (Element x : g.elements()) {
      for (Element y : g.elements()) {
        const Vertex v{x, y};
        REQUIRE(successor(g, predecessor(g, v)) == v);
        REQUIRE(predecessor(g, successor(g, v)) == v);
      }
    }
  }
}

TEST_CASE("decomposition of small groups") {
  SUBCASE("trivial group") {
    const auto d = decompose(make("S1"));
    REQUIRE(d->cycles().size() == 1);
    CHECK(d->cycles()[0]->length() == 1);
    CHECK(d->cycles()[0]->type() == CycleType::I);
  }
  SUBCASE("S2") {
    const auto d = decompose(make("S2"));
    REQUIRE(d->cycles().size() == 2);
    CHECK(d->cycles()[0]->length() == 1);
    const Cycle& c = *d->cycles()[1];
    CHECK(c.length() == 3);
    CHECK(c.type() == CycleType::I);
    const FiniteGroup& g = d->group();
    CHECK(c.vertices() == std::vector<Vertex>{vertex(g, 1, 2), vertex(g, 2, 2), vertex(g, 2, 1)});
  }
  SUBCASE("S3") {
    const auto d = decompose(make("S3"));
    std::multiset<std::size_t> type1;
    std::vector<std::pair<std::size_t, Vertex>> type2;
    for (const auto& c : d->cycles()) {
      if (c->type() == CycleType::I) {
        type1.insert(c->length());
      } else {
        type2.emplace_back(c->length(), c->representative());
      }
    }
    CHECK(type1 == std::multiset<std::size_t>{1, 3, 3, 3, 6});
    const FiniteGroup& g = d->group();
    REQUIRE(type2.size() == 3);
    CHECK(type2[0] == std::pair{std::size_t{9}, vertex(g, 2, 3)});
    CHECK(type2[1] == std::pair{std::size_t{9}, vertex(g, 2, 4)});
    CHECK(type2[2] == std::pair{std::size_t{2}, vertex(g, 4, 5)});

    CHECK(labels(find_cycle(*d, 2, 3).word()) == std::vector<int>{5, 6, 2, 5, 3, 6, 5, 2, 3});
    CHECK(labels(find_cycle(*d, 2, 4).word()) == std::vector<int>{6, 3, 4, 2, 6, 4, 3, 2, 4});
    CHECK(labels(find_cycle(*d, 4, 5).word()) == std::vector<int>{4, 5});
  }
}

TEST_CASE("cycle invariants on every built-in backend") {
  for (const char* spec : {"S1", "S2", "S3", "S4", "S5", "SL2(2)", "SL2(3)", "SL2(4)",
                           "SL2(5)", "Z6", "Z2xZ4", "Z5", "A4", "A5"}) {
    CAPTURE(spec);
    const auto d = decompose(make(spec));
    const FiniteGroup& g = d->group();
    std::size_t total = 0;
    for (const auto& [p, count] : d->period_census()) {
      total += p * count;
    }
    CHECK(total == g.order() * g.order());
    CHECK(d->period_census().at(1) == 1);

    for (const auto& c : d->cycles()) {
      const auto& vs = c->vertices();
      std::set<Vertex> distinct(vs.begin(), vs.end());
      REQUIRE(distinct.size() == vs.size());
      Element product = g.identity();
      bool equal_components = false;
      for (std::size_t k = 0; k < vs.size(); ++k) {
        REQUIRE(successor(g, vs[k]) == vs[(k + 1) % vs.size()]);
        REQUIRE(d->cycle_of(vs[k]) == c);
        REQUIRE(vs[0] <= vs[k]);
        product = g.mul(product, vs[k].a0);
        equal_components = equal_components || vs[k].a0 == vs[k].a1;
      }
      REQUIRE(product == g.identity());
      REQUIRE((c->type() == CycleType::I) == equal_components);
      if (c->length() == 2) {
        // (a, a^2) <-> (a^2, a) with a^3 = 1
        const Element a = vs[0].a0;
        REQUIRE(vs[0].a1 == g.mul(a, a));
        REQUIRE(g.pow(a, 3) == g.identity());
      }
    }
    for (std::size_t k = 1; k < d->cycles().size(); ++k) {
      REQUIRE(d->cycles()[k - 1]->representative() < d->cycles()[k]->representative());
    }
  }
}

TEST_CASE("type I census of S_r matches the closed forms") {
  for (int r = 2; r <= 6; ++r) {
    CAPTURE(r);
    const auto d = decompose(make("S" + std::to_string(r)));
    const std::size_t n_r = involution_count(d->group());
    const std::size_t rf = factorial(r);
    CHECK(d->cycle_count(CycleType::I) == (1 + n_r + rf) / 2);
    CHECK(d->representation_count(CycleType::I) == 3 * rf - 2);
    CHECK(d->representation_count(CycleType::I) + d->representation_count(CycleType::II) ==
          rf * rf);
  }
}

TEST_CASE("order-two cycle shape predicts the type I cycle through (a, a)") {
  for (const char* spec : {"S3", "S4", "SL2(3)", "Z6"}) {
    const auto d = decompose(make(spec));
    const FiniteGroup& g = d->group();
    for (Element a : g.elements()) {
      REQUIRE(static_cast<std::size_t>(order2_cycle_shape(g, a)) ==
              d->cycle_of({a, a})->length());
    }
  }
  const auto s3 = make("S3");
  CHECK(order2_cycle_shape(*s3, s3->identity()) == 1);
  CHECK(order2_cycle_shape(*s3, s3->element(1)) == 3);  // (23)
  CHECK(order2_cycle_shape(*s3, s3->element(3)) == 6);  // (123)
}

TEST_CASE("shift advances the phase") {
  const auto group = make("S3");
  const auto d = decompose(group);
  for (const auto& c : d->cycles()) {
    Representation rep{group, c, 0, {}};
    const Representation start = rep;
    for (std::size_t k = 0; k < c->length(); ++k) {
      const Representation next = shift(rep);
      CHECK(next.a(0) == rep.a(1));
      CHECK(next.b == rep.b);
      rep = next;
    }
    CHECK(rep.phase == start.phase);
  }
  const auto& b45 = d->cycle_of(vertex(*group, 4, 5));
  Representation rep{group, b45, 0, {}};
  CHECK(shift(rep).phase == 1);
  CHECK(shift(shift(rep)).phase == 0);
  const Representation trivial{group, d->cycles().front(), 0, {}};
  CHECK(shift(trivial).phase == 0);
}

TEST_CASE("vertex cap and DOT export") {
  CHECK_THROWS_AS(decompose(make("S4"), 100), ResourceError);
  const auto d = decompose(make("S2"));
  const std::string dot = to_dot(*d);
  CHECK(dot.find("digraph shift") != std::string::npos);
  CHECK(dot.find("\"(1,2)\" -> \"(2,2)\"") != std::string::npos);
  CHECK(dot.find("\"(1,1)\" -> \"(1,1)\"") != std::string::npos);
}
