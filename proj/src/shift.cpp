#include "braidrep/shift.hpp"

#include <algorithm>
#include <sstream>

#include "braidrep/errors.hpp"

namespace braidrep {

Vertex successor(const FiniteGroup& group, Vertex v) {
  return {v.a1, group.mul(group.inv(v.a0), v.a1)};
}

Vertex predecessor(const FiniteGroup& group, Vertex v) {
  return {group.mul(v.a0, group.inv(v.a1)), v.a0};
}

Cycle::Cycle(std::vector<Vertex> vertices, CycleType type)
    : vertices_(std::move(vertices)), type_(type) {
  ensure(!vertices_.empty(), "empty cycle");
}

Element Cycle::a(long long m) const {
  const auto p = static_cast<long long>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((m % p) + p) % p)].a0;
}

std::vector<Element> Cycle::elements() const {
  std::vector<Element> out;
  out.reserve(vertices_.size());
  for (const Vertex& v : vertices_) {
    out.push_back(v.a0);
  }
  return out;
}

std::vector<Element> Cycle::word() const {
  std::vector<Element> out;
  out.reserve(vertices_.size());
  for (std::size_t k = 2; k < vertices_.size() + 2; ++k) {
    out.push_back(a(static_cast<long long>(k)));
  }
  return out;
}

std::size_t Cycle::phase_of(Vertex v) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), v);
  return it == vertices_.end() ? npos : static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

// Walks the orbit of `seed`; returns the vertices in successor order
// starting at seed.
std::vector<Vertex> orbit(const FiniteGroup& group, Vertex seed) {
  std::vector<Vertex> out{seed};
  for (Vertex v = successor(group, seed); v != seed; v = successor(group, v)) {
    out.push_back(v);
  }
  return out;
}

CycleType classify(const std::vector<Vertex>& vertices) {
  const bool type_one = std::any_of(vertices.begin(), vertices.end(),
                                    [](const Vertex& v) { return v.a0 == v.a1; });
  return type_one ? CycleType::I : CycleType::II;
}

void check_product_identity(const FiniteGroup& group, const Cycle& cycle) {
  Element product = group.identity();
  for (const Vertex& v : cycle.vertices()) {
    product = group.mul(product, v.a0);
  }
  ensure(product == group.identity(), "cycle product a_0...a_{p-1} is not the identity");
}

}  // namespace

Cycle cycle_through(const FiniteGroup& group, Vertex v) {
  auto vertices = orbit(group, v);
  const auto smallest = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), smallest, vertices.end());
  const CycleType type = classify(vertices);
  return Cycle(std::move(vertices), type);
}

ShiftDecomposition::ShiftDecomposition(std::shared_ptr<const FiniteGroup> group,
                                       std::vector<std::shared_ptr<const Cycle>> cycles,
                                       std::vector<std::uint32_t> cycle_index)
    : group_(std::move(group)), cycles_(std::move(cycles)), cycle_index_(std::move(cycle_index)) {
  for (const auto& c : cycles_) {
    ++census_[c->length()];
  }
}

std::size_t ShiftDecomposition::cycle_count(CycleType type) const {
  return static_cast<std::size_t>(std::count_if(
      cycles_.begin(), cycles_.end(), [type](const auto& c) { return c->type() == type; }));
}

std::size_t ShiftDecomposition::representation_count(CycleType type) const {
  std::size_t total = 0;
  for (const auto& c : cycles_) {
    if (c->type() == type) {
      total += c->length();
    }
  }
  return total;
}

std::size_t ShiftDecomposition::index_of(Vertex v) const {
  const std::size_t n = group_->order();
  if (!group_->contains(v.a0) || !group_->contains(v.a1)) {
    throw UsageError("vertex does not belong to " + group_->name());
  }
  return cycle_index_[v.a0.index() * n + v.a1.index()];
}

std::shared_ptr<const ShiftDecomposition> decompose(std::shared_ptr<const FiniteGroup> group,
                                                    std::size_t vertex_cap) {
  const std::size_t n = group->order();
  if (n * n > vertex_cap) {
    throw ResourceError("shift graph has " + std::to_string(n * n) +
                        " vertices, above the cap of " + std::to_string(vertex_cap));
  }
  constexpr auto unvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> cycle_index(n * n, unvisited);
  std::vector<std::shared_ptr<const Cycle>> cycles;

  // Seeds in lex order: the first unvisited seed of a cycle is its minimum.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cycle_index[i * n + j] != unvisited) {
        continue;
      }
      const Vertex seed{group->element(i), group->element(j)};
      auto vertices = orbit(*group, seed);
      const auto id = static_cast<std::uint32_t>(cycles.size());
      for (const Vertex& v : vertices) {
        cycle_index[v.a0.index() * n + v.a1.index()] = id;
      }
      const CycleType type = classify(vertices);
      auto cycle = std::make_shared<const Cycle>(std::move(vertices), type);
      check_product_identity(*group, *cycle);
      cycles.push_back(std::move(cycle));
    }
  }
  return std::make_shared<const ShiftDecomposition>(std::move(group), std::move(cycles),
                                                    std::move(cycle_index));
}

int order2_cycle_shape(const FiniteGroup& group, Element a) {
  if (a == group.identity()) {
    return 1;
  }
  return group.mul(a, a) == group.identity() ? 3 : 6;
}

std::string to_dot(const ShiftDecomposition& decomposition) {
  const FiniteGroup& g = decomposition.group();
  std::ostringstream out;
  out << "digraph shift {\n";
  for (const auto& cycle : decomposition.cycles()) {
    const char* color = cycle->type() == CycleType::I ? "blue" : "red";
    for (const Vertex& v : cycle->vertices()) {
      out << "  \"(" << g.label(v.a0) << "," << g.label(v.a1) << ")\" [color=" << color
          << "];\n";
    }
    for (const Vertex& v : cycle->vertices()) {
      const Vertex w = successor(g, v);
      out << "  \"(" << g.label(v.a0) << "," << g.label(v.a1) << ")\" -> \"(" << g.label(w.a0)
          << "," << g.label(w.a1) << ")\" [color=" << color << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace braidrep
