#include "braidrep/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

int require_degree(const FiniteGroup& group) {
  if (!group.degree()) {
    throw UsageError(group.name() + " is not a permutation group");
  }
  return *group.degree();
}

std::size_t exact_subgroup_count(std::size_t transitive, int r) {
  const std::size_t divisor = factorial(r - 1);
  ensure(transitive % divisor == 0, "transitive count " + std::to_string(transitive) +
                                        " is not divisible by (r-1)! = " +
                                        std::to_string(divisor));
  return transitive / divisor;
}

std::shared_ptr<const FiniteGroup> symmetric_ptr(int r) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(r));
}

}  // namespace

std::vector<std::vector<int>> orbit_partition(const FiniteGroup& group,
                                              std::span<const Element> generators) {
  const int r = require_degree(group);
  std::vector<int> parent(static_cast<std::size_t>(r) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (Element g : generators) {
    const Permutation& p = group.permutation(g);
    for (int x = 1; x <= r; ++x) {
      const int u = find_root(parent, x);
      const int v = find_root(parent, p(x));
      if (u != v) {
        parent[std::max(u, v)] = std::min(u, v);
      }
    }
  }
  std::map<int, std::vector<int>> by_root;
  for (int x = 1; x <= r; ++x) {
    by_root[find_root(parent, x)].push_back(x);
  }
  std::vector<std::vector<int>> orbits;
  for (auto& [root, points] : by_root) {
    orbits.push_back(std::move(points));
  }
  return orbits;
}

bool is_transitive(const Representation& rep) {
  const auto gens = rep.generators();
  return orbit_partition(*rep.group, gens).size() == 1;
}

const LevelTransitivity& TransitivityReport::level(int n) const {
  for (const auto& l : levels) {
    if (l.n == n) {
      return l;
    }
  }
  throw UsageError("no transitivity data for level " + std::to_string(n));
}

TransitivityReport analyze_transitivity(const TowerResult& tower) {
  const FiniteGroup& g = tower.group();
  const int r = require_degree(g);
  if (g.backend() != Backend::Symmetric) {
    throw UsageError("subgroup counting needs a full symmetric group, got " + g.name());
  }
  TransitivityReport report;
  report.degree = r;
  for (const auto& level : tower.levels()) {
    LevelTransitivity lt;
    lt.n = level.n;
    for (const auto& cls : level.classes) {
      std::vector<Element> gens = cls.cycle->elements();
      gens.insert(gens.end(), cls.b.begin(), cls.b.end());
      auto orbits = orbit_partition(g, gens);
      const bool transitive = orbits.size() == 1;
      if (transitive) {
        lt.transitive_representations += cls.cycle->length();
      }
      lt.class_transitive.push_back(transitive);
      lt.class_orbits.push_back(std::move(orbits));
    }
    lt.subgroup_count = exact_subgroup_count(lt.transitive_representations, r);
    report.levels.push_back(std::move(lt));
  }
  return report;
}

TypeICensus type_I_census(int r) {
  if (r < 1) {
    throw UsageError("type I census needs r >= 1");
  }
  // involutions: sum over k >= 1 of r! / (k! 2^k (r-2k)!)
  std::size_t involutions = 0;
  for (int k = 1; 2 * k <= r; ++k) {
    involutions += factorial(r) / (factorial(k) * (std::size_t{1} << k) * factorial(r - 2 * k));
  }
  const std::size_t rf = factorial(r);
  // S_1 only has the trivial representation, which is transitive
  const std::size_t transitive = r == 1 ? 1 : 3 * factorial(r - 1);
  return {(1 + involutions + rf) / 2, 3 * rf - 2, transitive};
}

TypeICensus type_I_census(const ShiftDecomposition& decomposition) {
  const FiniteGroup& g = decomposition.group();
  require_degree(g);
  TypeICensus census;
  for (const auto& c : decomposition.cycles()) {
    if (c->type() != CycleType::I) {
      continue;
    }
    ++census.cycle_count;
    census.representation_count += c->length();
    const auto gens = c->elements();
    if (orbit_partition(g, gens).size() == 1) {
      census.transitive_representation_count += c->length();
    }
  }
  return census;
}

std::size_t count_subgroups(int n, int r, const TowerOptions& options) {
  if (n < 3 || r < 1) {
    throw UsageError("count_subgroups needs n >= 3 and r >= 1");
  }
  const auto tower = compute_tower(symmetric_ptr(r), n, options);
  return analyze_transitivity(tower).level(n).subgroup_count;
}

std::size_t count_braid_subgroups(int n, int r, const TowerOptions& options) {
  if (n < 3 || r < 1) {
    throw UsageError("count_braid_subgroups needs n >= 3 and r >= 1");
  }
  const auto tower = compute_tower(symmetric_ptr(r), n, options);
  const FiniteGroup& g = tower.group();
  std::size_t transitive = 0;
  for (const auto& cls : tower.level(n).classes) {
    std::vector<Element> gens = cls.cycle->elements();
    gens.insert(gens.end(), cls.b.begin(), cls.b.end());
    for (Element c : cls.braid) {
      gens.push_back(c);
      if (orbit_partition(g, gens).size() == 1) {
        transitive += cls.cycle->length();
      }
      gens.pop_back();
    }
  }
  return exact_subgroup_count(transitive, r);
}

int abelian_cycle_length(const FiniteGroup& group, Vertex v) {
  for (Element x : group.elements()) {
    for (Element y : group.elements()) {
      if (!group.commute(x, y)) {
        throw UsageError(group.name() + " is not abelian");
      }
    }
  }
  const Element zero = group.identity();
  const Element a = v.a0;
  const Element b = v.a1;
  if (a == zero && b == zero) {
    return 1;
  }
  if (a == group.inv(b) && group.pow(a, 3) == zero) {
    return 2;
  }
  if (group.pow(a, 2) == zero && group.pow(b, 2) == zero) {
    return 3;
  }
  return 6;
}

Representation pi_representation(int n, int r) {
  if (n < 3 || r < n) {
    throw UsageError("pi_representation needs 3 <= n <= r");
  }
  auto group = symmetric_ptr(r);
  const FiniteGroup& g = *group;
  const Element a0 = *g.find(Permutation::from_cycles(r, {{1, 3, 2}}));
  const Element a1 = *g.find(Permutation::from_cycles(r, {{1, 2, 3}}));
  auto cycle = std::make_shared<const Cycle>(cycle_through(g, {a0, a1}));
  Representation rep{group, cycle, cycle->phase_of({a0, a1}), {}};
  for (int i = 3; i < n; ++i) {
    rep.b.push_back(*g.find(Permutation::from_cycles(r, {{1, 2}, {i, i + 1}})));
  }
  ensure(relations::all_hold(rep), "pi restricted to K_n violates a relation");
  return rep;
}

bool nontrivial_implies_transitive_check(int n, const TowerOptions& options) {
  if (n < 5) {
    throw UsageError("the transitivity check needs n >= 5");
  }
  const auto tower = compute_tower(symmetric_ptr(n), n, options);
  const auto report = analyze_transitivity(tower);
  const auto& level = tower.level(n);
  const auto& lt = report.level(n);
  for (std::size_t k = 0; k < level.classes.size(); ++k) {
    if (!level.classes[k].is_trivial(tower.group()) && !lt.class_transitive[k]) {
      return false;
    }
  }
  return true;
}

}  // namespace braidrep
