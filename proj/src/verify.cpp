#include "braidrep/verify.hpp"

#include <algorithm>
#include <numeric>

#include "braidrep/analysis.hpp"
#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void require(bool ok, const std::string& what) {
    if (!ok && failures_++ < 5) {
      result_.notes.push_back("violated: " + what);
    }
    if (!ok) {
      result_.passed = false;
    }
  }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }
  SuiteResult done() {
    if (failures_ > 5) {
      note(std::to_string(failures_ - 5) + " further violations");
    }
    return std::move(result_);
  }

 private:
  SuiteResult result_;
  std::size_t failures_ = 0;
};

std::string vertex_text(const FiniteGroup& g, Vertex v) {
  return "B[" + g.label(v.a0) + ", " + g.label(v.a1) + "]";
}

bool conjugate_in(const FiniteGroup& g, Element x, Element y) {
  for (Element h : g.elements()) {
    if (g.conjugate(x, h) == y) {
      return true;
    }
  }
  return false;
}

SuiteResult prop1(const TowerResult& tower) {
  Suite s("prop1");
  const FiniteGroup& g = tower.group();
  for (const auto& c : tower.decomposition().cycles()) {
    Element product = g.identity();
    for (Element e : c->elements()) {
      product = g.mul(product, e);
    }
    s.require(product == g.identity(), "a_0...a_{p-1} = 1 on " + vertex_text(g, c->representative()));
    if (c->length() == 2) {
      const Vertex v = c->representative();
      const bool shape = g.pow(v.a0, 3) == g.identity() &&
                         (v.a1 == g.mul(v.a0, v.a0) || v.a0 == g.mul(v.a1, v.a1));
      s.require(shape, "length-2 cycle of the form (a, a^2) with a^3 = 1 at " +
                           vertex_text(g, v));
    }
  }
  return s.done();
}

SuiteResult prop2(const TowerResult& tower) {
  Suite s("prop2");
  const FiniteGroup& g = tower.group();
  if (tower.n_max() < 4) {
    s.note("level 4 not computed");
    return s.done();
  }
  for (const auto& cls : tower.level(4).classes) {
    const auto p = cls.cycle->length();
    s.require(g.pow(cls.b[0], static_cast<long long>(p)) == g.identity(),
              "b3^p = 1 on " + vertex_text(g, cls.cycle->representative()));
    if (std::gcd(p, g.order()) == 1) {
      s.require(cls.b[0] == g.identity(),
                "gcd(p, |G|) = 1 forces b3 = 1 on " + vertex_text(g, cls.cycle->representative()));
    }
  }
  return s.done();
}

SuiteResult prop3(const TowerResult& tower) {
  Suite s("prop3");
  const FiniteGroup& g = tower.group();
  std::size_t repeated = 0;
  for (int n = 5; n <= tower.n_max(); ++n) {
    for (const auto& cls : tower.level(n).classes) {
      if (cls.is_trivial(g)) {
        continue;
      }
      const std::string where = vertex_text(g, cls.cycle->representative()) + " at n=" +
                                std::to_string(n);
      const auto p = static_cast<long long>(cls.cycle->length());
      const auto& b = cls.b;
      for (std::size_t i = 0; i < b.size(); ++i) {
        s.require(b[i] != g.identity(), "b_i nontrivial on " + where);
        s.require(conjugate_in(g, b[0], b[i]), "b_i conjugate to b3 on " + where);
        if (i >= 1) {
          const Element bp = g.pow(b[i], p);
          for (Element a : cls.cycle->elements()) {
            s.require(g.commute(bp, a), "[b_i^p, a_m] = 1 on " + where);
          }
        }
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          s.require(g.commute(b[i], b[j]) == (j - i >= 2),
                    "[b_i, b_j] = 1 iff |i-j| >= 2 on " + where);
          if (b[i] == b[j]) {
            const bool allowed = i == 0 && j == 2;
            s.require(allowed, "b_i distinct except b3 = b5 on " + where);
            if (allowed) {
              ++repeated;
              s.require(n < 7, "class with b3 = b5 survives to " + where);
            }
          }
        }
      }
    }
  }
  if (repeated) {
    s.note(std::to_string(repeated) + " classes with b3 = b5" +
           (tower.n_max() < 7 ? "; level 7 not computed" : ""));
  }
  return s.done();
}

SuiteResult prop4(const TowerResult& tower, const TowerOptions& options) {
  Suite s("prop4");
  const FiniteGroup& g = tower.group();
  if (tower.n_max() < 6) {
    s.note("needs n >= 6; nothing to compare");
    return s.done();
  }
  const std::string diff = compare_with_perfect_core(tower, options);
  s.require(diff.empty(), diff);
  const auto series = derived_series(g);
  if (series.solvable) {
    for (int n = 6; n <= tower.n_max(); ++n) {
      s.require(tower.level(n).representation_count() == 1,
                "solvable group gives only the trivial class at n=" + std::to_string(n));
    }
    s.note("solvable; levels 6.." + std::to_string(tower.n_max()) + " trivial");
  }
  if (g.degree()) {
    for (int n = 6; n <= tower.n_max(); ++n) {
      for (const auto& cls : tower.level(n).classes) {
        bool even = true;
        for (Element e : cls.cycle->elements()) {
          even = even && g.permutation(e).is_even();
        }
        for (Element e : cls.b) {
          even = even && g.permutation(e).is_even();
        }
        s.require(even, "all generators even on " + vertex_text(g, cls.cycle->representative()) +
                            " at n=" + std::to_string(n));
      }
    }
  }
  return s.done();
}

SuiteResult census(const TowerResult& tower) {
  Suite s("census");
  const FiniteGroup& g = tower.group();
  const auto& d = tower.decomposition();
  std::size_t total = 0;
  for (auto [p, count] : d.period_census()) {
    total += p * count;
  }
  s.require(total == g.order() * g.order(), "sum of p n_p = |G|^2");
  s.require(d.representation_count(CycleType::I) + d.representation_count(CycleType::II) ==
                g.order() * g.order(),
            "type I + type II representations = |G|^2");
  if (g.backend() == Backend::Symmetric) {
    s.require(type_I_census(d) == type_I_census(*g.degree()), "type I closed forms");
  }
  bool abelian = true;
  for (Element x : g.elements()) {
    for (Element y : g.elements()) {
      abelian = abelian && g.commute(x, y);
    }
  }
  if (abelian) {
    for (const auto& c : d.cycles()) {
      s.require(6 % c->length() == 0, "successor^6 = identity on an abelian group");
    }
  }
  for (const auto& level : tower.levels()) {
    if (level.n >= 5 && level.representation_count() == 1) {
      s.note("level-" + std::to_string(level.n) + " trivial");
    }
  }
  return s.done();
}

SuiteResult oracle_eq(const TowerResult& tower, std::size_t budget) {
  Suite s("oracle-eq");
  const FiniteGroup& g = tower.group();
  for (int n = 3; n <= tower.n_max(); ++n) {
    try {
      const auto brute = oracle::brute_hom_kn(g, n, budget);
      s.require(brute.count == tower.level(n).representation_count(),
                "Hom(K_" + std::to_string(n) + ") count " + std::to_string(brute.count) +
                    " vs engine " + std::to_string(tower.level(n).representation_count()));
      s.require(brute.classes == k_census(tower, n),
                "Hom(K_" + std::to_string(n) + ") class census");
    } catch (const ResourceError&) {
      s.note("K_" + std::to_string(n) + " skipped: over budget");
    }
  }
  for (int n = 2; n <= tower.n_max(); ++n) {
    try {
      const auto brute = oracle::brute_hom_bn(g, n, budget);
      s.require(brute.classes == b_census(tower, n),
                "Hom(B_" + std::to_string(n) + ") class census");
      if (n >= 3) {
        s.require(brute.count == tower.level(n).braid_representation_count(),
                  "Hom(B_" + std::to_string(n) + ") count " + std::to_string(brute.count) +
                      " vs engine " + std::to_string(tower.level(n).braid_representation_count()));
      } else {
        s.require(brute.count == g.order(), "Hom(B_2) count = |G|");
      }
    } catch (const ResourceError&) {
      s.note("B_" + std::to_string(n) + " skipped: over budget");
    }
  }
  return s.done();
}

}  // namespace

std::string compare_with_perfect_core(const TowerResult& tower, const TowerOptions& options) {
  const FiniteGroup& g = tower.group();
  const auto series = derived_series(g);
  const std::vector<Element>& core = series.perfect_core();
  if (core.size() == g.order()) {
    return "";
  }
  // subgroup elements keep the parent's order, so core index k is core[k]
  std::vector<Element> sorted = core;
  std::sort(sorted.begin(), sorted.end());
  auto sub = std::make_shared<const FiniteGroup>(
      FiniteGroup::subgroup(g, sorted, g.name() + "'"));
  const auto inner = compute_tower(sub, tower.n_max(), options);
  auto lift = [&](std::uint32_t k) { return sorted.at(k).index(); };
  for (int n = 6; n <= tower.n_max(); ++n) {
    auto mapped = k_census(inner, n);
    for (auto& key : mapped) {
      key.a0 = lift(key.a0);
      key.a1 = lift(key.a1);
      for (auto& b : key.b) {
        b = lift(b);
      }
    }
    std::sort(mapped.begin(), mapped.end());
    const auto outer = k_census(tower, n);
    if (mapped != outer) {
      return "Hom(K_" + std::to_string(n) + ") over " + g.name() + " has " +
             std::to_string(outer.size()) + " classes, over its perfect core " +
             std::to_string(mapped.size());
    }
  }
  return "";
}

std::vector<SuiteResult> run_verify(std::shared_ptr<const FiniteGroup> group, int n,
                                    const VerifyOptions& options) {
  if (n < 3) {
    throw UsageError("verify needs n >= 3");
  }
  TowerOptions to;
  to.threads = options.threads;
  to.vertex_cap = options.vertex_cap;
  to.cross_check = true;
  const auto tower = compute_tower(std::move(group), n, to);
  to.cross_check = false;
  return {prop1(tower),  prop2(tower),  prop3(tower),
          prop4(tower, to), census(tower), oracle_eq(tower, options.budget)};
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

void write_verify(std::ostream& os, const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
    for (const auto& note : r.notes) {
      os << "  " << note << '\n';
    }
  }
}

}  // namespace braidrep
