#include "braidrep/extension.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k is
// handled by exactly one worker; callers write results into slot k.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) {
      body(k);
    }
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t k = t; k < count; k += threads) {
        body(k);
      }
    });
  }
  for (auto& w : workers) {
    w.join();
  }
}

bool all_nontrivial(const FiniteGroup& g, const std::vector<Element>& b) {
  return std::none_of(b.begin(), b.end(), [&](Element x) { return x == g.identity(); });
}

bool are_conjugate(const FiniteGroup& g, Element x, Element y) {
  for (Element h : g.elements()) {
    if (g.conjugate(x, h) == y) {
      return true;
    }
  }
  return false;
}

void check_k4_set(const FiniteGroup& g, const Cycle& cycle, const std::vector<Element>& found) {
  const auto p = static_cast<long long>(cycle.length());
  ensure(std::find(found.begin(), found.end(), g.identity()) != found.end(),
         "b_3 = 1 must always extend a cycle to K_4");
  if (cycle.type() == CycleType::I) {
    ensure(found.size() == 1, "a type I cycle admitted a nontrivial b_3");
  }
  if (std::gcd(static_cast<std::size_t>(p), g.order()) == 1) {
    ensure(found.size() == 1, "nontrivial b_3 although gcd(p, |Sigma|) = 1");
  }
  for (Element b3 : found) {
    ensure(g.pow(b3, p) == g.identity(), "b_3^p != 1");
  }
}

}  // namespace

std::vector<Element> extend_to_k4(const FiniteGroup& group, const Cycle& cycle) {
  std::vector<Element> found;
  for (Element x : group.elements()) {
    if (relations::k4(group, cycle, x)) {
      found.push_back(x);
    }
  }
  check_k4_set(group, cycle, found);
  return found;
}

std::vector<Element> extend_step(const Representation& rep) {
  const FiniteGroup& g = *rep.group;
  const int n = rep.n();
  if (n < 4) {
    throw UsageError("extend_step needs a K_n representation with n >= 4");
  }
  if (rep.is_trivial()) {
    return {};
  }
  if (rep.cycle->type() != CycleType::II || !all_nontrivial(g, rep.b)) {
    throw UsageError("extend_step needs a type II cycle with nontrivial b's");
  }
  const Element last = rep.b.back();
  const auto p = rep.period();
  std::vector<Element> found;
  for (Element x : g.elements()) {
    if (!relations::intertwines(g, *rep.cycle, x)) {
      continue;
    }
    bool ok = true;
    for (std::size_t j = 0; j + 1 < rep.b.size() && ok; ++j) {
      ok = g.commute(x, rep.b[j]);
    }
    if (!ok || !relations::braid(g, x, last)) {
      continue;
    }
    // a braiding b_i that also commutes with b_{i-1} forces the trivial
    // representation
    ensure(!g.commute(x, last), "a solution b_i commutes with b_{i-1} on a nontrivial class");
    ensure(x != g.identity(), "b_i = 1 on a nontrivial class");
    ensure(are_conjugate(g, x, last), "b_i is not conjugate to b_{i-1}");
    ensure(element_order(g, x) % p == 0, "p does not divide the order of b_i");
    found.push_back(x);
  }
  return found;
}

std::vector<Element> extend_to_braid(const Representation& rep) {
  const FiniteGroup& g = *rep.group;
  if (rep.is_trivial()) {
    return g.elements();
  }
  const auto p = rep.period();
  std::vector<Element> found;
  for (Element c : g.elements()) {
    if (!relations::intertwines(g, *rep.cycle, c)) {
      continue;
    }
    bool ok = true;
    for (Element x : rep.b) {
      if (!g.commute(c, x)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      continue;
    }
    ensure(c != g.identity(), "c = 1 extends a nontrivial representation");
    const Element cp = g.pow(c, static_cast<long long>(p));
    for (std::size_t m = 0; m < p; ++m) {
      ensure(g.commute(cp, rep.a(static_cast<long long>(m))), "[c^p, a_m] != 1");
    }
    found.push_back(c);
  }
  if (g.order() % p != 0) {
    ensure(found.empty(), "braid extension found although p does not divide |Sigma|");
  }
  return found;
}

bool TowerClass::is_trivial(const FiniteGroup& group) const {
  return cycle->is_trivial() && std::all_of(b.begin(), b.end(), [&](Element x) {
           return x == group.identity();
         });
}

std::size_t TowerLevel::representation_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.cycle->length();
  }
  return total;
}

std::size_t TowerLevel::braid_class_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.braid.size();
  }
  return total;
}

std::size_t TowerLevel::braid_representation_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) {
    total += c.cycle->length() * c.braid.size();
  }
  return total;
}

TowerResult::TowerResult(std::shared_ptr<const ShiftDecomposition> decomposition,
                         std::vector<TowerLevel> levels)
    : decomposition_(std::move(decomposition)), levels_(std::move(levels)) {}

const TowerLevel& TowerResult::level(int n) const {
  if (n < 3 || n > n_max()) {
    throw UsageError("tower level " + std::to_string(n) + " not computed (have 3.." +
                     std::to_string(n_max()) + ")");
  }
  return levels_[static_cast<std::size_t>(n - 3)];
}

Representation TowerResult::representation(int n, std::size_t class_index,
                                           std::size_t phase) const {
  const auto& cls = level(n).classes.at(class_index);
  return Representation{group_ptr(), cls.cycle, phase % cls.cycle->length(), cls.b};
}

namespace {

void sort_level(TowerLevel& level) {
  std::sort(level.classes.begin(), level.classes.end(),
            [](const TowerClass& x, const TowerClass& y) {
              const auto rx = x.cycle->representative();
              const auto ry = y.cycle->representative();
              if (rx != ry) {
                return rx < ry;
              }
              return x.b < y.b;
            });
}

std::vector<Element> filter_commuting(const FiniteGroup& g, const std::vector<Element>& set,
                                      Element with) {
  std::vector<Element> out;
  for (Element c : set) {
    if (g.commute(c, with)) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

TowerResult compute_tower(std::shared_ptr<const FiniteGroup> group, int n_max,
                          const TowerOptions& options) {
  if (n_max < 3) {
    throw UsageError("tower needs n_max >= 3");
  }
  auto decomposition = decompose(group, options.vertex_cap);
  const FiniteGroup& g = *group;
  const auto& cycles = decomposition->cycles();
  std::vector<TowerLevel> levels;

  // K_3 and B_3
  TowerLevel level3;
  level3.n = 3;
  level3.classes.resize(cycles.size());
  parallel_for(cycles.size(), options.threads, [&](std::size_t k) {
    auto& cls = level3.classes[k];
    cls.cycle = cycles[k];
    cls.braid = extend_to_braid(Representation{group, cls.cycle, 0, {}});
  });
  levels.push_back(std::move(level3));

  if (n_max >= 4) {
    const auto& prev = levels.back().classes;
    std::vector<std::vector<Element>> b3(prev.size());
    parallel_for(prev.size(), options.threads,
                 [&](std::size_t k) { b3[k] = extend_to_k4(g, *prev[k].cycle); });
    TowerLevel level4;
    level4.n = 4;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      for (Element x : b3[k]) {
        TowerClass cls;
        cls.cycle = prev[k].cycle;
        cls.b = {x};
        cls.braid = filter_commuting(g, prev[k].braid, x);
        cls.parent = k;
        level4.classes.push_back(std::move(cls));
      }
    }
    levels.push_back(std::move(level4));
  }

  // Levels >= 5: c braiding with b_{i-1} becomes b_i; c commuting with
  // b_{i-1} stays a braid group extension.
  for (int n = 5; n <= n_max; ++n) {
    const auto& grand = levels[static_cast<std::size_t>(n - 5)].classes;
    const auto& prev = levels[static_cast<std::size_t>(n - 4)].classes;
    TowerLevel next;
    next.n = n;
    for (std::size_t k = 0; k < prev.size(); ++k) {
      const TowerClass& cls = prev[k];
      if (cls.is_trivial(g)) {
        TowerClass up = cls;
        up.b.push_back(g.identity());
        up.parent = k;
        next.classes.push_back(std::move(up));
        continue;
      }
      const Element last = cls.b.back();
      const bool eligible = cls.cycle->type() == CycleType::II && all_nontrivial(g, cls.b);
      std::vector<Element> candidates;
      for (Element c : grand[cls.parent].braid) {
        if (!relations::braid(g, c, last)) {
          continue;
        }
        ensure(!g.commute(c, last), "rigidity violated: b_i commutes with b_{i-1}");
        candidates.push_back(c);
      }
      ensure(eligible || candidates.empty(),
             "a class with a type I cycle or a trivial b extended nontrivially");
      if (options.cross_check && eligible) {
        const auto scanned = extend_step(Representation{group, cls.cycle, 0, cls.b});
        ensure(scanned == candidates, "staged b_i differ from the direct scan");
      }
      for (Element x : candidates) {
        TowerClass up;
        up.cycle = cls.cycle;
        up.b = cls.b;
        up.b.push_back(x);
        up.braid = filter_commuting(g, cls.braid, x);
        up.parent = k;
        next.classes.push_back(std::move(up));
      }
    }
    levels.push_back(std::move(next));
  }

  // children are generated in parent order with new b's in index order,
  // so every level comes out sorted by (representative, b)
  for (auto& level : levels) {
    TowerLevel sorted = level;
    sort_level(sorted);
    for (std::size_t k = 0; k < level.classes.size(); ++k) {
      ensure(sorted.classes[k].cycle == level.classes[k].cycle &&
                 sorted.classes[k].b == level.classes[k].b,
             "tower level is not in canonical class order");
    }
  }

  if (options.cross_check) {
    for (const auto& level : levels) {
      for (const auto& cls : level.classes) {
        const auto k4_set = level.n == 3 ? extend_to_k4(g, *cls.cycle) : std::vector<Element>{};
        for (std::size_t phase = 0; phase < cls.cycle->length(); ++phase) {
          const Representation rep{group, cls.cycle, phase, cls.b};
          ensure(relations::all_hold(rep), "tower class violates a K_n relation");
          ensure(extend_to_braid(rep) == cls.braid, "staged braid extensions differ from scan");
          if (level.n == 3) {
            auto vertices = cls.cycle->vertices();
            std::rotate(vertices.begin(),
                        vertices.begin() + static_cast<std::ptrdiff_t>(phase), vertices.end());
            const Cycle rotated(std::move(vertices), cls.cycle->type());
            ensure(extend_to_k4(g, rotated) == k4_set, "b_3 set depends on the phase");
          }
        }
      }
    }
  }
  return TowerResult(std::move(decomposition), std::move(levels));
}

std::size_t hom_bn_when_kn_trivial(const TowerResult& tower, int n) {
  const auto& level = tower.level(n);
  const FiniteGroup& g = tower.group();
  if (level.class_count() != 1 || !level.classes.front().is_trivial(g)) {
    throw UsageError("Hom(K_" + std::to_string(n) + ", " + g.name() + ") is not trivial");
  }
  ensure(level.braid_representation_count() == g.order(),
         "trivial K_n level must extend by every c");
  return g.order();
}

namespace {

ClassKey key_of(const TowerClass& cls) {
  ClassKey key;
  key.a0 = cls.cycle->representative().a0.index();
  key.a1 = cls.cycle->representative().a1.index();
  for (Element x : cls.b) {
    key.b.push_back(x.index());
  }
  return key;
}

}  // namespace

std::vector<ClassKey> k_census(const TowerResult& tower, int n) {
  std::vector<ClassKey> out;
  for (const auto& cls : tower.level(n).classes) {
    out.push_back(key_of(cls));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassKey> b_census(const TowerResult& tower, int n) {
  std::vector<ClassKey> out;
  const FiniteGroup& g = tower.group();
  if (n == 2) {
    for (Element c : g.elements()) {
      ClassKey key;
      key.a0 = key.a1 = g.identity().index();
      key.c = c.index();
      out.push_back(key);
    }
    return out;
  }
  for (const auto& cls : tower.level(n).classes) {
    for (Element c : cls.braid) {
      ClassKey key = key_of(cls);
      key.c = c.index();
      out.push_back(std::move(key));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace braidrep
