#include "braidrep/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

std::uint32_t next_group_id() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1);
}

void check_order(std::size_t order) {
  if (order == 0) {
    throw UsageError("group order must be positive");
  }
  if (order > kMaxGroupOrder) {
    throw ResourceError("group order " + std::to_string(order) + " exceeds the table cap of " +
                        std::to_string(kMaxGroupOrder));
  }
}

std::vector<std::uint16_t> build_table(std::size_t order,
                                       const std::function<std::uint32_t(std::size_t, std::size_t)>& product) {
  std::vector<std::uint16_t> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i * order + j] = static_cast<std::uint16_t>(product(i, j));
    }
  }
  return table;
}

}  // namespace

void FiniteGroup::finish_table() {
  id_ = next_group_id();
  identity_ = order_;
  for (std::size_t e = 0; e < order_ && identity_ == order_; ++e) {
    bool neutral = true;
    for (std::size_t x = 0; x < order_ && neutral; ++x) {
      neutral = table_[e * order_ + x] == x && table_[x * order_ + e] == x;
    }
    if (neutral) {
      identity_ = static_cast<std::uint32_t>(e);
    }
  }
  if (identity_ == order_) {
    throw UsageError("multiplication table has no identity");
  }
  inverse_.assign(order_, 0);
  for (std::size_t x = 0; x < order_; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < order_ && !found; ++y) {
      if (table_[x * order_ + y] == identity_ && table_[y * order_ + x] == identity_) {
        inverse_[x] = static_cast<std::uint16_t>(y);
        found = true;
      }
    }
    if (!found) {
      throw UsageError("element " + std::to_string(x) + " has no inverse");
    }
  }
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  if (degree < 1) {
    throw UsageError("symmetric group degree must be at least 1");
  }
  check_order(factorial(degree));
  FiniteGroup g;
  g.backend_ = Backend::Symmetric;
  g.name_ = "S" + std::to_string(degree);
  g.degree_ = degree;
  g.order_ = factorial(degree);

  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) {
    images[i] = i + 1;
  }
  do {
    g.perms_.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));

  g.table_ = build_table(g.order_, [&](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(lex_rank(g.perms_[i] * g.perms_[j]) - 1);
  });
  g.finish_table();
  return g;
}

FiniteGroup FiniteGroup::alternating(int degree) {
  FiniteGroup sym = symmetric(degree);
  std::vector<Element> even;
  for (Element e : sym.elements()) {
    if (sym.permutation(e).is_even()) {
      even.push_back(e);
    }
  }
  return subgroup(sym, even, "A" + std::to_string(degree));
}

FiniteGroup FiniteGroup::sl2(int q) {
  auto field = std::make_shared<const FiniteField>(q);
  const std::size_t qs = static_cast<std::size_t>(q);
  check_order(qs * (qs - 1) * (qs + 1));

  FiniteGroup g;
  g.backend_ = Backend::SL2;
  g.name_ = "SL2(" + std::to_string(q) + ")";
  g.field_ = field;

  std::vector<std::int32_t> code_to_index(qs * qs * qs * qs, -1);
  auto code = [qs](const Mat2& m) {
    return ((static_cast<std::size_t>(m.a()) * qs + m.b()) * qs + m.c()) * qs + m.d();
  };
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      for (int c = 0; c < q; ++c) {
        for (int d = 0; d < q; ++d) {
          Mat2 m{{a, b, c, d}};
          if (mat2_det(*field, m) == 1) {
            code_to_index[code(m)] = static_cast<std::int32_t>(g.mats_.size());
            g.mats_.push_back(m);
          }
        }
      }
    }
  }
  g.order_ = g.mats_.size();
  g.table_ = build_table(g.order_, [&](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(code_to_index[code(mat2_mul(*field, g.mats_[i], g.mats_[j]))]);
  });
  g.finish_table();
  return g;
}

FiniteGroup FiniteGroup::abelian(std::vector<int> moduli) {
  if (moduli.empty()) {
    throw UsageError("abelian group needs at least one factor");
  }
  std::size_t order = 1;
  for (int k : moduli) {
    if (k < 1) {
      throw UsageError("cyclic factor order must be positive");
    }
    order *= static_cast<std::size_t>(k);
    check_order(order);
  }
  FiniteGroup g;
  g.backend_ = Backend::Abelian;
  g.order_ = order;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    g.name_ += (i ? "xZ" : "Z") + std::to_string(moduli[i]);
  }
  g.residues_.reserve(order);
  std::vector<int> tuple(moduli.size(), 0);
  for (std::size_t n = 0; n < order; ++n) {
    g.residues_.push_back(tuple);
    for (std::size_t pos = moduli.size(); pos-- > 0;) {
      if (++tuple[pos] < moduli[pos]) {
        break;
      }
      tuple[pos] = 0;
    }
  }
  g.moduli_ = std::move(moduli);
  auto index_of = [&g](const std::vector<int>& t) {
    std::size_t idx = 0;
    for (std::size_t pos = 0; pos < t.size(); ++pos) {
      idx = idx * static_cast<std::size_t>(g.moduli_[pos]) + static_cast<std::size_t>(t[pos]);
    }
    return static_cast<std::uint32_t>(idx);
  };
  g.table_ = build_table(order, [&](std::size_t i, std::size_t j) {
    std::vector<int> sum(g.moduli_.size());
    for (std::size_t pos = 0; pos < sum.size(); ++pos) {
      sum[pos] = (g.residues_[i][pos] + g.residues_[j][pos]) % g.moduli_[pos];
    }
    return index_of(sum);
  });
  g.finish_table();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& rows,
                                    std::string name) {
  const std::size_t m = rows.size();
  check_order(m);
  FiniteGroup g;
  g.backend_ = Backend::CayleyTable;
  g.name_ = std::move(name);
  g.order_ = m;
  g.table_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != m) {
      throw UsageError("Cayley table row " + std::to_string(i) + " has wrong length");
    }
    std::vector<bool> seen(m, false);
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = rows[i][j];
      if (v >= m) {
        throw UsageError("Cayley table entry out of range");
      }
      if (seen[v]) {
        throw UsageError("Cayley table row " + std::to_string(i) + " repeats an entry");
      }
      seen[v] = true;
      g.table_[i * m + j] = static_cast<std::uint16_t>(v);
    }
  }
  g.finish_table();

  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    const auto xy = g.table_[x * m + y];
    const auto yz = g.table_[y * m + z];
    return g.table_[xy * m + z] == g.table_[x * m + yz];
  };
  if (m <= 200) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t z = 0; z < m; ++z) {
          if (!assoc(x, y, z)) {
            throw UsageError("Cayley table is not associative");
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (int trial = 0; trial < 100000; ++trial) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) {
        throw UsageError("Cayley table is not associative");
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::from_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open Cayley table file: " + path);
  }
  std::size_t m = 0;
  if (!(in >> m) || m == 0) {
    throw UsageError("Cayley table file must start with a positive order");
  }
  check_order(m);
  std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(m));
  for (auto& row : rows) {
    for (auto& v : row) {
      long long x = 0;
      if (!(in >> x) || x < 0) {
        throw UsageError("Cayley table file is truncated or has a negative entry");
      }
      v = static_cast<std::uint32_t>(x);
    }
  }
  return from_table(rows, "table:" + path);
}

FiniteGroup FiniteGroup::subgroup(const FiniteGroup& parent, std::span<const Element> elements,
                                  std::string name) {
  std::vector<Element> sorted(elements.begin(), elements.end());
  for (Element e : sorted) {
    parent.check(e);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::int32_t> position(parent.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    position[sorted[i].index()] = static_cast<std::int32_t>(i);
  }
  FiniteGroup g;
  g.backend_ = Backend::CayleyTable;
  g.name_ = std::move(name);
  g.order_ = sorted.size();
  g.degree_ = parent.degree_;
  g.field_ = parent.field_;
  g.table_ = build_table(g.order_, [&](std::size_t i, std::size_t j) {
    const auto pos = position[parent.mul(sorted[i], sorted[j]).index()];
    if (pos < 0) {
      throw UsageError("element set is not closed under multiplication");
    }
    return static_cast<std::uint32_t>(pos);
  });
  for (Element e : sorted) {
    if (!parent.perms_.empty()) {
      g.perms_.push_back(parent.perms_[e.index()]);
    }
    if (!parent.mats_.empty()) {
      g.mats_.push_back(parent.mats_[e.index()]);
    }
  }
  g.finish_table();
  return g;
}

void FiniteGroup::check(Element g) const {
  if (g.group_id() != id_) {
    throw UsageError("element belongs to a different group than " + name_);
  }
  if (g.index() >= order_) {
    throw UsageError("element index out of range");
  }
}

Element FiniteGroup::element(std::size_t index) const {
  if (index >= order_) {
    throw UsageError("element index " + std::to_string(index) + " out of range for " + name_);
  }
  return Element(id_, static_cast<std::uint32_t>(index));
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out.push_back(Element(id_, static_cast<std::uint32_t>(i)));
  }
  return out;
}

Element FiniteGroup::mul(Element g, Element h) const {
  check(g);
  check(h);
  return Element(id_, table_[g.index() * order_ + h.index()]);
}

Element FiniteGroup::inv(Element g) const {
  check(g);
  return Element(id_, inverse_[g.index()]);
}

Element FiniteGroup::pow(Element g, long long exponent) const {
  Element base = exponent < 0 ? inv(g) : g;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Element result = identity();
  while (e) {
    if (e & 1u) {
      result = mul(result, base);
    }
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Element FiniteGroup::conjugate(Element g, Element by) const {
  return mul(mul(by, g), inv(by));
}

Element FiniteGroup::commutator(Element g, Element h) const {
  return mul(mul(inv(g), inv(h)), mul(g, h));
}

std::string FiniteGroup::label(Element g) const {
  check(g);
  return std::to_string(g.index() + 1);
}

std::string FiniteGroup::describe(Element g) const {
  check(g);
  if (!perms_.empty()) {
    return perms_[g.index()].to_cycle_string();
  }
  if (!mats_.empty()) {
    return mat2_to_string(mats_[g.index()]);
  }
  if (!residues_.empty()) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < residues_[g.index()].size(); ++i) {
      out << (i ? "," : "") << residues_[g.index()][i];
    }
    out << ')';
    return out.str();
  }
  return "g" + std::to_string(g.index());
}

const Permutation& FiniteGroup::permutation(Element g) const {
  check(g);
  if (perms_.empty()) {
    throw UsageError(name_ + " is not a permutation group");
  }
  return perms_[g.index()];
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  if (perms_.empty()) {
    throw UsageError(name_ + " is not a permutation group");
  }
  const auto it = std::lower_bound(perms_.begin(), perms_.end(), p);
  if (it == perms_.end() || *it != p) {
    return std::nullopt;
  }
  return Element(id_, static_cast<std::uint32_t>(it - perms_.begin()));
}

const std::vector<int>& FiniteGroup::residues(Element g) const {
  check(g);
  if (residues_.empty()) {
    throw UsageError(name_ + " is not an abelian product");
  }
  return residues_[g.index()];
}

const Mat2& FiniteGroup::matrix(Element g) const {
  check(g);
  if (mats_.empty()) {
    throw UsageError(name_ + " is not a matrix group");
  }
  return mats_[g.index()];
}

FiniteGroup parse_group(const std::string& spec) {
  static const std::regex symmetric_re(R"(S(\d+))");
  static const std::regex alternating_re(R"(A(\d+))");
  static const std::regex sl2_re(R"(SL2\((\d+)\))");
  static const std::regex abelian_re(R"(Z\d+(xZ\d+)*)");
  const auto first = spec.find_first_not_of(" \t");
  const auto last = spec.find_last_not_of(" \t");
  const std::string trimmed = first == std::string::npos ? "" : spec.substr(first, last - first + 1);
  std::string lower = trimmed.substr(0, 6);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "table:") {
    return FiniteGroup::from_table_file(trimmed.substr(6));
  }
  // builtin specs are case-insensitive; 'x' separates abelian factors
  std::string name;
  for (unsigned char ch : trimmed) {
    if (!std::isspace(ch)) {
      name += ch == 'x' || ch == 'X' ? 'x' : static_cast<char>(std::toupper(ch));
    }
  }
  std::smatch m;
  if (std::regex_match(name, m, sl2_re)) {
    return FiniteGroup::sl2(std::stoi(m[1]));
  }
  if (std::regex_match(name, m, symmetric_re)) {
    return FiniteGroup::symmetric(std::stoi(m[1]));
  }
  if (std::regex_match(name, m, alternating_re)) {
    return FiniteGroup::alternating(std::stoi(m[1]));
  }
  if (std::regex_match(name, abelian_re)) {
    std::vector<int> moduli;
    std::stringstream in(name);
    std::string factor;
    while (std::getline(in, factor, 'x')) {
      moduli.push_back(std::stoi(factor.substr(1)));
    }
    return FiniteGroup::abelian(std::move(moduli));
  }
  throw UsageError("unrecognized group spec: '" + spec + "'");
}

std::size_t element_order(const FiniteGroup& group, Element g) {
  std::size_t k = 1;
  for (Element x = g; x != group.identity(); x = group.mul(x, g)) {
    ++k;
  }
  return k;
}

std::size_t involution_count(const FiniteGroup& group) {
  std::size_t count = 0;
  for (Element g : group.elements()) {
    if (g != group.identity() && group.mul(g, g) == group.identity()) {
      ++count;
    }
  }
  return count;
}

std::vector<Element> generated_subgroup(const FiniteGroup& group,
                                        std::span<const Element> generators) {
  std::vector<bool> member(group.order(), false);
  std::vector<Element> found{group.identity()};
  member[group.identity().index()] = true;
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (Element s : generators) {
      const Element x = group.mul(found[next], s);
      if (!member[x.index()]) {
        member[x.index()] = true;
        found.push_back(x);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

DerivedSeries derived_series(const FiniteGroup& group, std::size_t cap) {
  if (group.order() > cap) {
    throw ResourceError("derived series: order " + std::to_string(group.order()) +
                        " exceeds cap " + std::to_string(cap));
  }
  DerivedSeries series;
  series.terms.push_back(group.elements());
  while (true) {
    const auto& current = series.terms.back();
    std::vector<bool> seen(group.order(), false);
    std::vector<Element> commutators;
    for (Element g : current) {
      for (Element h : current) {
        const Element c = group.commutator(g, h);
        if (!seen[c.index()]) {
          seen[c.index()] = true;
          commutators.push_back(c);
        }
      }
    }
    auto next = generated_subgroup(group, commutators);
    if (next.size() == current.size()) {
      break;
    }
    series.terms.push_back(std::move(next));
  }
  series.solvable = series.perfect_core().size() == 1;
  return series;
}

}  // namespace braidrep
