#include "braidrep/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <map>

#include "braidrep/errors.hpp"

namespace braidrep {

namespace {

int lab(Element e) { return static_cast<int>(e.index()) + 1; }

std::pair<int, int> lab(Vertex v) { return {lab(v.a0), lab(v.a1)}; }

std::vector<int> labs(const std::vector<Element>& xs) {
  std::vector<int> out;
  out.reserve(xs.size());
  for (Element e : xs) {
    out.push_back(lab(e));
  }
  return out;
}

void write_list(std::ostream& os, const std::vector<int>& xs) {
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << (i ? ", " : "") << xs[i];
  }
  os << ']';
}

std::string join(const std::vector<int>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) {
      out += sep;
    }
    out += std::to_string(xs[i]);
  }
  return out;
}

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  }
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "paper") return Format::Listing;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "dot") return Format::Dot;
  throw UsageError("unknown format '" + std::string(name) + "' (paper, json, csv, dot)");
}

std::string format_name(Format format) {
  switch (format) {
    case Format::Listing: return "paper";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Dot: return "dot";
  }
  throw InternalError("bad format value");
}

std::string canonical_group_spec(const std::string& spec) {
  const std::string name = parse_group(spec).name();
  if (name.rfind("table:", 0) == 0) {
    return name;
  }
  // builtin names are their own canonical specs; keep it that way
  ensure(parse_group(name).name() == name, "group name " + name + " does not re-parse");
  return name;
}

RunConfig RunConfig::canonical() const {
  RunConfig c = *this;
  c.group_spec = canonical_group_spec(group_spec);
  return c;
}

TowerOptions RunConfig::tower_options() const {
  TowerOptions o;
  o.threads = threads;
  o.vertex_cap = vertex_cap;
  return o;
}

ShiftRecord make_shift_record(const ShiftDecomposition& d, bool type2_only) {
  ShiftRecord r;
  r.group = d.group().name();
  r.order = d.group().order();
  for (auto [p, count] : d.period_census()) {
    r.period_census.emplace_back(p, count);
  }
  r.type_I_cycles = d.cycle_count(CycleType::I);
  r.type_I_representations = d.representation_count(CycleType::I);
  r.type_II_cycles = d.cycle_count(CycleType::II);
  r.type_II_representations = d.representation_count(CycleType::II);
  for (const auto& c : d.cycles()) {
    if (type2_only && c->type() != CycleType::II) {
      continue;
    }
    r.cycles.push_back({lab(c->representative()), c->length(),
                        c->type() == CycleType::I ? "I" : "II", labs(c->word())});
  }
  return r;
}

TowerRecord make_tower_record(const TowerResult& tower, const TransitivityReport* transitivity) {
  TowerRecord r;
  r.group = tower.group().name();
  r.order = tower.group().order();
  r.n_max = tower.n_max();
  for (const auto& level : tower.levels()) {
    LevelRecord lr;
    lr.n = level.n;
    lr.class_count = level.class_count();
    lr.representation_count = level.representation_count();
    lr.braid_class_count = level.braid_class_count();
    lr.braid_representation_count = level.braid_representation_count();
    const LevelTransitivity* lt = transitivity ? &transitivity->level(level.n) : nullptr;
    if (lt) {
      lr.transitive_representations = lt->transitive_representations;
      lr.subgroup_count = lt->subgroup_count;
    }
    for (std::size_t k = 0; k < level.classes.size(); ++k) {
      const auto& cls = level.classes[k];
      ClassRecord cr{lab(cls.cycle->representative()), cls.cycle->length(), labs(cls.b),
                     labs(cls.braid), std::nullopt};
      if (lt) {
        cr.transitive = static_cast<bool>(lt->class_transitive[k]);
      }
      lr.classes.push_back(std::move(cr));
    }
    r.levels.push_back(std::move(lr));
  }
  return r;
}

void to_json(nlohmann::json& j, const CycleRecord& r) {
  j = {{"vertex", r.vertex}, {"length", r.length}, {"type", r.type}, {"word", r.word}};
}

void from_json(const nlohmann::json& j, CycleRecord& r) {
  j.at("vertex").get_to(r.vertex);
  j.at("length").get_to(r.length);
  j.at("type").get_to(r.type);
  j.at("word").get_to(r.word);
}

void to_json(nlohmann::json& j, const ShiftRecord& r) {
  j = {{"group", r.group},
       {"order", r.order},
       {"period_census", r.period_census},
       {"type_I", {{"cycles", r.type_I_cycles}, {"representations", r.type_I_representations}}},
       {"type_II",
        {{"cycles", r.type_II_cycles}, {"representations", r.type_II_representations}}},
       {"cycles", r.cycles}};
}

void from_json(const nlohmann::json& j, ShiftRecord& r) {
  j.at("group").get_to(r.group);
  j.at("order").get_to(r.order);
  j.at("period_census").get_to(r.period_census);
  j.at("type_I").at("cycles").get_to(r.type_I_cycles);
  j.at("type_I").at("representations").get_to(r.type_I_representations);
  j.at("type_II").at("cycles").get_to(r.type_II_cycles);
  j.at("type_II").at("representations").get_to(r.type_II_representations);
  j.at("cycles").get_to(r.cycles);
}

void to_json(nlohmann::json& j, const ClassRecord& r) {
  j = {{"vertex", r.vertex}, {"length", r.length}, {"b", r.b}, {"braid", r.braid}};
  put_optional(j, "transitive", r.transitive);
}

void from_json(const nlohmann::json& j, ClassRecord& r) {
  j.at("vertex").get_to(r.vertex);
  j.at("length").get_to(r.length);
  j.at("b").get_to(r.b);
  j.at("braid").get_to(r.braid);
  get_optional(j, "transitive", r.transitive);
}

void to_json(nlohmann::json& j, const LevelRecord& r) {
  j = {{"n", r.n},
       {"class_count", r.class_count},
       {"representation_count", r.representation_count},
       {"braid_class_count", r.braid_class_count},
       {"braid_representation_count", r.braid_representation_count},
       {"classes", r.classes}};
  put_optional(j, "transitive_representations", r.transitive_representations);
  put_optional(j, "subgroup_count", r.subgroup_count);
}

void from_json(const nlohmann::json& j, LevelRecord& r) {
  j.at("n").get_to(r.n);
  j.at("class_count").get_to(r.class_count);
  j.at("representation_count").get_to(r.representation_count);
  j.at("braid_class_count").get_to(r.braid_class_count);
  j.at("braid_representation_count").get_to(r.braid_representation_count);
  j.at("classes").get_to(r.classes);
  get_optional(j, "transitive_representations", r.transitive_representations);
  get_optional(j, "subgroup_count", r.subgroup_count);
}

void to_json(nlohmann::json& j, const TowerRecord& r) {
  j = {{"group", r.group}, {"order", r.order}, {"n_max", r.n_max}, {"levels", r.levels}};
}

void from_json(const nlohmann::json& j, TowerRecord& r) {
  j.at("group").get_to(r.group);
  j.at("order").get_to(r.order);
  j.at("n_max").get_to(r.n_max);
  j.at("levels").get_to(r.levels);
}

void write_shift_listing(std::ostream& os, const ShiftDecomposition& d, bool type2_only) {
  for (const auto& c : d.cycles()) {
    if (type2_only && c->type() != CycleType::II) {
      continue;
    }
    const auto [i, j] = lab(c->representative());
    os << "B[" << i << ", " << j << "] = ";
    write_list(os, labs(c->word()));
    os << '\n' << c->length() << '\n';
  }
}

void write_shift_csv(std::ostream& os, const ShiftRecord& r) {
  os << "a0,a1,length,type,word\n";
  for (const auto& c : r.cycles) {
    os << c.vertex.first << ',' << c.vertex.second << ',' << c.length << ',' << c.type << ','
       << join(c.word, ' ') << '\n';
  }
}

void write_k4_listing(std::ostream& os, const TowerResult& tower) {
  const FiniteGroup& g = tower.group();
  std::map<std::uint32_t, std::vector<std::pair<int, int>>> by_b3;
  for (const auto& cls : tower.level(4).classes) {
    if (cls.b[0] != g.identity()) {
      by_b3[cls.b[0].index()].push_back(lab(cls.cycle->representative()));
    }
  }
  for (const auto& [b3, vertices] : by_b3) {
    os << '[' << b3 + 1;
    for (const auto& [i, j] : vertices) {
      os << ", [" << i << ", " << j << ']';
    }
    os << "]\n";
  }
}

void write_tower_listing(std::ostream& os, const TowerRecord& r, const TowerResult& tower) {
  os << "group " << r.group << " (order " << r.order << ")\n";
  const bool with_subgroups = !r.levels.empty() && r.levels.front().subgroup_count.has_value();
  os << std::left << std::setw(4) << "n" << std::setw(10) << "classes" << std::setw(17)
     << "representations" << std::setw(15) << "braid-classes" << std::setw(17)
     << "braid-reps";
  if (with_subgroups) {
    os << std::setw(12) << "transitive" << "subgroups";
  }
  os << '\n';
  for (const auto& l : r.levels) {
    os << std::setw(4) << l.n << std::setw(10) << l.class_count << std::setw(17)
       << l.representation_count << std::setw(15) << l.braid_class_count << std::setw(17)
       << l.braid_representation_count;
    if (with_subgroups) {
      os << std::setw(12) << l.transitive_representations.value_or(0)
         << l.subgroup_count.value_or(0);
    }
    os << '\n';
  }
  os << std::right;
  if (tower.n_max() >= 4) {
    os << "\nnontrivial b3 at n=4:\n";
    write_k4_listing(os, tower);
  }
}

void write_tower_csv(std::ostream& os, const TowerRecord& r) {
  os << "n,a0,a1,length,b,braid,transitive\n";
  for (const auto& l : r.levels) {
    for (const auto& c : l.classes) {
      os << l.n << ',' << c.vertex.first << ',' << c.vertex.second << ',' << c.length << ','
         << join(c.b, ' ') << ',' << join(c.braid, ' ') << ',';
      if (c.transitive) {
        os << (*c.transitive ? "yes" : "no");
      }
      os << '\n';
    }
  }
}

}  // namespace braidrep
