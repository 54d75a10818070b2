#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidrep/analysis.hpp"
#include "braidrep/extension.hpp"
#include "braidrep/oracle.hpp"
#include "json.hpp"

namespace braidrep {

enum class Format { Listing, Json, Csv, Dot };

/// "paper" (the plain-text listing), "json", "csv" or "dot"; anything else
/// is a UsageError.
Format parse_format(std::string_view name);
std::string format_name(Format format);

/// Canonical spelling of a group spec, e.g. "sl2(3)" -> "SL2(3)".
std::string canonical_group_spec(const std::string& spec);

struct RunConfig {
  std::string group_spec;
  int n_max = 4;
  Format format = Format::Listing;
  std::size_t budget = oracle::kDefaultBudget;
  std::size_t vertex_cap = kDefaultVertexCap;
  int threads = 1;
  bool type2_only = false;
  bool count_only = false;
  bool transitivity = true;
  bool braid = true;
  bool oracle = false;

  /// Copy with the group spec rewritten to canonical form.
  RunConfig canonical() const;
  TowerOptions tower_options() const;
};

// Plain records behind the JSON and CSV output. Element values are 1-based
// labels.

struct CycleRecord {
  std::pair<int, int> vertex;
  std::size_t length = 0;
  std::string type;  // "I" or "II"
  std::vector<int> word;

  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct ShiftRecord {
  std::string group;
  std::size_t order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> period_census;  // (p, n_p)
  std::size_t type_I_cycles = 0;
  std::size_t type_I_representations = 0;
  std::size_t type_II_cycles = 0;
  std::size_t type_II_representations = 0;
  std::vector<CycleRecord> cycles;

  friend bool operator==(const ShiftRecord&, const ShiftRecord&) = default;
};

struct ClassRecord {
  std::pair<int, int> vertex;
  std::size_t length = 0;
  std::vector<int> b;
  std::vector<int> braid;
  std::optional<bool> transitive;

  friend bool operator==(const ClassRecord&, const ClassRecord&) = default;
};

struct LevelRecord {
  int n = 3;
  std::size_t class_count = 0;
  std::size_t representation_count = 0;
  std::size_t braid_class_count = 0;
  std::size_t braid_representation_count = 0;
  std::optional<std::size_t> transitive_representations;
  std::optional<std::size_t> subgroup_count;
  std::vector<ClassRecord> classes;

  friend bool operator==(const LevelRecord&, const LevelRecord&) = default;
};

struct TowerRecord {
  std::string group;
  std::size_t order = 0;
  int n_max = 3;
  std::vector<LevelRecord> levels;

  friend bool operator==(const TowerRecord&, const TowerRecord&) = default;
};

ShiftRecord make_shift_record(const ShiftDecomposition& decomposition, bool type2_only = false);
/// `transitivity` may be null; it is only available over S_r.
TowerRecord make_tower_record(const TowerResult& tower,
                              const TransitivityReport* transitivity = nullptr);

void to_json(nlohmann::json& j, const CycleRecord& r);
void from_json(const nlohmann::json& j, CycleRecord& r);
void to_json(nlohmann::json& j, const ShiftRecord& r);
void from_json(const nlohmann::json& j, ShiftRecord& r);
void to_json(nlohmann::json& j, const ClassRecord& r);
void from_json(const nlohmann::json& j, ClassRecord& r);
void to_json(nlohmann::json& j, const LevelRecord& r);
void from_json(const nlohmann::json& j, LevelRecord& r);
void to_json(nlohmann::json& j, const TowerRecord& r);
void from_json(const nlohmann::json& j, TowerRecord& r);

/// Per cycle: "B[i, j] = [a_2, ..., a_{p+1}]" then the length on its own line.
void write_shift_listing(std::ostream& os, const ShiftDecomposition& decomposition,
                       bool type2_only);
void write_shift_csv(std::ostream& os, const ShiftRecord& record);

/// One bracket list per nontrivial b3: "[b3, [i, j], [k, l], ...]" naming the
/// canonical vertices of the cycles that carry it.
void write_k4_listing(std::ostream& os, const TowerResult& tower);

/// Level table, then the b3 listing when level 4 was computed.
void write_tower_listing(std::ostream& os, const TowerRecord& record, const TowerResult& tower);
void write_tower_csv(std::ostream& os, const TowerRecord& record);

}  // namespace braidrep
