#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "braidrep/errors.hpp"
#include "braidrep/report.hpp"
#include "doctest.h"

using namespace braidrep;

namespace {

std::shared_ptr<const FiniteGroup> make(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(parse_group(spec));
}

std::vector<std::string> tokens(std::istream& in) {
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

std::vector<std::string> golden(const std::string& name) {
  std::ifstream in(std::string(BRAIDREP_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return tokens(in);
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream in(text);
  return tokens(in);
}

// first differing token, for a readable failure
std::string first_diff(const std::vector<std::string>& want, const std::vector<std::string>& got) {
  for (std::size_t i = 0; i < std::min(want.size(), got.size()); ++i) {
    if (want[i] != got[i]) {
      return "token " + std::to_string(i) + ": want '" + want[i] + "' got '" + got[i] + "'";
    }
  }
  return "lengths " + std::to_string(want.size()) + " vs " + std::to_string(got.size());
}

}  // namespace

TEST_CASE("golden listings") {
  SUBCASE("n=3, r=3") {
    std::ostringstream out;
    write_shift_listing(out, *decompose(make("S3")), true);
    const auto want = golden("n3_r3.txt");
    const auto got = tokens_of(out.str());
    CHECK_MESSAGE(want == got, first_diff(want, got));
  }
  SUBCASE("n=3, r=4") {
    std::ostringstream out;
    write_shift_listing(out, *decompose(make("S4")), true);
    const auto want = golden("n3_r4.txt");
    const auto got = tokens_of(out.str());
    CHECK_MESSAGE(want == got, first_diff(want, got));
  }
  SUBCASE("n=4, r=4") {
    std::ostringstream out;
    write_k4_listing(out, compute_tower(make("S4"), 4));
    const auto want = golden("n4_r4.txt");
    const auto got = tokens_of(out.str());
    CHECK_MESSAGE(want == got, first_diff(want, got));
  }
}

TEST_CASE("S2 listing shows the trivial and the length-3 cycle") {
  std::ostringstream out;
  write_shift_listing(out, *decompose(make("S2")), false);
  CHECK(out.str() == "B[1, 1] = [1]\n1\nB[1, 2] = [2, 1, 2]\n3\n");
}

TEST_CASE("json round trips") {
  SUBCASE("shift") {
    const auto record = make_shift_record(*decompose(make("SL2(3)")));
    const auto back = nlohmann::json::parse(nlohmann::json(record).dump()).get<ShiftRecord>();
    CHECK(back == record);
    CHECK(record.type_I_representations + record.type_II_representations == 576);
  }
  SUBCASE("tower with transitivity") {
    const auto tower = compute_tower(make("S4"), 5);
    const auto report = analyze_transitivity(tower);
    const auto record = make_tower_record(tower, &report);
    const auto back = nlohmann::json::parse(nlohmann::json(record).dump()).get<TowerRecord>();
    CHECK(back == record);
    CHECK(record.levels.at(0).subgroup_count == std::optional<std::size_t>{71});
    CHECK(record.levels.at(1).classes.at(0).transitive.has_value());
  }
  SUBCASE("tower without transitivity") {
    const auto tower = compute_tower(make("Z2xZ4"), 4);
    const auto record = make_tower_record(tower);
    const nlohmann::json j = record;
    CHECK_FALSE(j["levels"][0].contains("subgroup_count"));
    CHECK(j.get<TowerRecord>() == record);
  }
}

TEST_CASE("csv output") {
  std::ostringstream out;
  write_shift_csv(out, make_shift_record(*decompose(make("S3")), true));
  CHECK(out.str() ==
        "a0,a1,length,type,word\n"
        "2,3,9,II,5 6 2 5 3 6 5 2 3\n"
        "2,4,9,II,6 3 4 2 6 4 3 2 4\n"
        "4,5,2,II,4 5\n");
  std::ostringstream tower_out;
  write_tower_csv(tower_out, make_tower_record(compute_tower(make("S2"), 5)));
  CHECK(tower_out.str().rfind("n,a0,a1,length,b,braid,transitive\n3,1,1,1,,1 2,\n", 0) == 0);
}

TEST_CASE("formats and run config") {
  for (const char* name : {"paper", "json", "csv", "dot"}) {
    CHECK(format_name(parse_format(name)) == name);
  }
  CHECK_THROWS_AS(parse_format("xml"), UsageError);

  CHECK(canonical_group_spec("sl2(3)") == "SL2(3)");
  CHECK(canonical_group_spec(" s4 ") == "S4");
  CHECK(canonical_group_spec("Z2xZ4") == "Z2xZ4");
  RunConfig c;
  c.group_spec = "a5";
  c.threads = 3;
  const auto canon = c.canonical();
  CHECK(canon.group_spec == "A5");
  CHECK(canon.canonical().group_spec == canon.group_spec);
  CHECK(canon.tower_options().threads == 3);
}

TEST_CASE("tower listing output") {
  const auto tower = compute_tower(make("S2"), 5);
  std::ostringstream out;
  write_tower_listing(out, make_tower_record(tower), tower);
  const auto text = out.str();
  CHECK(text.rfind("group S2 (order 2)\n", 0) == 0);
  CHECK(text.find("nontrivial b3 at n=4:") != std::string::npos);
}
