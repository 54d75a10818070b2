#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "braidrep/analysis.hpp"
#include "braidrep/errors.hpp"
#include "braidrep/report.hpp"
#include "braidrep/verify.hpp"

using namespace braidrep;

namespace {

struct Args {
  std::string group;
  std::string group_flag;
  int n = 0;
  int n_flag = 0;
  int r = 0;
  std::string format = "paper";
  bool type2 = false;
  bool count_only = false;
  bool no_transitivity = false;
  bool braid = false;
  std::size_t budget = oracle::kDefaultBudget;
  std::size_t vertex_cap = kDefaultVertexCap;
  int threads = 1;
  std::string output;
};

RunConfig config_from(const Args& a, bool needs_n) {
  RunConfig c;
  c.group_spec = a.group_flag.empty() ? a.group : a.group_flag;
  if (c.group_spec.empty()) {
    throw UsageError("a group is required (positional or --group)");
  }
  c.n_max = a.n_flag ? a.n_flag : a.n;
  if (needs_n && c.n_max < 2) {
    throw UsageError("n is required (positional or --nmax)");
  }
  c.format = parse_format(a.format);
  c.budget = a.budget;
  c.vertex_cap = a.vertex_cap;
  c.threads = a.threads;
  c.type2_only = a.type2;
  c.count_only = a.count_only;
  c.transitivity = !a.no_transitivity;
  if (c.threads < 1) {
    throw UsageError("--threads must be at least 1");
  }
  return c.canonical();
}

std::shared_ptr<const FiniteGroup> load(const RunConfig& c) {
  return std::make_shared<const FiniteGroup>(parse_group(c.group_spec));
}

int cmd_shift(const RunConfig& c, std::ostream& os) {
  const auto d = decompose(load(c), c.vertex_cap);
  if (c.count_only) {
    if (c.type2_only) {
      os << d->cycle_count(CycleType::II) << '\n';
    } else {
      os << "type I: " << d->cycle_count(CycleType::I) << " cycles, "
         << d->representation_count(CycleType::I) << " representations\n"
         << "type II: " << d->cycle_count(CycleType::II) << " cycles, "
         << d->representation_count(CycleType::II) << " representations\n";
    }
    return 0;
  }
  switch (c.format) {
    case Format::Listing: write_shift_listing(os, *d, c.type2_only); break;
    case Format::Json:
      os << nlohmann::json(make_shift_record(*d, c.type2_only)).dump(2) << '\n';
      break;
    case Format::Csv: write_shift_csv(os, make_shift_record(*d, c.type2_only)); break;
    case Format::Dot: os << to_dot(*d); break;
  }
  return 0;
}

int cmd_tower(const RunConfig& c, std::ostream& os) {
  if (c.n_max < 3) {
    throw UsageError("tower needs n >= 3");
  }
  const auto tower = compute_tower(load(c), c.n_max, c.tower_options());
  std::optional<TransitivityReport> transitivity;
  if (c.transitivity && tower.group().backend() == Backend::Symmetric) {
    transitivity = analyze_transitivity(tower);
  }
  const auto record = make_tower_record(tower, transitivity ? &*transitivity : nullptr);
  if (c.count_only) {
    for (const auto& l : record.levels) {
      os << l.n << ' ' << l.representation_count << '\n';
    }
    return 0;
  }
  switch (c.format) {
    case Format::Listing: write_tower_listing(os, record, tower); break;
    case Format::Json: os << nlohmann::json(record).dump(2) << '\n'; break;
    case Format::Csv: write_tower_csv(os, record); break;
    case Format::Dot: throw UsageError("tower has no dot output; use export-graph");
  }
  return 0;
}

int cmd_subgroups(const Args& a, std::ostream& os) {
  if (a.n < 3 || a.r < 1) {
    throw UsageError("subgroups needs n >= 3 and r >= 1");
  }
  TowerOptions o;
  o.threads = a.threads;
  o.vertex_cap = a.vertex_cap;
  const std::size_t count = a.braid ? count_braid_subgroups(a.n, a.r, o)
                                    : count_subgroups(a.n, a.r, o);
  os << (a.braid ? "B" : "K") << a.n << " index " << a.r << ": " << count << '\n';
  return 0;
}

int cmd_braid(const RunConfig& c, std::ostream& os) {
  const auto group = load(c);
  if (c.n_max == 2) {
    os << "Hom(B_2, " << group->name() << "): " << group->order() << '\n';
    return 0;
  }
  const auto tower = compute_tower(group, c.n_max, c.tower_options());
  const auto& level = tower.level(c.n_max);
  if (c.format == Format::Json) {
    nlohmann::json j = {{"group", group->name()},
                        {"n", c.n_max},
                        {"class_count", level.braid_class_count()},
                        {"representation_count", level.braid_representation_count()},
                        {"kn_trivial", level.representation_count() == 1}};
    os << j.dump(2) << '\n';
    return 0;
  }
  if (c.format != Format::Listing) {
    throw UsageError("braid supports paper and json output");
  }
  os << "Hom(B_" << c.n_max << ", " << group->name()
     << "): " << level.braid_representation_count() << " representations in "
     << level.braid_class_count() << " classes\n";
  if (level.representation_count() == 1) {
    os << "K_" << c.n_max << " maps trivially; every image is cyclic\n";
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& os) {
  VerifyOptions o;
  o.budget = c.budget;
  o.threads = c.threads;
  o.vertex_cap = c.vertex_cap;
  const auto results = run_verify(load(c), c.n_max, o);
  write_verify(os, results);
  return all_passed(results) ? 0 : 4;
}

int cmd_export_graph(const RunConfig& c, std::ostream& os) {
  os << to_dot(*decompose(load(c), c.vertex_cap));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representations of braid commutator subgroups into finite groups"};
  app.require_subcommand(1);
  Args a;

  auto add_group = [&](CLI::App* sub) {
    sub->add_option("GROUP", a.group, "S<r>, A<r>, SL2(<q>), Z<m>x..., or table:<path>");
    sub->add_option("-g,--group", a.group_flag, "group spec");
    sub->add_option("-o,--output", a.output, "write to a file instead of stdout");
    sub->add_option("--vertex-cap", a.vertex_cap, "largest |G|^2 accepted");
  };
  auto add_n = [&](CLI::App* sub) {
    sub->add_option("N", a.n, "braid index");
    sub->add_option("--nmax", a.n_flag, "braid index");
    sub->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", a.format, "paper, json, csv or dot")
        ->check(CLI::IsMember({"paper", "json", "csv", "dot"}));
  };

  auto* shift = app.add_subcommand("shift", "cycle decomposition of Hom(K_3, G)");
  add_group(shift);
  add_format(shift);
  shift->add_flag("--type2", a.type2, "list type II cycles only");
  shift->add_flag("--count-only", a.count_only, "print counts instead of cycles");

  auto* tower = app.add_subcommand("tower", "Hom(K_n, G) and Hom(B_n, G) for n up to nmax");
  add_group(tower);
  add_n(tower);
  add_format(tower);
  tower->add_flag("--count-only", a.count_only, "print representation counts only");
  tower->add_flag("--no-transitivity", a.no_transitivity, "skip transitivity over S_r");

  auto* subgroups = app.add_subcommand("subgroups", "subgroups of K_n (or B_n) of index r");
  subgroups->add_option("n", a.n, "braid index")->required();
  subgroups->add_option("r", a.r, "index")->required();
  subgroups->add_flag("--braid", a.braid, "count subgroups of B_n instead");
  subgroups->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* braid = app.add_subcommand("braid", "Hom(B_n, G)");
  add_group(braid);
  add_n(braid);
  add_format(braid);

  auto* verify = app.add_subcommand("verify", "engine against oracle and property suites");
  add_group(verify);
  add_n(verify);
  verify->add_option("--budget", a.budget, "oracle relation-check budget");

  auto* graph = app.add_subcommand("export-graph", "DOT graph of the K_3 cycles");
  add_group(graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::ofstream file;
    if (!a.output.empty()) {
      file.open(a.output);
      if (!file) {
        throw UsageError("cannot write " + a.output);
      }
    }
    std::ostream& os = a.output.empty() ? std::cout : file;
    if (*shift) return cmd_shift(config_from(a, false), os);
    if (*tower) return cmd_tower(config_from(a, true), os);
    if (*subgroups) return cmd_subgroups(a, os);
    if (*braid) return cmd_braid(config_from(a, true), os);
    if (*verify) return cmd_verify(config_from(a, true), os);
    if (*graph) return cmd_export_graph(config_from(a, false), os);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
