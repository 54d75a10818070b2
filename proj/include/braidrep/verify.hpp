#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "braidrep/extension.hpp"
#include "braidrep/oracle.hpp"

namespace braidrep {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  std::size_t budget = oracle::kDefaultBudget;
  int threads = 1;
  std::size_t vertex_cap = kDefaultVertexCap;
};

/// Runs the suites prop1, prop2, prop3, prop4, census and oracle-eq on the
/// tower of `group` up to level n. A failing suite carries a diagnostic note.
std::vector<SuiteResult> run_verify(std::shared_ptr<const FiniteGroup> group, int n,
                                    const VerifyOptions& options = {});

bool all_passed(const std::vector<SuiteResult>& results);

/// "PASS prop1" / "FAIL census" lines, notes indented beneath.
void write_verify(std::ostream& os, const std::vector<SuiteResult>& results);

/// Hom(K_n, Sigma) against Hom(K_n, perfect core) at levels 6..n, with the
/// core's census mapped into Sigma. Empty string on agreement.
std::string compare_with_perfect_core(const TowerResult& tower, const TowerOptions& options);

}  // namespace braidrep
