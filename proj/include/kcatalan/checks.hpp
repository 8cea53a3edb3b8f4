#pragma once

#include "kcatalan/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

// Acceptance batches shared by the `check` subcommand and the acceptance test binary.
namespace kcatalan::checks {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;
};

struct SuiteOptions {
  std::uint64_t max_paths = oracle::default_path_cap;
};

/// tables, identities, matrices, periods, oracle
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
std::vector<CriterionResult> run_suite(std::string_view name, const SuiteOptions& options = {});

/// Every suite, criteria in ascending id order.
std::vector<CriterionResult> run_all(const SuiteOptions& options = {});

void print(std::ostream& os, const CriterionResult& result);

namespace reference {

using Rows = std::vector<std::vector<long>>;

/// Published height triangles (k = 3 rows 1..6, k = 4 rows 1..4), row 5 of k = 3 as printed.
const Rows& height_k3();
const Rows& height_k4();
/// Published narayana triangles for k = 3 and k = 4, rows 1..6.
const Rows& narayana_k3();
const Rows& narayana_k4();

}  // namespace reference

}  // namespace kcatalan::checks
