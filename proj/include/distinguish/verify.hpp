#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace distinguish {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // summary on success, first failure otherwise
};

struct VerifyOptions {
  std::uint64_t seed = 20260315;
  std::size_t random_actions = 200;
  std::size_t random_trees = 100;
  std::size_t random_graphs = 300;
  std::size_t max_tree_vertices_exhaustive = 10;
};

/// Names of every check, in the order run_all runs them.
const std::vector<std::string>& check_names();

/// Runs one named check. Throws InputError for an unknown name.
CheckResult run_check(std::string_view name, const VerifyOptions& options = {});

std::vector<CheckResult> run_all(const VerifyOptions& options = {});

}  // namespace distinguish
