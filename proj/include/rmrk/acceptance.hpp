#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rmrk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Criterion ids per suite: oracles {1, 7, 8}, rates {2, 3, 4, 5},
/// table2 {6}, comparative {9, 10}, all {1..10}. Empty for unknown names.
std::vector<int> suite_criteria(std::string_view suite);

/// Runs criteria 2 and 3 together (they share the solver runs); every other
/// id yields one result. Throws std::invalid_argument for ids outside 1..10.
std::vector<CriterionResult> run_criterion(int id);

/// Runs a suite, printing one PASS/FAIL line per criterion to out.
std::vector<CriterionResult> run_suite(std::string_view suite, std::ostream& out);

/// The `acceptance` subcommand: 0 when every criterion passes, 1 on any
/// failure, 2 with usage text on err for an unknown suite.
int acceptance_command(std::string_view suite, std::ostream& out, std::ostream& err);

}  // namespace rmrk
