#pragma once

#include <string>
#include <vector>

namespace iceq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// The paper-examples verification suite; every check is self-contained.
std::vector<CriterionResult> run_paper_examples_suite();

// One line per criterion: "ok N - name" / "FAIL N - name (detail)".
int print_suite_results(const std::vector<CriterionResult>& results);

}  // namespace iceq
