#pragma once

#include <functional>
#include <string>
#include <vector>

namespace uj::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The nine end-to-end criteria, each with its tolerance pinned in code.
std::vector<Criterion> criteria(unsigned threads = 1);

/// Runs every criterion, writing one PASS/FAIL line per criterion to `log`
/// as it completes.
std::vector<CriterionResult> run_all(unsigned threads, std::ostream& log);

}  // namespace uj::acceptance
