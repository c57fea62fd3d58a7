#pragma once

#include <string>
#include <vector>

namespace paley {

struct AcceptanceOptions {
  std::string cli_path;  // binary used for the determinism criterion
  unsigned workers = 2;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string details;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace paley
