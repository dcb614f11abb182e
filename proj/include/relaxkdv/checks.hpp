#pragma once

#include <string>
#include <vector>

namespace relaxkdv {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Property checks behind `relaxkdv check`: model structure against a dense
/// eigensolver and finite differences, scheme identities, and the special
/// functions against quadrature and ODE integration.
std::vector<CheckResult> run_property_checks(unsigned seed = 12345);

}  // namespace relaxkdv
