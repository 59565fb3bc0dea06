#pragma once

#include <string>
#include <vector>

#include "lgvi/retraction.hpp"

namespace lgvi {

// Shared numerical knobs. Everything the steppers and diagnostics consume
// numerically lives here; h and step counts belong to the run configuration.
struct NumericsConfig {
  double newton_tol = 1e-12;      // infinity-norm residual target
  int newton_max_iter = 50;
  double fd_step = 1e-6;          // gradient checks / model derivatives
  double chart_fd_step = 1e-5;    // symplecticity chart differences
  double guard_exp = 3.0415926535897931;  // pi - 0.1
  double guard_cayley = 10.0;
  double guard_skew_sqrt = 0.99;
  int series_q = 8;               // dexp^-1 truncation where evaluated as a series

  // Empty when valid; otherwise one message per violated field.
  std::vector<std::string> validate() const;

  double domain_guard(RetractionKind kind) const;
};

}  // namespace lgvi
