#include "lgvi/numerics.hpp"

namespace lgvi {

std::vector<std::string> NumericsConfig::validate() const {
  std::vector<std::string> errs;
  auto positive = [&](double v, const char* name) {
    if (!(v > 0.0)) errs.push_back(std::string(name) + " must be > 0");
  };
  positive(newton_tol, "newton_tol");
  if (newton_max_iter < 1) errs.push_back("newton_max_iter must be >= 1");
  positive(fd_step, "fd_step");
  positive(chart_fd_step, "chart_fd_step");
  positive(guard_exp, "guard_exp");
  positive(guard_cayley, "guard_cayley");
  positive(guard_skew_sqrt, "guard_skew_sqrt");
  if (series_q < 0) errs.push_back("series_q must be >= 0");
  return errs;
}

double NumericsConfig::domain_guard(RetractionKind kind) const {
  switch (kind) {
    case RetractionKind::Exp: return guard_exp;
    case RetractionKind::Cayley: return guard_cayley;
    case RetractionKind::SkewSqrt: return guard_skew_sqrt;
  }
  return 0.0;
}

}  // namespace lgvi
