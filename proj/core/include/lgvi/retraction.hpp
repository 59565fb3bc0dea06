#pragma once

#include <array>

#include "lgvi/lie.hpp"

namespace lgvi {

enum class RetractionKind { Exp, Cayley, SkewSqrt };

const char* retraction_name(RetractionKind k);

// First 16 Bernoulli numbers (B1 = -1/2 convention).
const std::array<double, 16>& bernoulli_numbers();

// Truncated series sum_{j=0..q} B_j/j! ad_xi^j as a d x d coordinate matrix.
// An alternative table can be supplied (self-test sabotage hook).
Eigen::MatrixXd dexpinv_series_matrix(const AlgebraElement& xi, int q);
Eigen::MatrixXd dexpinv_series_matrix(const AlgebraElement& xi, int q,
                                      const std::array<double, 16>& table);

// Convergent series sum_j ad_xi^j/(j+1)! summed to machine precision.
Eigen::MatrixXd dexp_series_matrix(const AlgebraElement& xi);

Eigen::Matrix3d exp_so3(const Eigen::Vector3d& w);
Eigen::Vector3d log_so3(const Eigen::Matrix3d& R);  // throws OutOfDomain at angle pi
Eigen::Matrix3d dexp_matrix_so3(const Eigen::Vector3d& w);
Eigen::Matrix3d dexpinv_matrix_so3(const Eigen::Vector3d& w);

// Local chart tau: g -> G with tau(0) = e and tau(xi) tau(-xi) = e, plus the
// right-trivialized tangent d tau and its inverse as d x d coordinate
// matrices. Duals appearing in the schemes are plain transposes of these.
struct Retraction {
  RetractionKind kind = RetractionKind::Exp;
  int series_truncation_q = 8;  // Bernoulli truncation where dexp^-1 is a series

  GroupElement tau(const AlgebraElement& xi) const;
  AlgebraElement tau_inv(const GroupElement& g) const;
  Eigen::MatrixXd dtau_matrix(const AlgebraElement& xi) const;
  Eigen::MatrixXd dtau_inv_matrix(const AlgebraElement& xi) const;
};

// skew-sqrt chart is restricted strictly inside its |xi| < 1 existence bound
inline constexpr double kSkewSqrtLimit = 0.99;

}  // namespace lgvi
