#include "lgvi/retraction.hpp"

#include <cmath>

namespace lgvi {

namespace {

constexpr double kSmallAngle = 1e-4;

// sin(t)/t, (1-cos t)/t^2, (t - sin t)/t^3 with series guards
double sinc(double t) {
  if (std::abs(t) < kSmallAngle) {
    double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

double one_minus_cos_over_t2(double t) {
  if (std::abs(t) < kSmallAngle) {
    double t2 = t * t;
    return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  }
  return (1.0 - std::cos(t)) / (t * t);
}

double t_minus_sin_over_t3(double t) {
  if (std::abs(t) < kSmallAngle) {
    double t2 = t * t;
    return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
  }
  return (t - std::sin(t)) / (t * t * t);
}

// coefficient of hat(w)^2 in dexpinv: (1 - (t/2) cot(t/2)) / t^2
double dexpinv_c2(double t) {
  if (std::abs(t) < kSmallAngle) {
    double t2 = t * t;
    return 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
  }
  return (1.0 - 0.5 * t / std::tan(0.5 * t)) / (t * t);
}

// V(w) = sum hat(w)^j/(j+1)!: translation factor of the SE(3) exponential
Eigen::Matrix3d exp_translation_factor(const Eigen::Vector3d& w) {
  const double t = w.norm();
  const Eigen::Matrix3d W = hat3(w);
  return Eigen::Matrix3d::Identity() + one_minus_cos_over_t2(t) * W +
         t_minus_sin_over_t3(t) * (W * W);
}

Eigen::Matrix3d exp_translation_factor_inv(const Eigen::Vector3d& w) {
  const double t = w.norm();
  const Eigen::Matrix3d W = hat3(w);
  return Eigen::Matrix3d::Identity() - 0.5 * W + dexpinv_c2(t) * (W * W);
}

GroupElement exp_retraction(const AlgebraElement& xi) {
  if (xi.group == GroupId::SO3) {
    return GroupElement::from_rotation(exp_so3(xi.coords.head<3>()));
  }
  const Eigen::Vector3d w = xi.coords.head<3>();
  const Eigen::Vector3d v = xi.coords.tail<3>();
  return GroupElement::from_pose(exp_so3(w), exp_translation_factor(w) * v);
}

AlgebraElement log_retraction(const GroupElement& g) {
  AlgebraElement out = AlgebraElement::zero(g.group);
  const Eigen::Vector3d w = log_so3(g.rotation());
  out.coords.head<3>() = w;
  if (g.group == GroupId::SE3) {
    out.coords.tail<3>() = exp_translation_factor_inv(w) * g.translation();
  }
  return out;
}

GroupElement cayley(const AlgebraElement& xi) {
  const int n = matrix_dim(xi.group);
  const Eigen::MatrixXd X = hat(xi);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(I - 0.5 * X);
  if (!lu.isInvertible()) throw OutOfDomain("cayley: e - xi/2 not invertible");
  return {xi.group, lu.solve(I + 0.5 * X)};
}

AlgebraElement cayley_inv(const GroupElement& g) {
  const int n = matrix_dim(g.group);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> lu((g.matrix + I).transpose());
  if (!lu.isInvertible()) throw OutOfDomain("cayley_inv: g + e not invertible (angle pi)");
  // 2 (g - e)(g + e)^-1, computed via the transposed solve
  Eigen::MatrixXd X = 2.0 * lu.solve((g.matrix - I).transpose()).transpose();
  return vee(g.group, X);
}

void require_skew_sqrt_domain(const AlgebraElement& xi) {
  if (xi.group != GroupId::SO3) {
    throw UnsupportedGroup("skew_sqrt: defined on SO(n) only");
  }
  if (xi.norm() >= kSkewSqrtLimit) {
    throw OutOfDomain("skew_sqrt: |xi| >= " + std::to_string(kSkewSqrtLimit));
  }
}

GroupElement skew_sqrt(const AlgebraElement& xi) {
  require_skew_sqrt_domain(xi);
  const Eigen::Matrix3d X = hat3(xi.coords.head<3>());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(X * X + Eigen::Matrix3d::Identity());
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw OutOfDomain("skew_sqrt: hat(xi)^2 + e not positive definite");
  }
  const Eigen::Matrix3d S =
      es.eigenvectors() * es.eigenvalues().cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  return GroupElement::from_rotation(X + S);
}

AlgebraElement skew_sqrt_inv(const GroupElement& g) {
  if (g.group != GroupId::SO3) throw UnsupportedGroup("skew_sqrt: defined on SO(n) only");
  return vee(g.group, 0.5 * (g.matrix - g.matrix.transpose()));
}

// dskew(x)(y) = (y tau(x) - (y tau(x))^T)/2, column-wise over the basis
Eigen::MatrixXd dskew_matrix(const AlgebraElement& xi) {
  const Eigen::Matrix3d T = skew_sqrt(xi).matrix;
  Eigen::MatrixXd D(3, 3);
  for (int i = 0; i < 3; ++i) {
    Eigen::Matrix3d Y = hat3(Eigen::Vector3d::Unit(i)) * T;
    D.col(i) = vee3(0.5 * (Y - Y.transpose()));
  }
  return D;
}

// dcay^-1(x) y = (e - x/2) y (e + x/2), column-wise
Eigen::MatrixXd dcayinv_matrix(const AlgebraElement& xi) {
  const int n = matrix_dim(xi.group);
  const int d = algebra_dim(xi.group);
  const Eigen::MatrixXd X = hat(xi);
  const Eigen::MatrixXd L = Eigen::MatrixXd::Identity(n, n) - 0.5 * X;
  const Eigen::MatrixXd R = Eigen::MatrixXd::Identity(n, n) + 0.5 * X;
  Eigen::MatrixXd D(d, d);
  AlgebraElement basis = AlgebraElement::zero(xi.group);
  for (int i = 0; i < d; ++i) {
    basis.coords.setZero();
    basis.coords[i] = 1.0;
    D.col(i) = vee(xi.group, L * hat(basis) * R).coords;
  }
  return D;
}

// dcay(x) y = (e - x/2)^-1 y (e + x/2)^-1, column-wise
Eigen::MatrixXd dcay_matrix(const AlgebraElement& xi) {
  const int n = matrix_dim(xi.group);
  const int d = algebra_dim(xi.group);
  const Eigen::MatrixXd X = hat(xi);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  Eigen::FullPivLU<Eigen::MatrixXd> luL(I - 0.5 * X);
  Eigen::FullPivLU<Eigen::MatrixXd> luR((I + 0.5 * X).transpose());
  if (!luL.isInvertible() || !luR.isInvertible()) {
    throw OutOfDomain("dcay: e -/+ xi/2 not invertible");
  }
  Eigen::MatrixXd D(d, d);
  AlgebraElement basis = AlgebraElement::zero(xi.group);
  for (int i = 0; i < d; ++i) {
    basis.coords.setZero();
    basis.coords[i] = 1.0;
    Eigen::MatrixXd M = luL.solve(hat(basis));
    D.col(i) = vee(xi.group, luR.solve(M.transpose()).transpose()).coords;
  }
  return D;
}

}  // namespace

const char* retraction_name(RetractionKind k) {
  switch (k) {
    case RetractionKind::Exp: return "exp";
    case RetractionKind::Cayley: return "cayley";
    case RetractionKind::SkewSqrt: return "skew_sqrt";
  }
  return "?";
}

const std::array<double, 16>& bernoulli_numbers() {
  static const std::array<double, 16> b = {
      1.0,
      -1.0 / 2.0,
      1.0 / 6.0,
      0.0,
      -1.0 / 30.0,
      0.0,
      1.0 / 42.0,
      0.0,
      -1.0 / 30.0,
      0.0,
      5.0 / 66.0,
      0.0,
      -691.0 / 2730.0,
      0.0,
      7.0 / 6.0,
      0.0,
  };
  return b;
}

Eigen::MatrixXd dexpinv_series_matrix(const AlgebraElement& xi, int q,
                                      const std::array<double, 16>& table) {
  if (q < 0 || q >= static_cast<int>(table.size())) {
    throw DimensionMismatch("dexpinv_series_matrix: q outside the Bernoulli table");
  }
  const int d = algebra_dim(xi.group);
  const Eigen::MatrixXd A = ad_matrix(xi);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(d, d);
  double factorial = 1.0;
  for (int j = 1; j <= q; ++j) {
    power = A * power;
    factorial *= j;
    if (table[j] != 0.0) out += (table[j] / factorial) * power;
  }
  return out;
}

Eigen::MatrixXd dexpinv_series_matrix(const AlgebraElement& xi, int q) {
  return dexpinv_series_matrix(xi, q, bernoulli_numbers());
}

Eigen::MatrixXd dexp_series_matrix(const AlgebraElement& xi) {
  const int d = algebra_dim(xi.group);
  const Eigen::MatrixXd A = ad_matrix(xi);
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(d, d);
  for (int j = 1; j <= 40; ++j) {
    term = (A * term) / (j + 1);
    out += term;
    if (term.norm() < 1e-17) break;
  }
  return out;
}

Eigen::Matrix3d exp_so3(const Eigen::Vector3d& w) {
  const double t = w.norm();
  const Eigen::Matrix3d W = hat3(w);
  return Eigen::Matrix3d::Identity() + sinc(t) * W + one_minus_cos_over_t2(t) * (W * W);
}

Eigen::Vector3d log_so3(const Eigen::Matrix3d& R) {
  const Eigen::Vector3d s = vee3(0.5 * (R - R.transpose()));  // sin(t) * axis
  const double sin_t = s.norm();
  const double cos_t = 0.5 * (R.trace() - 1.0);
  const double t = std::atan2(sin_t, cos_t);
  if (t < kSmallAngle) {
    // log(R) ~ skew part to third order
    return s * (1.0 + t * t / 6.0);
  }
  if (M_PI - t < 1e-6) {
    throw OutOfDomain("log_so3: rotation angle at pi");
  }
  return (t / sin_t) * s;
}

Eigen::Matrix3d dexp_matrix_so3(const Eigen::Vector3d& w) {
  const double t = w.norm();
  const Eigen::Matrix3d W = hat3(w);
  return Eigen::Matrix3d::Identity() + one_minus_cos_over_t2(t) * W +
         t_minus_sin_over_t3(t) * (W * W);
}

Eigen::Matrix3d dexpinv_matrix_so3(const Eigen::Vector3d& w) {
  const double t = w.norm();
  const Eigen::Matrix3d W = hat3(w);
  return Eigen::Matrix3d::Identity() - 0.5 * W + dexpinv_c2(t) * (W * W);
}

GroupElement Retraction::tau(const AlgebraElement& xi) const {
  switch (kind) {
    case RetractionKind::Exp: return exp_retraction(xi);
    case RetractionKind::Cayley: return cayley(xi);
    case RetractionKind::SkewSqrt: return skew_sqrt(xi);
  }
  throw Error("tau: bad kind");
}

AlgebraElement Retraction::tau_inv(const GroupElement& g) const {
  switch (kind) {
    case RetractionKind::Exp: return log_retraction(g);
    case RetractionKind::Cayley: return cayley_inv(g);
    case RetractionKind::SkewSqrt: return skew_sqrt_inv(g);
  }
  throw Error("tau_inv: bad kind");
}

Eigen::MatrixXd Retraction::dtau_inv_matrix(const AlgebraElement& xi) const {
  switch (kind) {
    case RetractionKind::Exp:
      if (xi.group == GroupId::SO3) return dexpinv_matrix_so3(xi.coords.head<3>());
      return dexpinv_series_matrix(xi, series_truncation_q);
    case RetractionKind::Cayley:
      return dcayinv_matrix(xi);
    case RetractionKind::SkewSqrt:
      require_skew_sqrt_domain(xi);
      return dskew_matrix(xi);
  }
  throw Error("dtau_inv_matrix: bad kind");
}

Eigen::MatrixXd Retraction::dtau_matrix(const AlgebraElement& xi) const {
  switch (kind) {
    case RetractionKind::Exp:
      if (xi.group == GroupId::SO3) return dexp_matrix_so3(xi.coords.head<3>());
      return dexp_series_matrix(xi);
    case RetractionKind::Cayley:
      return dcay_matrix(xi);
    case RetractionKind::SkewSqrt: {
      require_skew_sqrt_domain(xi);
      const Eigen::MatrixXd D = dskew_matrix(xi);
      Eigen::FullPivLU<Eigen::MatrixXd> lu(D);
      if (!lu.isInvertible()) throw Singular("dtau(skew_sqrt): dskew matrix singular");
      return lu.inverse();
    }
  }
  throw Error("dtau_matrix: bad kind");
}

}  // namespace lgvi
