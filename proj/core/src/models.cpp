#include "lgvi/models.hpp"

namespace lgvi {

namespace {
const Eigen::Vector3d kGravityDir = Eigen::Vector3d::UnitZ();  // spatial e3

void require_positive(const Eigen::Vector3d& v, const char* what) {
  if (!(v.minCoeff() > 0.0)) throw ConfigError(std::string(what) + " must be positive");
}
}  // namespace

double Model::energy(const GroupElement& g, const AlgebraElement& xi) const {
  return pairing(momentum(g, xi), xi) - lagrangian(g, xi);
}

RigidBodyModel::RigidBodyModel(const Eigen::Vector3d& inertia) : inertia_(inertia) {
  require_positive(inertia, "inertia");
}

double RigidBodyModel::lagrangian(const GroupElement&, const AlgebraElement& xi) const {
  return 0.5 * xi.coords.dot(inertia_.cwiseProduct(xi.coords.head<3>()));
}

Momentum RigidBodyModel::momentum(const GroupElement&, const AlgebraElement& xi) const {
  return {GroupId::SO3, inertia_.cwiseProduct(xi.coords.head<3>())};
}

Momentum RigidBodyModel::body_force(const GroupElement&, const AlgebraElement&) const {
  return Momentum::zero(GroupId::SO3);
}

AlgebraElement RigidBodyModel::legendre_inv(const GroupElement&, const Momentum& mu) const {
  return {GroupId::SO3, mu.coords.head<3>().cwiseQuotient(inertia_)};
}

HeavyTopModel::HeavyTopModel(const Eigen::Vector3d& inertia, double mgl,
                             const Eigen::Vector3d& chi)
    : inertia_(inertia), mgl_(mgl), chi_(chi) {
  require_positive(inertia, "inertia");
  if (std::abs(chi.norm() - 1.0) > 1e-12) throw ConfigError("chi must be a unit vector");
}

double HeavyTopModel::lagrangian(const GroupElement& g, const AlgebraElement& xi) const {
  const Eigen::Vector3d gamma = g.rotation().transpose() * kGravityDir;
  return 0.5 * xi.coords.dot(inertia_.cwiseProduct(xi.coords.head<3>())) -
         mgl_ * gamma.dot(chi_);
}

Momentum HeavyTopModel::momentum(const GroupElement&, const AlgebraElement& xi) const {
  return {GroupId::SO3, inertia_.cwiseProduct(xi.coords.head<3>())};
}

Momentum HeavyTopModel::body_force(const GroupElement& g, const AlgebraElement&) const {
  const Eigen::Vector3d gamma = g.rotation().transpose() * kGravityDir;
  return {GroupId::SO3, mgl_ * gamma.cross(chi_)};
}

AlgebraElement HeavyTopModel::legendre_inv(const GroupElement&, const Momentum& mu) const {
  return {GroupId::SO3, mu.coords.head<3>().cwiseQuotient(inertia_)};
}

UnderwaterVehicleModel::UnderwaterVehicleModel(const Eigen::Matrix3d& J, const Eigen::Matrix3d& M,
                                               const Eigen::Matrix3d& D, double buoyancy,
                                               const Eigen::Vector3d& r_b)
    : buoyancy_(buoyancy), r_b_(r_b) {
  metric_.topLeftCorner<3, 3>() = J;
  metric_.bottomRightCorner<3, 3>() = M;
  metric_.topRightCorner<3, 3>() = D;
  metric_.bottomLeftCorner<3, 3>() = D.transpose();
  if ((J - J.transpose()).norm() > 1e-12 || (M - M.transpose()).norm() > 1e-12) {
    throw ConfigError("J and M must be symmetric");
  }
  metric_ldlt_.compute(metric_);
  if (metric_ldlt_.info() != Eigen::Success || !metric_ldlt_.isPositive()) {
    throw ConfigError("vehicle metric [[J, D], [D^T, M]] must be positive definite");
  }
}

UnderwaterVehicleModel UnderwaterVehicleModel::with_defaults() {
  return UnderwaterVehicleModel(Eigen::Vector3d(1, 2, 3).asDiagonal(),
                                Eigen::Vector3d(3, 2, 1).asDiagonal(), Eigen::Matrix3d::Zero(),
                                0.1, Eigen::Vector3d(0, 0, 0.05));
}

double UnderwaterVehicleModel::lagrangian(const GroupElement& g, const AlgebraElement& xi) const {
  const double kinetic = 0.5 * xi.coords.dot(metric_ * xi.coords);
  const double potential = buoyancy_ * kGravityDir.dot(g.rotation() * r_b_);
  return kinetic - potential;
}

Momentum UnderwaterVehicleModel::momentum(const GroupElement&, const AlgebraElement& xi) const {
  return {GroupId::SE3, metric_ * xi.coords};
}

Momentum UnderwaterVehicleModel::body_force(const GroupElement& g, const AlgebraElement&) const {
  const Eigen::Vector3d gamma = g.rotation().transpose() * kGravityDir;
  Momentum f = Momentum::zero(GroupId::SE3);
  f.coords.head<3>() = buoyancy_ * gamma.cross(r_b_);
  return f;
}

AlgebraElement UnderwaterVehicleModel::legendre_inv(const GroupElement&, const Momentum& mu) const {
  return {GroupId::SE3, metric_ldlt_.solve(mu.coords)};
}

}  // namespace lgvi
