#include "lgvi/lie.hpp"

namespace lgvi {

const char* group_name(GroupId g) { return g == GroupId::SO3 ? "SO3" : "SE3"; }

void require_same_group(GroupId a, GroupId b, const char* where) {
  if (a != b) {
    throw GroupMismatch(std::string(where) + ": mixed " + group_name(a) + " and " + group_name(b));
  }
}

GroupElement GroupElement::identity(GroupId g) {
  int n = matrix_dim(g);
  return {g, Eigen::MatrixXd::Identity(n, n)};
}

GroupElement GroupElement::from_rotation(const Eigen::Matrix3d& R) {
  return {GroupId::SO3, R};
}

GroupElement GroupElement::from_pose(const Eigen::Matrix3d& R, const Eigen::Vector3d& p) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = R;
  m.topRightCorner<3, 1>() = p;
  return {GroupId::SE3, m};
}

Eigen::Matrix3d GroupElement::rotation() const { return matrix.topLeftCorner<3, 3>(); }

Eigen::Vector3d GroupElement::translation() const {
  if (group != GroupId::SE3) throw UnsupportedGroup("translation: SE3 only");
  return matrix.topRightCorner<3, 1>();
}

AlgebraElement AlgebraElement::zero(GroupId g) {
  return {g, Eigen::VectorXd::Zero(algebra_dim(g))};
}

Momentum Momentum::zero(GroupId g) {
  return {g, Eigen::VectorXd::Zero(algebra_dim(g))};
}

Eigen::Matrix3d hat3(const Eigen::Vector3d& w) {
  Eigen::Matrix3d W;
  W << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
  return W;
}

Eigen::Vector3d vee3(const Eigen::Matrix3d& W) {
  // Averaged read so tiny symmetric round-off does not leak into coords.
  return {0.5 * (W(2, 1) - W(1, 2)), 0.5 * (W(0, 2) - W(2, 0)), 0.5 * (W(1, 0) - W(0, 1))};
}

Eigen::MatrixXd hat(const AlgebraElement& v) {
  if (v.coords.size() != algebra_dim(v.group)) {
    throw DimensionMismatch("hat: coords size does not match group");
  }
  if (v.group == GroupId::SO3) return hat3(v.coords.head<3>());
  Eigen::Matrix4d X = Eigen::Matrix4d::Zero();
  X.topLeftCorner<3, 3>() = hat3(v.coords.head<3>());
  X.topRightCorner<3, 1>() = v.coords.tail<3>();
  return X;
}

AlgebraElement vee(GroupId group, const Eigen::MatrixXd& X) {
  if (X.rows() != matrix_dim(group) || X.cols() != matrix_dim(group)) {
    throw DimensionMismatch("vee: matrix size does not match group");
  }
  AlgebraElement out = AlgebraElement::zero(group);
  out.coords.head<3>() = vee3(X.topLeftCorner<3, 3>());
  if (group == GroupId::SE3) out.coords.tail<3>() = X.topRightCorner<3, 1>();
  return out;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  require_same_group(g.group, h.group, "compose");
  return {g.group, g.matrix * h.matrix};
}

GroupElement inverse(const GroupElement& g) {
  if (g.group == GroupId::SO3) return {g.group, g.matrix.transpose()};
  Eigen::Matrix3d Rt = g.rotation().transpose();
  return GroupElement::from_pose(Rt, -Rt * g.translation());
}

Eigen::MatrixXd Ad_matrix(const GroupElement& g) {
  if (g.group == GroupId::SO3) return g.rotation();
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(6, 6);
  const Eigen::Matrix3d R = g.rotation();
  A.topLeftCorner<3, 3>() = R;
  A.bottomRightCorner<3, 3>() = R;
  A.bottomLeftCorner<3, 3>() = hat3(g.translation()) * R;
  return A;
}

AlgebraElement Ad(const GroupElement& g, const AlgebraElement& xi) {
  require_same_group(g.group, xi.group, "Ad");
  return {g.group, Ad_matrix(g) * xi.coords};
}

Momentum Ad_star(const GroupElement& g, const Momentum& mu) {
  require_same_group(g.group, mu.group, "Ad_star");
  return {g.group, Ad_matrix(g).transpose() * mu.coords};
}

Eigen::MatrixXd ad_matrix(const AlgebraElement& xi) {
  if (xi.group == GroupId::SO3) return hat3(xi.coords.head<3>());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(6, 6);
  const Eigen::Matrix3d W = hat3(xi.coords.head<3>());
  A.topLeftCorner<3, 3>() = W;
  A.bottomRightCorner<3, 3>() = W;
  A.bottomLeftCorner<3, 3>() = hat3(xi.coords.tail<3>());
  return A;
}

AlgebraElement ad(const AlgebraElement& xi, const AlgebraElement& eta) {
  require_same_group(xi.group, eta.group, "ad");
  return {xi.group, ad_matrix(xi) * eta.coords};
}

Momentum ad_star(const AlgebraElement& xi, const Momentum& mu) {
  require_same_group(xi.group, mu.group, "ad_star");
  return {xi.group, ad_matrix(xi).transpose() * mu.coords};
}

double group_residual(const GroupElement& g) {
  const Eigen::Matrix3d R = g.rotation();
  double r = (R.transpose() * R - Eigen::Matrix3d::Identity()).norm();
  if (g.group == GroupId::SE3) {
    Eigen::RowVector4d bottom = g.matrix.row(3);
    bottom(3) -= 1.0;
    r += bottom.norm();
  }
  return r;
}

double pairing(const Momentum& mu, const AlgebraElement& xi) {
  require_same_group(mu.group, xi.group, "pairing");
  return mu.coords.dot(xi.coords);
}

}  // namespace lgvi
