#pragma once

#include <Eigen/Dense>

#include "lgvi/errors.hpp"

namespace lgvi {

enum class GroupId { SO3, SE3 };

constexpr int algebra_dim(GroupId g) { return g == GroupId::SO3 ? 3 : 6; }
constexpr int matrix_dim(GroupId g) { return g == GroupId::SO3 ? 3 : 4; }

const char* group_name(GroupId g);

// Square-matrix group element. The struct itself does not police membership;
// group_residual() measures it and callers decide (drift is a diagnostic
// here, not an error).
struct GroupElement {
  GroupId group;
  Eigen::MatrixXd matrix;

  static GroupElement identity(GroupId g);
  static GroupElement from_rotation(const Eigen::Matrix3d& R);
  static GroupElement from_pose(const Eigen::Matrix3d& R, const Eigen::Vector3d& p);

  Eigen::Matrix3d rotation() const;  // rotation block (SE3) or the matrix itself (SO3)
  Eigen::Vector3d translation() const;  // SE3 only
};

// Lie algebra vector in the fixed basis; SE(3) coords are (angular, linear).
struct AlgebraElement {
  GroupId group;
  Eigen::VectorXd coords;

  static AlgebraElement zero(GroupId g);
  double norm() const { return coords.norm(); }
};

// Dual vector; the pairing with AlgebraElement is the coordinate dot product.
struct Momentum {
  GroupId group;
  Eigen::VectorXd coords;

  static Momentum zero(GroupId g);
  double norm() const { return coords.norm(); }
};

Eigen::Matrix3d hat3(const Eigen::Vector3d& w);
Eigen::Vector3d vee3(const Eigen::Matrix3d& W);

Eigen::MatrixXd hat(const AlgebraElement& v);
AlgebraElement vee(GroupId group, const Eigen::MatrixXd& X);

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Ad_g xi = vee(g hat(xi) g^-1); coordinate matrix and the dual (transpose).
AlgebraElement Ad(const GroupElement& g, const AlgebraElement& xi);
Eigen::MatrixXd Ad_matrix(const GroupElement& g);
Momentum Ad_star(const GroupElement& g, const Momentum& mu);

// ad_xi eta = vee([hat(xi), hat(eta)]).
AlgebraElement ad(const AlgebraElement& xi, const AlgebraElement& eta);
Eigen::MatrixXd ad_matrix(const AlgebraElement& xi);
Momentum ad_star(const AlgebraElement& xi, const Momentum& mu);

// Membership defect: ||R^T R - I||_F plus, for SE(3), the bottom-row defect.
double group_residual(const GroupElement& g);

double pairing(const Momentum& mu, const AlgebraElement& xi);

void require_same_group(GroupId a, GroupId b, const char* where);

}  // namespace lgvi
