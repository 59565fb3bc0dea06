#pragma once

#include <memory>
#include <string>

#include "lgvi/lie.hpp"

namespace lgvi {

// Left-trivialized Lagrangian l(g, xi) with the pieces the steppers need:
// the fiber derivative dl/dxi, its inverse, and the configuration force
// paired left-trivially: <body_force, eta> = d/de l(g tau(e eta), xi)|_0.
class Model {
 public:
  virtual ~Model() = default;

  virtual std::string name() const = 0;
  virtual GroupId group() const = 0;
  virtual double lagrangian(const GroupElement& g, const AlgebraElement& xi) const = 0;
  virtual Momentum momentum(const GroupElement& g, const AlgebraElement& xi) const = 0;
  virtual Momentum body_force(const GroupElement& g, const AlgebraElement& xi) const = 0;
  virtual AlgebraElement legendre_inv(const GroupElement& g, const Momentum& mu) const = 0;
  virtual bool is_left_invariant() const = 0;

  // dl/dxi independent of g (true for every model here); enables the
  // short Stormer-Verlet elimination path.
  virtual bool is_separable() const { return true; }

  // <dl/dxi, xi> - l
  double energy(const GroupElement& g, const AlgebraElement& xi) const;
};

// Free rigid body on SO(3): l = 1/2 <I xi, xi>.
class RigidBodyModel : public Model {
 public:
  explicit RigidBodyModel(const Eigen::Vector3d& inertia);

  std::string name() const override { return "rigid_body"; }
  GroupId group() const override { return GroupId::SO3; }
  double lagrangian(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum momentum(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum body_force(const GroupElement& g, const AlgebraElement& xi) const override;
  AlgebraElement legendre_inv(const GroupElement& g, const Momentum& mu) const override;
  bool is_left_invariant() const override { return true; }

  const Eigen::Vector3d& inertia() const { return inertia_; }

 private:
  Eigen::Vector3d inertia_;
};

// Rigid body with an attitude potential mgl <Gamma, chi>, Gamma = R^T e3.
// mgl = 0 reduces to the free rigid body.
class HeavyTopModel : public Model {
 public:
  HeavyTopModel(const Eigen::Vector3d& inertia, double mgl, const Eigen::Vector3d& chi);

  std::string name() const override { return "heavy_top"; }
  GroupId group() const override { return GroupId::SO3; }
  double lagrangian(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum momentum(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum body_force(const GroupElement& g, const AlgebraElement& xi) const override;
  AlgebraElement legendre_inv(const GroupElement& g, const Momentum& mu) const override;
  bool is_left_invariant() const override { return mgl_ == 0.0; }

 private:
  Eigen::Vector3d inertia_;
  double mgl_;
  Eigen::Vector3d chi_;
};

// Vehicle on SE(3) with added inertia/mass and an attitude-only buoyancy
// potential b * <e3, R r_b> (neutrally buoyant, offset center of buoyancy).
class UnderwaterVehicleModel : public Model {
 public:
  UnderwaterVehicleModel(const Eigen::Matrix3d& J, const Eigen::Matrix3d& M,
                         const Eigen::Matrix3d& D, double buoyancy, const Eigen::Vector3d& r_b);

  static UnderwaterVehicleModel with_defaults();

  std::string name() const override { return "underwater_vehicle"; }
  GroupId group() const override { return GroupId::SE3; }
  double lagrangian(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum momentum(const GroupElement& g, const AlgebraElement& xi) const override;
  Momentum body_force(const GroupElement& g, const AlgebraElement& xi) const override;
  AlgebraElement legendre_inv(const GroupElement& g, const Momentum& mu) const override;
  bool is_left_invariant() const override { return buoyancy_ == 0.0; }

 private:
  Eigen::Matrix<double, 6, 6> metric_;
  Eigen::LDLT<Eigen::Matrix<double, 6, 6>> metric_ldlt_;
  double buoyancy_;
  Eigen::Vector3d r_b_;
};

}  // namespace lgvi
