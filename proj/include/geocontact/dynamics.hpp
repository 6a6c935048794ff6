#pragma once

#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include "geocontact/kinematics.hpp"

namespace geocontact {

struct RigidBodyState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d linear_velocity = Eigen::Vector3d::Zero();
  Eigen::Vector3d angular_velocity = Eigen::Vector3d::Zero();  // world frame
  double mass = 1.0;
  Eigen::Matrix3d inertia = Eigen::Matrix3d::Identity();  // body frame
};

// Spring-damper penalty normal force: max(0, k*pen + c*pen_rate) while the
// surfaces overlap, zero otherwise.
double penalty_normal_force(double penetration, double penetration_rate, double stiffness,
                            double damping);

// Viscous-capped Coulomb friction opposing the slip of the body the force
// acts on: magnitude min(viscous_gain*|slip|, mu*f_n). At the cap the
// magnitude is exactly mu*f_n.
Eigen::Vector2d friction_force(const Eigen::Vector2d& slip_velocity, double normal_force,
                               double mu, double viscous_gain);

struct ContactForceRecord {
  double normal_force = 0.0;
  double tangential_x = 0.0, tangential_y = 0.0;  // object surface frame
  bool saturated = false;
};

struct DynamicsParams {
  double stiffness = 10000.0;     // N/m
  double damping = 1000.0;        // N s/m
  double mu = 0.5;
  double viscous_gain = 1000.0;   // N s/m
  double normal_force = 1.0;      // commanded steady normal force [N]
};

struct DynamicContactSample {
  double t = 0.0;
  ContactForceRecord force;
  double slip_x = 0.0, slip_y = 0.0;  // material slip at contact, object surface frame
};

// Free rigid spherical object driven by kinematic spherical fingertips. Each
// fingertip realizes its pair's contact-curve solution against the object's
// current pose: center placed along the desired contact normal with the
// penetration that produces the commanded normal force, velocity matching the
// object's contact-point motion plus the pair's relative tangential velocity.
// Gravity is zero; the object responds to the penalty contact forces only.
class DynamicWorld {
 public:
  DynamicWorld(RigidBodyState object, double object_radius, std::vector<KinematicPair> drives,
               double finger_radius, DynamicsParams params, double t0 = 0.0);

  // Seeds one drive's contact-curve substate (see KinematicPair::initial_state).
  void set_drive_state(std::size_t pair_index, const Eigen::VectorXd& state);

  void step(double dt);
  double time() const { return t_; }

  const RigidBodyState& object() const { return object_; }
  std::size_t pair_count() const { return drives_.size(); }

  // Force/slip record of one pair evaluated at the current state.
  DynamicContactSample contact_sample(std::size_t pair_index) const;
  // Contact-curve sample of one pair's drive at the current state.
  PairSample kinematic_sample(std::size_t pair_index) const;

 private:
  void rhs(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) const;
  void fixup(Eigen::VectorXd& y) const;

  struct ForceEval {
    Eigen::Vector3d force = Eigen::Vector3d::Zero();
    Eigen::Vector3d torque = Eigen::Vector3d::Zero();
    ContactForceRecord record;
    Eigen::Vector2d slip = Eigen::Vector2d::Zero();
  };
  ForceEval pair_forces(double t, const RigidBodyState& obj,
                        const Eigen::Ref<const Eigen::VectorXd>& kin_state,
                        const KinematicPair& pair) const;

  static RigidBodyState unpack_object(const Eigen::VectorXd& y, const RigidBodyState& like);
  static void pack_object(const RigidBodyState& s, Eigen::VectorXd& y);

  RigidBodyState object_;
  double object_radius_;
  std::vector<KinematicPair> drives_;
  double finger_radius_;
  DynamicsParams params_;
  double t_;
  Eigen::VectorXd state_;
  std::vector<int> kin_offsets_;
};

struct DynamicsRunResult {
  std::vector<double> times;
  std::vector<RigidBodyState> object_states;
  // [pair][step]
  std::vector<std::vector<DynamicContactSample>> contact_samples;
  std::vector<std::vector<PairSample>> kinematic_samples;
};

DynamicsRunResult run_dynamics(DynamicWorld& world, double t1, double step);

}  // namespace geocontact
