// geocontact - penalty-contact simulation of a driven fingertip on a free object

#include "geocontact/dynamics.hpp"

#include <cmath>

namespace geocontact {

double penalty_normal_force(double penetration, double penetration_rate, double stiffness,
                            double damping) {
  if (!(stiffness > 0.0)) throw InvalidParameterError("contact stiffness must be positive");
  if (damping < 0.0) throw InvalidParameterError("contact damping must be non-negative");
  if (penetration <= 0.0) return 0.0;
  return std::max(0.0, stiffness * penetration + damping * penetration_rate);
}

Eigen::Vector2d friction_force(const Eigen::Vector2d& slip_velocity, double normal_force,
                               double mu, double viscous_gain) {
  const double slip = slip_velocity.norm();
  if (slip == 0.0 || normal_force <= 0.0) return Eigen::Vector2d::Zero();
  const double magnitude = std::min(viscous_gain * slip, mu * normal_force);
  return -(magnitude / slip) * slip_velocity;
}

namespace {
// object packing: p(0..2) q(3..6, wxyz) v(7..9) w(10..12)
constexpr int kObjSize = 13;

Eigen::Quaterniond quat_from(const Eigen::VectorXd& y) {
  return Eigen::Quaterniond(y[3], y[4], y[5], y[6]);
}
}  // namespace

DynamicWorld::DynamicWorld(RigidBodyState object, double object_radius,
                           std::vector<KinematicPair> drives, double finger_radius,
                           DynamicsParams params, double t0)
    : object_(std::move(object)),
      object_radius_(object_radius),
      drives_(std::move(drives)),
      finger_radius_(finger_radius),
      params_(params),
      t_(t0) {
  if (!(object_radius_ > 0.0) || !(finger_radius_ > 0.0)) {
    throw InvalidParameterError("body radii must be positive");
  }
  if (!(params_.normal_force > 0.0)) {
    throw InvalidParameterError("commanded normal force must be positive");
  }
  int size = kObjSize;
  for (const KinematicPair& p : drives_) {
    kin_offsets_.push_back(size);
    size += p.state_size();
  }
  state_ = Eigen::VectorXd::Zero(size);
  pack_object(object_, state_);
}

void DynamicWorld::set_drive_state(std::size_t pair_index, const Eigen::VectorXd& state) {
  const int n = drives_[pair_index].state_size();
  if (state.size() != n) throw InvalidParameterError("drive state size mismatch");
  state_.segment(kin_offsets_[pair_index], n) = state;
}

void DynamicWorld::pack_object(const RigidBodyState& s, Eigen::VectorXd& y) {
  y.segment<3>(0) = s.position;
  y[3] = s.orientation.w();
  y[4] = s.orientation.x();
  y[5] = s.orientation.y();
  y[6] = s.orientation.z();
  y.segment<3>(7) = s.linear_velocity;
  y.segment<3>(10) = s.angular_velocity;
}

RigidBodyState DynamicWorld::unpack_object(const Eigen::VectorXd& y, const RigidBodyState& like) {
  RigidBodyState s = like;
  s.position = y.segment<3>(0);
  s.orientation = quat_from(y);
  s.linear_velocity = y.segment<3>(7);
  s.angular_velocity = y.segment<3>(10);
  return s;
}

DynamicWorld::ForceEval DynamicWorld::pair_forces(double t, const RigidBodyState& obj,
                                                  const Eigen::Ref<const Eigen::VectorXd>& kin,
                                                  const KinematicPair& pair) const {
  const PairSample ks = pair.sample(t, kin);
  const Chart& object_chart = *pair.config().body2;

  const Eigen::Matrix3d rot = obj.orientation.toRotationMatrix();
  const Eigen::Vector3d c_obj = object_chart.point(ks.state.u2, ks.state.v2);
  const Eigen::Vector3d x_hat = object_chart.du(ks.state.u2, ks.state.v2).normalized();
  const Eigen::Vector3d y_hat = object_chart.dv(ks.state.u2, ks.state.v2).normalized();
  const Eigen::Vector3d n_hat = x_hat.cross(y_hat).normalized();

  const Eigen::Vector3d contact_w = obj.position + rot * c_obj;
  const Eigen::Vector3d normal_w = rot * n_hat;

  // Fingertip center commanded along the outward normal with the penetration
  // that yields the commanded steady normal force.
  const double penetration_cmd = params_.normal_force / params_.stiffness;
  const Eigen::Vector3d finger_center =
      contact_w + (finger_radius_ - penetration_cmd) * normal_w;

  const double penetration =
      object_radius_ + finger_radius_ - (finger_center - obj.position).norm();

  // Material velocities at the contact. The fingertip tracks the object's
  // contact-point motion and adds the pair's commanded tangential slip.
  const Eigen::Vector3d v_obj_mat =
      obj.linear_velocity + obj.angular_velocity.cross(rot * c_obj);
  const Eigen::Vector3d slip_w = rot * (x_hat * ks.v_rel_x + y_hat * ks.v_rel_y);
  const Eigen::Vector3d v_fing_mat = v_obj_mat + slip_w;
  const double penetration_rate = -(v_fing_mat - v_obj_mat).dot(normal_w);

  ForceEval out;
  const double f_n =
      penalty_normal_force(penetration, penetration_rate, params_.stiffness, params_.damping);

  // Slip of the object relative to the fingertip, object surface frame.
  const Eigen::Vector2d slip_obj(-ks.v_rel_x, -ks.v_rel_y);
  const Eigen::Vector2d f_t = friction_force(slip_obj, f_n, params_.mu, params_.viscous_gain);

  out.force = -f_n * normal_w + rot * (x_hat * f_t.x() + y_hat * f_t.y());
  out.torque = (contact_w - obj.position).cross(out.force);
  out.record.normal_force = f_n;
  out.record.tangential_x = f_t.x();
  out.record.tangential_y = f_t.y();
  out.record.saturated = params_.viscous_gain * slip_obj.norm() >= params_.mu * f_n && f_n > 0.0;
  out.slip = slip_obj;
  return out;
}

void DynamicWorld::rhs(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) const {
  const RigidBodyState obj = unpack_object(y, object_);

  Eigen::Vector3d force = Eigen::Vector3d::Zero();
  Eigen::Vector3d torque = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < drives_.size(); ++i) {
    const auto seg = y.segment(kin_offsets_[i], drives_[i].state_size());
    const ForceEval f = pair_forces(t, obj, seg, drives_[i]);
    force += f.force;
    torque += f.torque;
  }

  dydt.segment<3>(0) = obj.linear_velocity;
  const Eigen::Quaterniond omega_q(0.0, obj.angular_velocity.x(), obj.angular_velocity.y(),
                                   obj.angular_velocity.z());
  const Eigen::Quaterniond qdot(0.5 * (omega_q * obj.orientation).coeffs());
  dydt[3] = qdot.w();
  dydt[4] = qdot.x();
  dydt[5] = qdot.y();
  dydt[6] = qdot.z();
  dydt.segment<3>(7) = force / obj.mass;

  const Eigen::Matrix3d rot = obj.orientation.toRotationMatrix();
  const Eigen::Matrix3d inertia_w = rot * obj.inertia * rot.transpose();
  dydt.segment<3>(10) = inertia_w.ldlt().solve(
      torque - obj.angular_velocity.cross(inertia_w * obj.angular_velocity));

  for (std::size_t i = 0; i < drives_.size(); ++i) {
    const int off = kin_offsets_[i];
    const int n = drives_[i].state_size();
    drives_[i].rhs(t, y.segment(off, n), dydt.segment(off, n));
  }
}

void DynamicWorld::fixup(Eigen::VectorXd& y) const {
  Eigen::Quaterniond q = quat_from(y);
  q.normalize();
  y[3] = q.w();
  y[4] = q.x();
  y[5] = q.y();
  y[6] = q.z();
  for (std::size_t i = 0; i < drives_.size(); ++i) {
    auto seg = y.segment(kin_offsets_[i], drives_[i].state_size());
    drives_[i].wrap_state(seg);
  }
}

void DynamicWorld::step(double dt) {
  OdeRhs f = [this](double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
    rhs(t, y, dydt);
  };
  StateFixup fx = [this](Eigen::VectorXd& y) { fixup(y); };
  const Trajectory traj = rk4_integrate(f, state_, t_, t_ + dt, dt, fx);
  state_ = traj.states.back();
  t_ += dt;
  object_ = unpack_object(state_, object_);
}

DynamicContactSample DynamicWorld::contact_sample(std::size_t i) const {
  const auto seg = state_.segment(kin_offsets_[i], drives_[i].state_size());
  const ForceEval f = pair_forces(t_, object_, seg, drives_[i]);
  DynamicContactSample s;
  s.t = t_;
  s.force = f.record;
  s.slip_x = f.slip.x();
  s.slip_y = f.slip.y();
  return s;
}

PairSample DynamicWorld::kinematic_sample(std::size_t i) const {
  return drives_[i].sample(t_, state_.segment(kin_offsets_[i], drives_[i].state_size()));
}

DynamicsRunResult run_dynamics(DynamicWorld& world, double t1, double step) {
  DynamicsRunResult out;
  out.contact_samples.resize(world.pair_count());
  out.kinematic_samples.resize(world.pair_count());

  auto record = [&]() {
    out.times.push_back(world.time());
    out.object_states.push_back(world.object());
    for (std::size_t i = 0; i < world.pair_count(); ++i) {
      out.contact_samples[i].push_back(world.contact_sample(i));
      out.kinematic_samples[i].push_back(world.kinematic_sample(i));
    }
  };

  record();
  const long n = std::max(1L, std::lround((t1 - world.time()) / step));
  const double h = (t1 - world.time()) / static_cast<double>(n);
  for (long i = 0; i < n; ++i) {
    world.step(h);
    record();
  }
  return out;
}

}  // namespace geocontact
