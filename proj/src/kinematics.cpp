// geocontact - finger/object pair as a first-order ODE system

#include "geocontact/kinematics.hpp"

#include <cmath>

#include "geocontact/rolling.hpp"

namespace geocontact {

namespace {

double wrap_pi(double x) {
  double y = std::remainder(x, 2.0 * M_PI);
  if (y <= -M_PI) y += 2.0 * M_PI;
  return y;
}

// State packing:
//   ModifiedGeodesic / DualGeodesic : [u1 v1 u2 v2 psi du1 dv1 du2 dv2]
//   RollingCorollary               : [u1 v1 u2 v2 psi du1 dv1]
//   PrescribedObjectSpin           : [u1 v1 u2 v2 psi]
constexpr int kU1 = 0, kV1 = 1, kU2 = 2, kV2 = 3, kPsi = 4, kDu1 = 5, kDv1 = 6, kDu2 = 7,
              kDv2 = 8;

}  // namespace

KinematicPair::KinematicPair(PairConfig config) : cfg_(std::move(config)) {
  if (!cfg_.body1 || !cfg_.body2) throw InvalidParameterError("pair needs two charts");
  if (cfg_.mode == PairMode::ModifiedGeodesic && !(cfg_.eta > 0.0)) {
    throw InvalidParameterError("modified geodesic mode needs eta > 0");
  }
  if (cfg_.mode == PairMode::PrescribedObjectSpin) {
    if (!(cfg_.spin_curvature_sum > 0.0)) {
      throw InvalidParameterError("prescribed spin mode needs a positive curvature sum");
    }
    if (cfg_.spin_axis.norm() == 0.0) {
      throw InvalidParameterError("prescribed spin mode needs a nonzero axis");
    }
  }
}

int KinematicPair::state_size() const {
  switch (cfg_.mode) {
    case PairMode::ModifiedGeodesic:
    case PairMode::DualGeodesic:
      return 9;
    case PairMode::RollingCorollary:
      return 7;
    case PairMode::PrescribedObjectSpin:
      return 5;
  }
  return 0;
}

Eigen::VectorXd KinematicPair::initial_state(const PairInitial& init) const {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(state_size());
  y[kU1] = init.u1;
  y[kV1] = init.v1;
  y[kU2] = init.u2;
  y[kV2] = init.v2;
  y[kPsi] = wrap_pi(init.psi);
  if (state_size() >= 7) {
    y[kDu1] = init.du1;
    y[kDv1] = init.dv1;
  }
  if (state_size() >= 9) {
    ContactState s;
    s.u1 = init.u1;
    s.v1 = init.v1;
    s.u2 = init.u2;
    s.v2 = init.v2;
    s.psi = y[kPsi];
    s.du1 = init.du1;
    s.dv1 = init.dv1;
    const RollingEvolution roll = rolling_rates(s, *cfg_.body1, *cfg_.body2);
    y[kDu2] = roll.du2 + init.slip_du2;
    y[kDv2] = roll.dv2 + init.slip_dv2;
  }
  return y;
}

KinematicPair::Rates KinematicPair::effective_rates(double t,
                                                    const Eigen::Ref<const Eigen::VectorXd>& y,
                                                    const SurfaceGeometry& g1,
                                                    const SurfaceGeometry& g2) const {
  Rates r{0.0, 0.0, 0.0, 0.0, 0.0};
  switch (cfg_.mode) {
    case PairMode::ModifiedGeodesic:
    case PairMode::DualGeodesic: {
      r.du1 = y[kDu1];
      r.dv1 = y[kDv1];
      r.du2 = y[kDu2];
      r.dv2 = y[kDv2];
      for (const DisturbanceWindow& w : cfg_.disturbances) {
        if (w.kind == DisturbanceWindow::Kind::RateOffset && w.active(t)) {
          r.du2 += w.du;
          r.dv2 += w.dv;
        }
      }
      break;
    }
    case PairMode::RollingCorollary: {
      ContactState s;
      s.u1 = y[kU1];
      s.v1 = y[kV1];
      s.u2 = y[kU2];
      s.v2 = y[kV2];
      s.psi = y[kPsi];
      s.du1 = y[kDu1];
      s.dv1 = y[kDv1];
      const double c = std::cos(s.psi), sn = std::sin(s.psi);
      const double a = g1.norm_u * s.du1, b = g1.norm_v * s.dv1;
      r.du1 = s.du1;
      r.dv1 = s.dv1;
      r.du2 = (a * c - b * sn) / g2.norm_u;
      r.dv2 = (-a * sn - b * c) / g2.norm_v;
      break;
    }
    case PairMode::PrescribedObjectSpin: {
      const Eigen::Vector3d omega = cfg_.spin_rate.value_unchecked(t) * cfg_.spin_axis;
      const Eigen::Vector3d w = omega.cross(g2.normal) / cfg_.spin_curvature_sum;
      const Eigen::Vector3d fu = cfg_.body2->du(y[kU2], y[kV2]);
      const Eigen::Vector3d fv = cfg_.body2->dv(y[kU2], y[kV2]);
      r.du2 = fu.dot(w) / (g2.norm_u * g2.norm_u);
      r.dv2 = fv.dot(w) / (g2.norm_v * g2.norm_v);
      const double c = std::cos(y[kPsi]), sn = std::sin(y[kPsi]);
      const double a = g2.norm_u * r.du2, b = g2.norm_v * r.dv2;
      r.du1 = (a * c - b * sn) / g1.norm_u;
      r.dv1 = (-a * sn - b * c) / g1.norm_v;
      break;
    }
  }
  r.dpsi = frame_spin_rate(g1, r.du1, r.dv1) + frame_spin_rate(g2, r.du2, r.dv2);
  return r;
}

void KinematicPair::rhs(double t, const Eigen::Ref<const Eigen::VectorXd>& y,
                        Eigen::Ref<Eigen::VectorXd> dydt) const {
  const SurfaceGeometry g1 = geometry_at(*cfg_.body1, y[kU1], y[kV1]);
  const SurfaceGeometry g2 = geometry_at(*cfg_.body2, y[kU2], y[kV2]);
  const Rates r = effective_rates(t, y, g1, g2);

  dydt[kU1] = r.du1;
  dydt[kV1] = r.dv1;
  dydt[kU2] = r.du2;
  dydt[kV2] = r.dv2;
  dydt[kPsi] = r.dpsi;

  if (cfg_.mode == PairMode::PrescribedObjectSpin) return;

  const SigmaProfile::Value sv = cfg_.sigma.eval(t);
  GeodesicRates body1 = geodesic_rhs(g1, r.du1, r.dv1, sv.sigma, sv.sigma_dot);
  for (const DisturbanceWindow& w : cfg_.disturbances) {
    if (w.kind == DisturbanceWindow::Kind::AccelerationOffset && w.active(t)) {
      body1.ddu += w.du;
      body1.ddv += w.dv;
    }
  }
  dydt[kDu1] = body1.ddu;
  dydt[kDv1] = body1.ddv;

  if (cfg_.mode == PairMode::RollingCorollary) return;

  ContactState s;
  s.u1 = y[kU1];
  s.v1 = y[kV1];
  s.u2 = y[kU2];
  s.v2 = y[kV2];
  s.psi = y[kPsi];
  s.du1 = r.du1;
  s.dv1 = r.dv1;
  s.du2 = r.du2;
  s.dv2 = r.dv2;

  GeodesicRates body2;
  if (cfg_.mode == PairMode::ModifiedGeodesic) {
    body2 = modified_geodesic_rhs(s, g1, g2, sv.sigma, sv.sigma_dot, cfg_.eta);
  } else {
    body2 = geodesic_rhs(g2, r.du2, r.dv2, sv.sigma, sv.sigma_dot);
  }
  dydt[kDu2] = body2.ddu;
  dydt[kDv2] = body2.ddv;
}

void KinematicPair::wrap_state(Eigen::Ref<Eigen::VectorXd> y) const {
  const Domain& d1 = cfg_.body1->domain();
  const Domain& d2 = cfg_.body2->domain();
  double u1 = y[kU1], v1 = y[kV1], u2 = y[kU2], v2 = y[kV2];
  d1.wrap(u1, v1);
  d2.wrap(u2, v2);
  y[kU1] = u1;
  y[kV1] = v1;
  y[kU2] = u2;
  y[kV2] = v2;
  y[kPsi] = wrap_pi(y[kPsi]);
}

PairSample KinematicPair::sample(double t, const Eigen::Ref<const Eigen::VectorXd>& y) const {
  const SurfaceGeometry g1 = geometry_at(*cfg_.body1, y[kU1], y[kV1]);
  const SurfaceGeometry g2 = geometry_at(*cfg_.body2, y[kU2], y[kV2]);
  const Rates r = effective_rates(t, y, g1, g2);

  PairSample out;
  out.t = t;
  out.state.u1 = y[kU1];
  out.state.v1 = y[kV1];
  out.state.u2 = y[kU2];
  out.state.v2 = y[kV2];
  out.state.psi = y[kPsi];
  out.state.du1 = r.du1;
  out.state.dv1 = r.dv1;
  out.state.du2 = r.du2;
  out.state.dv2 = r.dv2;
  out.state.dpsi = r.dpsi;

  const RelativeMotion rel = relative_velocity(out.state, g1, g2);
  out.v_rel_x = rel.v_rel_x;
  out.v_rel_y = rel.v_rel_y;

  if (cfg_.mode == PairMode::PrescribedObjectSpin) {
    const SigmaProfile::Value pd = cfg_.spin_rate.eval_unchecked(t);
    const double scale = cfg_.spin_axis.norm() / cfg_.spin_curvature_sum;
    out.sigma = pd.sigma * scale;
    out.sigma_dot = pd.sigma_dot * scale;
    out.contraction_margin = 0.0;
  } else {
    const SigmaProfile::Value sv = cfg_.sigma.eval(t);
    out.sigma = sv.sigma;
    out.sigma_dot = sv.sigma_dot;
    out.contraction_margin = cfg_.mode == PairMode::ModifiedGeodesic
                                 ? contraction_margin(sv.sigma, sv.sigma_dot, cfg_.eta)
                                 : 0.0;
  }
  return out;
}

PairRunResult run_pair(const PairConfig& config, const PairInitial& init, double t0, double t1,
                       double step) {
  KinematicPair pair(config);
  const Eigen::VectorXd y0 = pair.initial_state(init);

  OdeRhs rhs = [&pair](double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
    pair.rhs(t, y, dydt);
  };
  StateFixup fixup = [&pair](Eigen::VectorXd& y) { pair.wrap_state(y); };
  const Trajectory traj = rk4_integrate(rhs, y0, t0, t1, step, fixup);

  PairRunResult result;
  result.samples.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    PairSample s = pair.sample(traj.times[i], traj.states[i]);
    if (config.mode == PairMode::ModifiedGeodesic && s.contraction_margin >= 0.0) {
      if (result.diagnostics.contraction_warnings == 0) {
        result.diagnostics.first_warning_time = s.t;
      }
      ++result.diagnostics.contraction_warnings;
    }
    result.samples.push_back(std::move(s));
  }
  return result;
}

}  // namespace geocontact
