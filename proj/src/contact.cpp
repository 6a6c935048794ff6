// geocontact - relative kinematics of the two contact frames

#include "geocontact/contact.hpp"

#include <cmath>

#include "geocontact/geodesic.hpp"
#include "geocontact/rolling.hpp"

namespace geocontact {

Eigen::Matrix3d rotation_psi(double psi) {
  const double c = std::cos(psi), s = std::sin(psi);
  Eigen::Matrix3d r;
  r << c, -s, 0.0,
      -s, -c, 0.0,
      0.0, 0.0, -1.0;
  return r;
}

RelativeMotion relative_velocity(const ContactState& s, const Chart& chart1, const Chart& chart2) {
  return relative_velocity(s, geometry_at(chart1, s.u1, s.v1), geometry_at(chart2, s.u2, s.v2));
}

RelativeMotion relative_velocity(const ContactState& s, const SurfaceGeometry& g1,
                                 const SurfaceGeometry& g2) {
  const double c = std::cos(s.psi), sn = std::sin(s.psi);
  const double a = g1.norm_u * s.du1;
  const double b = g1.norm_v * s.dv1;

  RelativeMotion out;
  out.v_rel_x = a * c - b * sn - g2.norm_u * s.du2;
  out.v_rel_y = -a * sn - b * c - g2.norm_v * s.dv2;
  return out;
}

RelativeMotion relative_acceleration(const ContactState& s, const ContactAccels& accels,
                                     const Chart& chart1, const Chart& chart2) {
  const SurfaceGeometry g1 = geometry_at(chart1, s.u1, s.v1);
  const SurfaceGeometry g2 = geometry_at(chart2, s.u2, s.v2);

  auto curve_accel = [](const SurfaceGeometry& g, double du, double dv, double ddu, double ddv) {
    return Eigen::Vector2d(
        ddu + g.gamma1_11 * du * du + 2.0 * g.gamma1_12 * du * dv + g.gamma1_22 * dv * dv,
        ddv + g.gamma2_11 * du * du + 2.0 * g.gamma2_12 * du * dv + g.gamma2_22 * dv * dv);
  };

  const Eigen::Vector2d a1 = curve_accel(g1, s.du1, s.dv1, accels[0], accels[1]);
  const Eigen::Vector2d a2 = curve_accel(g2, s.du2, s.dv2, accels[2], accels[3]);

  const Eigen::Matrix3d r_psi = rotation_psi(s.psi);
  const Eigen::Vector3d scaled1(g1.norm_u * a1.x(), g1.norm_v * a1.y(), 0.0);
  Eigen::Vector3d a_rel = r_psi * scaled1;
  a_rel.x() -= g2.norm_u * a2.x();
  a_rel.y() -= g2.norm_v * a2.y();

  // Coriolis coupling 2 w_rel x v1, with the relative angular velocity taken
  // from the rolling kinematics. Both w_rel and v1 lie in the tangent plane
  // (no spin about the normal), so the cross product is purely normal; the
  // tangential rows it contributes are identically zero.
  const Eigen::Vector2d w_rel = rolling_angular_velocity(s, chart1, chart2);
  const Eigen::Vector3d v1 = r_psi * Eigen::Vector3d(g1.norm_u * s.du1, g1.norm_v * s.dv1, 0.0);
  const Eigen::Vector3d coriolis =
      2.0 * Eigen::Vector3d(w_rel.x(), w_rel.y(), 0.0).cross(v1);
  a_rel.x() += coriolis.x();
  a_rel.y() += coriolis.y();

  RelativeMotion out = relative_velocity(s, chart1, chart2);
  out.a_rel_x = a_rel.x();
  out.a_rel_y = a_rel.y();
  return out;
}

double proportionality_residual(const ContactState& s, const SigmaProfile& sigma, double t,
                                const Chart& chart1, const Chart& chart2) {
  const SigmaProfile::Value sv = sigma.eval(t);
  const GeodesicRates r1 = geodesic_rhs(chart1, s.u1, s.v1, s.du1, s.dv1, sv.sigma, sv.sigma_dot);
  const GeodesicRates r2 = geodesic_rhs(chart2, s.u2, s.v2, s.du2, s.dv2, sv.sigma, sv.sigma_dot);
  const RelativeMotion rel =
      relative_acceleration(s, ContactAccels(r1.ddu, r1.ddv, r2.ddu, r2.ddv), chart1, chart2);

  const double ratio = sv.sigma_dot / sv.sigma;
  return std::max(std::abs(rel.a_rel_x - ratio * rel.v_rel_x),
                  std::abs(rel.a_rel_y - ratio * rel.v_rel_y));
}

}  // namespace geocontact
