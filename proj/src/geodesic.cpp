#include "geocontact/geodesic.hpp"

#include <cmath>

namespace geocontact {

GeodesicRates geodesic_rhs(const SurfaceGeometry& g, double du, double dv, double sigma,
                           double sigma_dot) {
  if (std::abs(sigma) < 1e-9) {
    throw SingularProfileError("geodesic right-hand side evaluated with sigma ~ 0");
  }
  const double ratio = sigma_dot / sigma;
  GeodesicRates out;
  out.ddu = ratio * du - g.gamma1_11 * du * du - 2.0 * g.gamma1_12 * du * dv - g.gamma1_22 * dv * dv;
  out.ddv = ratio * dv - g.gamma2_11 * du * du - 2.0 * g.gamma2_12 * du * dv - g.gamma2_22 * dv * dv;
  return out;
}

GeodesicRates geodesic_rhs(const Chart& chart, double u, double v, double du, double dv,
                           double sigma, double sigma_dot) {
  return geodesic_rhs(geometry_at(chart, u, v), du, dv, sigma, sigma_dot);
}

GeodesicRates modified_geodesic_rhs(const ContactState& s, const Chart& chart1,
                                    const Chart& chart2, double sigma, double sigma_dot,
                                    double eta) {
  return modified_geodesic_rhs(s, geometry_at(chart1, s.u1, s.v1),
                               geometry_at(chart2, s.u2, s.v2), sigma, sigma_dot, eta);
}

GeodesicRates modified_geodesic_rhs(const ContactState& s, const SurfaceGeometry& g1,
                                    const SurfaceGeometry& g2, double sigma, double sigma_dot,
                                    double eta) {
  GeodesicRates out = geodesic_rhs(g2, s.du2, s.dv2, sigma, sigma_dot);

  const RelativeMotion rel = relative_velocity(s, g1, g2);
  const double gain = sigma * sigma * eta;
  out.ddu += gain * rel.v_rel_x / g2.norm_u;
  out.ddv += gain * rel.v_rel_y / g2.norm_v;
  return out;
}

double contraction_margin(double sigma, double sigma_dot, double eta) {
  return sigma_dot / sigma - eta * sigma * sigma;
}

}  // namespace geocontact
