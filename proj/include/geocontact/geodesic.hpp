#pragma once

#include "geocontact/chart.hpp"
#include "geocontact/contact.hpp"
#include "geocontact/sigma.hpp"

namespace geocontact {

// Second derivatives of one body's contact coordinates.
struct GeodesicRates {
  double ddu = 0.0;
  double ddv = 0.0;
};

// Time-parameterized geodesic right-hand side:
//   u'' = (sigma_dot/sigma) u' - G1_11 u'^2 - 2 G1_12 u'v' - G1_22 v'^2
//   v'' = (sigma_dot/sigma) v' - G2_11 u'^2 - 2 G2_12 u'v' - G2_22 v'^2
GeodesicRates geodesic_rhs(const SurfaceGeometry& geom, double du, double dv, double sigma,
                           double sigma_dot);
GeodesicRates geodesic_rhs(const Chart& chart, double u, double v, double du, double dv,
                           double sigma, double sigma_dot);

// Body-2 right-hand side of the contraction-modified contact-curve equations:
// the geodesic terms plus slip feedback sigma^2 * eta * v_rel scaled by the
// inverse metric norms, driving a_rel = (sigma_dot/sigma - eta sigma^2) v_rel.
// Body 1 keeps the plain geodesic_rhs. Requires eta > 0; the caller is
// responsible for checking the contraction condition (see
// contraction_margin).
GeodesicRates modified_geodesic_rhs(const ContactState& state, const Chart& chart1,
                                    const Chart& chart2, double sigma, double sigma_dot,
                                    double eta);
GeodesicRates modified_geodesic_rhs(const ContactState& state, const SurfaceGeometry& geom1,
                                    const SurfaceGeometry& geom2, double sigma, double sigma_dot,
                                    double eta);

// sigma_dot/sigma - eta sigma^2. Negative values put the slip dynamics in a
// contracting regime; a non-negative margin means disturbances are not
// guaranteed to decay.
double contraction_margin(double sigma, double sigma_dot, double eta);

}  // namespace geocontact
