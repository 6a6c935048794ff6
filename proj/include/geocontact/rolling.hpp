#pragma once

#include <vector>

#include <Eigen/Dense>

#include "geocontact/chart.hpp"
#include "geocontact/contact.hpp"
#include "geocontact/sigma.hpp"

namespace geocontact {

// Body-2 coordinate rates and the spin-angle rate induced by the body-1 rates
// under the rolling constraint (zero tangential relative velocity).
struct RollingEvolution {
  double du2 = 0.0;
  double dv2 = 0.0;
  double dpsi = 0.0;
};

// Rotation rate of the surface coordinate frame about the normal as the
// contact point moves with rates (du, dv): y_hat . d/dt(x_hat). For an
// orthogonal chart this is (|f_v|/|f_u|) (G2_11 du + G2_12 dv).
double frame_spin_rate(const SurfaceGeometry& geom, double du, double dv);

// Solves the tangential relative-velocity rows for the body-2 rates and the
// spin-angle rate for pure rolling with no spin about the contact normal:
// psi' is the sum of both surfaces' frame spin rates along their curves.
RollingEvolution rolling_rates(const ContactState& state, const Chart& chart1,
                               const Chart& chart2);

// Inverse direction of the rolling map: body-1 rates from body-2 rates.
// The tangential frame change is an involution, so this is the same solve
// with the roles swapped.
void rolling_rates_body1(const ContactState& state, const Chart& chart1, const Chart& chart2,
                         double& du1, double& dv1);

// Tangential relative angular velocity (body-2 surface frame components) of
// body 1 with respect to body 2 under rolling, from the curvature forms of
// both surfaces and the body-1 rates.
Eigen::Vector2d rolling_angular_velocity(const ContactState& state, const Chart& chart1,
                                         const Chart& chart2);

// One sampled contact curve on a single chart: coordinates and rates at
// uniformly spaced times.
struct CurveSample {
  double u = 0.0, v = 0.0;
  double du = 0.0, dv = 0.0;
};

// Left-hand sides of the time-parameterized geodesic equations evaluated on a
// sampled curve, second derivatives taken by central differences of the
// stored rates so the check is independent of whatever generated the curve.
struct GeodesicResidual {
  double rho_u = 0.0;
  double rho_v = 0.0;
  double max_abs() const;
};

// Residuals at the interior samples (first and last are skipped by the
// central-difference stencil). sigma values must be sampled at the same
// times. Throws if fewer than 3 samples.
std::vector<GeodesicResidual> geodesic_residuals(const Chart& chart,
                                                 const std::vector<CurveSample>& samples,
                                                 const std::vector<SigmaProfile::Value>& sigma,
                                                 double dt);

double max_geodesic_residual(const Chart& chart, const std::vector<CurveSample>& samples,
                             const std::vector<SigmaProfile::Value>& sigma, double dt);

// Unsigned geodesic curvature of a sampled surface curve at the interior
// samples: the in-plane transverse part of the curve acceleration over the
// squared speed. The magnitude is used because the contact frame change
// reverses tangent-plane orientation between the two bodies, so the signed
// values of a rolling pair differ only in sign. Throws on zero-speed samples.
std::vector<double> geodesic_curvature(const Chart& chart, const std::vector<CurveSample>& samples,
                                       double dt);

// Distance statistics of 3D points to the best-fit plane through the origin
// (least-squares normal from the smallest singular direction). Used to test
// great-circle claims for curves on spheres centered at the chart origin.
double max_plane_distance_through_origin(const std::vector<Eigen::Vector3d>& points);

}  // namespace geocontact
