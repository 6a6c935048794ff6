#pragma once

#include <Eigen/Dense>

#include "geocontact/chart.hpp"
#include "geocontact/sigma.hpp"

namespace geocontact {

// Full contact configuration of two touching bodies: surface coordinates of
// the contact point on each body, the spin angle psi between the two u-curve
// tangents, and the time derivatives. Body 1 is the actuated body (fingertip),
// body 2 the object.
struct ContactState {
  double u1 = 0.0, v1 = 0.0;
  double u2 = 0.0, v2 = 0.0;
  double psi = 0.0;
  double du1 = 0.0, dv1 = 0.0;
  double du2 = 0.0, dv2 = 0.0;
  double dpsi = 0.0;
};

// Tangential relative velocity and acceleration of the body-1 contact frame
// with respect to the body-2 contact frame, expressed in the body-2 surface
// frame. Normal components are not tracked.
struct RelativeMotion {
  double v_rel_x = 0.0, v_rel_y = 0.0;
  double a_rel_x = 0.0, a_rel_y = 0.0;

  Eigen::Vector2d velocity() const { return {v_rel_x, v_rel_y}; }
  Eigen::Vector2d acceleration() const { return {a_rel_x, a_rel_y}; }
};

// Frame change from the body-1 surface frame to the body-2 surface frame at
// the contact: in-plane rotation by psi combined with the normal flip.
Eigen::Matrix3d rotation_psi(double psi);

// Second derivatives of the contact coordinates of both bodies, ordered
// (u1'', v1'', u2'', v2'').
using ContactAccels = Eigen::Vector4d;

RelativeMotion relative_velocity(const ContactState& state, const Chart& chart1,
                                 const Chart& chart2);
RelativeMotion relative_velocity(const ContactState& state, const SurfaceGeometry& geom1,
                                 const SurfaceGeometry& geom2);

// Tangential relative acceleration from the contact accelerations, including
// the Coriolis coupling of the relative spin with the body-1 surface velocity.
// With no spin about the contact normal that coupling is purely normal, so it
// never contributes to the tangential rows; it is carried for completeness.
RelativeMotion relative_acceleration(const ContactState& state, const ContactAccels& accels,
                                     const Chart& chart1, const Chart& chart2);

// Max-norm of a_rel - (sigma_dot/sigma) v_rel with both sides evaluated
// independently, the accelerations coming from the geodesic right-hand side.
// A runtime probe: zero (to rounding) exactly when both contact curves follow
// the time-parameterized geodesic equations.
double proportionality_residual(const ContactState& state, const SigmaProfile& sigma, double t,
                                const Chart& chart1, const Chart& chart2);

}  // namespace geocontact
