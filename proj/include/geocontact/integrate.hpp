#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "geocontact/errors.hpp"

namespace geocontact {

// Dense record of an integration run: one state row per step, t0 included.
struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;

  std::size_t size() const { return times.size(); }
  double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

using OdeRhs = std::function<void(double t, const Eigen::VectorXd& y, Eigen::VectorXd& dydt)>;

// Applied to the stored state between steps (angle wrapping, renormalizing
// quaternions); never applied inside the stage evaluations.
using StateFixup = std::function<void(Eigen::VectorXd&)>;

// Classical fixed-step 4th-order explicit integration from t0 to t1. The step
// count is round((t1-t0)/step) so the horizon is hit exactly with a uniform
// step as close as possible to the requested one. Right-hand-side failures
// and non-finite states abort with the failing time attached.
Trajectory rk4_integrate(const OdeRhs& rhs, const Eigen::VectorXd& y0, double t0, double t1,
                         double step, const StateFixup& fixup = {});

}  // namespace geocontact
