#include "geocontact/integrate.hpp"

#include <cmath>

namespace geocontact {

Trajectory rk4_integrate(const OdeRhs& rhs, const Eigen::VectorXd& y0, double t0, double t1,
                         double step, const StateFixup& fixup) {
  if (!(step > 0.0)) throw InvalidParameterError("integrator step must be positive");
  if (!(t1 > t0)) throw InvalidParameterError("integrator horizon must satisfy t1 > t0");

  const long n = std::max(1L, std::lround((t1 - t0) / step));
  const double h = (t1 - t0) / static_cast<double>(n);

  Trajectory traj;
  traj.times.reserve(n + 1);
  traj.states.reserve(n + 1);

  Eigen::VectorXd y = y0;
  Eigen::VectorXd k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());

  auto eval = [&](double t, const Eigen::VectorXd& state, Eigen::VectorXd& out) {
    try {
      rhs(t, state, out);
    } catch (const NumericalError&) {
      throw;
    } catch (const std::exception& e) {
      throw NumericalError(t, e.what());
    }
  };

  traj.times.push_back(t0);
  traj.states.push_back(y);

  for (long i = 0; i < n; ++i) {
    const double t = t0 + h * static_cast<double>(i);
    eval(t, y, k1);
    tmp = y + 0.5 * h * k1;
    eval(t + 0.5 * h, tmp, k2);
    tmp = y + 0.5 * h * k2;
    eval(t + 0.5 * h, tmp, k3);
    tmp = y + h * k3;
    eval(t + h, tmp, k4);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    if (!y.allFinite()) {
      throw NumericalError(t + h, "non-finite state after integration step");
    }
    if (fixup) fixup(y);
    traj.times.push_back(t0 + h * static_cast<double>(i + 1));
    traj.states.push_back(y);
  }
  return traj;
}

}  // namespace geocontact
