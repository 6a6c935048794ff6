#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

// Shared oracles for the test suites. Everything here is intentionally
// written from scratch so it stays independent of the library code it checks.

namespace testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed5u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

// Sphere chart and its closed-form geometry, typed out independently.
inline Eigen::Vector3d sphere_eval(double r, double u, double v) {
  return {r * std::sin(u) * std::cos(v), r * std::sin(u) * std::sin(v), r * std::cos(u)};
}

struct SphereSymbols {
  double g1_22, g2_12;  // the only nonzero sphere Christoffel symbols
};
inline SphereSymbols sphere_symbols(double u) {
  return {-std::sin(u) * std::cos(u), std::cos(u) / std::sin(u)};
}

// Ellipsoid chart typed out independently of the library implementation.
inline Eigen::Vector3d ellipsoid_eval(double r1, double r2, double r3, double u, double v) {
  const double den = std::sqrt(r1 * r1 - r3 * r3);
  const double sv = std::sin(v), cv = std::cos(v), su = std::sin(u), cu = std::cos(u);
  const double e = std::sqrt(r1 * r1 - r2 * r2 * sv * sv - r3 * r3 * cv * cv);
  const double f = std::sqrt(r1 * r1 * su * su + r2 * r2 * cu * cu - r3 * r3);
  return {r1 * cu * e / den, r2 * su * cv, r3 * sv * f / den};
}

// Central differences of an arbitrary eval function.
template <typename Eval>
Eigen::Vector3d fd_du(const Eval& f, double u, double v, double h = 1e-6) {
  return (f(u + h, v) - f(u - h, v)) / (2.0 * h);
}
template <typename Eval>
Eigen::Vector3d fd_dv(const Eval& f, double u, double v, double h = 1e-6) {
  return (f(u, v + h) - f(u, v - h)) / (2.0 * h);
}

// Max distance of points to the best plane through the origin; built on the
// eigen-decomposition of the scatter matrix rather than an SVD so it does not
// share a code path with the library helper.
inline double plane_distance_oracle(const std::vector<Eigen::Vector3d>& pts) {
  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  for (const auto& p : pts) scatter += p * p.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(scatter);
  const Eigen::Vector3d normal = es.eigenvectors().col(0);
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, std::abs(normal.dot(p)));
  return worst;
}

}  // namespace testutil
