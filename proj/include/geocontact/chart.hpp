#pragma once

#include <functional>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "geocontact/errors.hpp"

namespace geocontact {

// Validity box for the surface coordinates of a chart. Periodic axes are
// wrapped into [lo, hi) instead of checked; open axes exclude the endpoints
// (used where the chart is singular on the boundary, e.g. sphere poles).
struct Domain {
  double u_min, u_max, v_min, v_max;
  bool u_open = false, v_open = false;
  bool u_periodic = false, v_periodic = false;

  bool contains(double u, double v) const;
  // Wraps periodic coordinates into their principal interval; non-periodic
  // coordinates pass through unchanged.
  void wrap(double& u, double& v) const;
};

// A regular parametric surface patch f(u,v) -> R^3 with first and second
// partial derivatives. Charts are immutable once constructed and safe to
// share across threads.
class Chart {
 public:
  virtual ~Chart() = default;

  virtual Eigen::Vector3d point(double u, double v) const = 0;
  virtual Eigen::Vector3d du(double u, double v) const = 0;
  virtual Eigen::Vector3d dv(double u, double v) const = 0;
  virtual Eigen::Vector3d duu(double u, double v) const = 0;
  virtual Eigen::Vector3d duv(double u, double v) const = 0;
  virtual Eigen::Vector3d dvv(double u, double v) const = 0;
  virtual const Domain& domain() const = 0;
  virtual std::string name() const = 0;

  void require_in_domain(double u, double v) const;
};

using ChartPtr = std::shared_ptr<Chart>;

// f(u,v) = r (sin u cos v, sin u sin v, cos u); u in (0, pi), v periodic.
ChartPtr sphere_chart(double radius);

// Orthogonal ellipsoid chart; requires r1 > r2 > r3 > 0. The chart is
// 2pi-periodic in both coordinates; the tangent basis degenerates only at the
// isolated points with sin(u) = 0 and cos(v) = 0, which geometry_at rejects.
ChartPtr ellipsoid_chart(double r1, double r2, double r3);

// f(u,v) = (r cos u, r sin u, v); u periodic, v limited to +-100 m.
ChartPtr cylinder_chart(double radius);

// Wraps an eval-only surface function; partial derivatives come from central
// differences with the given step, second partials from nested differences.
// The usable domain is the base domain inset by one step on every side.
ChartPtr finite_difference_chart(std::function<Eigen::Vector3d(double, double)> eval,
                                 const Domain& base_domain, double step = 1e-4);

// Pointwise differential geometry of a chart: metric norms, unit normal,
// the six Christoffel symbols of the orthogonal-chart form (inner products
// of second partials with the tangent basis over squared norms), and the
// second fundamental form scalars.
struct SurfaceGeometry {
  double norm_u = 0.0;  // |f_u|
  double norm_v = 0.0;  // |f_v|
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();
  double gamma1_11 = 0.0, gamma1_12 = 0.0, gamma1_22 = 0.0;
  double gamma2_11 = 0.0, gamma2_12 = 0.0, gamma2_22 = 0.0;
  double sff_uu = 0.0, sff_uv = 0.0, sff_vv = 0.0;  // n.f_uu, n.f_uv, n.f_vv
};

SurfaceGeometry geometry_at(const Chart& chart, double u, double v);

// Largest |f_u . f_v| / (|f_u| |f_v|) over an interior grid of the domain.
// The contact formulation is only valid for orthogonal charts; scenario
// validation rejects charts where this exceeds 1e-8.
double max_orthogonality_defect(const Chart& chart, int grid = 20);

}  // namespace geocontact
