// geocontact - built-in charts and pointwise surface geometry

#include "geocontact/chart.hpp"

#include <cmath>
#include <utility>

namespace geocontact {

namespace {
constexpr double kDegenerateTol = 1e-12;

double wrap_angle(double x, double lo, double hi) {
  const double span = hi - lo;
  double y = std::fmod(x - lo, span);
  if (y < 0.0) y += span;
  return y + lo;
}
}  // namespace

bool Domain::contains(double u, double v) const {
  if (!u_periodic) {
    if (u_open ? (u <= u_min || u >= u_max) : (u < u_min || u > u_max)) return false;
  }
  if (!v_periodic) {
    if (v_open ? (v <= v_min || v >= v_max) : (v < v_min || v > v_max)) return false;
  }
  return true;
}

void Domain::wrap(double& u, double& v) const {
  if (u_periodic) u = wrap_angle(u, u_min, u_max);
  if (v_periodic) v = wrap_angle(v, v_min, v_max);
}

void Chart::require_in_domain(double u, double v) const {
  if (!std::isfinite(u) || !std::isfinite(v) || !domain().contains(u, v)) {
    throw DomainError(name() + ": (u,v)=(" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside chart domain");
  }
}

// ---------------------------------------------------------------------------

namespace {

class SphereChart final : public Chart {
 public:
  explicit SphereChart(double radius) : r_(radius) {
    if (!(radius > 0.0)) throw InvalidParameterError("sphere radius must be positive");
  }

  Eigen::Vector3d point(double u, double v) const override {
    return r_ * Eigen::Vector3d(std::sin(u) * std::cos(v), std::sin(u) * std::sin(v), std::cos(u));
  }
  Eigen::Vector3d du(double u, double v) const override {
    return r_ * Eigen::Vector3d(std::cos(u) * std::cos(v), std::cos(u) * std::sin(v), -std::sin(u));
  }
  Eigen::Vector3d dv(double u, double v) const override {
    return r_ * Eigen::Vector3d(-std::sin(u) * std::sin(v), std::sin(u) * std::cos(v), 0.0);
  }
  Eigen::Vector3d duu(double u, double v) const override { return -point(u, v); }
  Eigen::Vector3d duv(double u, double v) const override {
    return r_ * Eigen::Vector3d(-std::cos(u) * std::sin(v), std::cos(u) * std::cos(v), 0.0);
  }
  Eigen::Vector3d dvv(double u, double v) const override {
    return r_ * Eigen::Vector3d(-std::sin(u) * std::cos(v), -std::sin(u) * std::sin(v), 0.0);
  }
  const Domain& domain() const override {
    static const Domain dom{0.0, M_PI, -M_PI, M_PI, /*u_open=*/true, /*v_open=*/false,
                            /*u_periodic=*/false, /*v_periodic=*/true};
    return dom;
  }
  std::string name() const override { return "sphere"; }

 private:
  double r_;
};

class CylinderChart final : public Chart {
 public:
  explicit CylinderChart(double radius) : r_(radius) {
    if (!(radius > 0.0)) throw InvalidParameterError("cylinder radius must be positive");
  }

  Eigen::Vector3d point(double u, double v) const override {
    return {r_ * std::cos(u), r_ * std::sin(u), v};
  }
  Eigen::Vector3d du(double u, double) const override {
    return {-r_ * std::sin(u), r_ * std::cos(u), 0.0};
  }
  Eigen::Vector3d dv(double, double) const override { return {0.0, 0.0, 1.0}; }
  Eigen::Vector3d duu(double u, double) const override {
    return {-r_ * std::cos(u), -r_ * std::sin(u), 0.0};
  }
  Eigen::Vector3d duv(double, double) const override { return Eigen::Vector3d::Zero(); }
  Eigen::Vector3d dvv(double, double) const override { return Eigen::Vector3d::Zero(); }
  const Domain& domain() const override {
    static const Domain dom{-M_PI, M_PI, -100.0, 100.0, false, false,
                            /*u_periodic=*/true, /*v_periodic=*/false};
    return dom;
  }
  std::string name() const override { return "cylinder"; }

 private:
  double r_;
};

// Orthogonal chart for the tri-axial ellipsoid:
//   x = r1 cos(u) E(v) / d,  y = r2 sin(u) cos(v),  z = r3 sin(v) F(u) / d
// with E(v) = sqrt(r1^2 - r2^2 sin^2 v - r3^2 cos^2 v),
//      F(u) = sqrt(r1^2 sin^2 u + r2^2 cos^2 u - r3^2),  d = sqrt(r1^2 - r3^2).
// For r1 > r2 > r3 both radicands stay strictly positive for all (u,v).
class EllipsoidChart final : public Chart {
 public:
  EllipsoidChart(double r1, double r2, double r3) : r1_(r1), r2_(r2), r3_(r3) {
    if (!(r1 > r2 && r2 > r3 && r3 > 0.0)) {
      throw InvalidParameterError("ellipsoid radii must satisfy r1 > r2 > r3 > 0");
    }
    d_ = std::sqrt(r1 * r1 - r3 * r3);
  }

  Eigen::Vector3d point(double u, double v) const override {
    return {r1_ * std::cos(u) * E(v) / d_, r2_ * std::sin(u) * std::cos(v),
            r3_ * std::sin(v) * F(u) / d_};
  }
  Eigen::Vector3d du(double u, double v) const override {
    return {-r1_ * std::sin(u) * E(v) / d_, r2_ * std::cos(u) * std::cos(v),
            r3_ * std::sin(v) * Fp(u) / d_};
  }
  Eigen::Vector3d dv(double u, double v) const override {
    return {r1_ * std::cos(u) * Ep(v) / d_, -r2_ * std::sin(u) * std::sin(v),
            r3_ * std::cos(v) * F(u) / d_};
  }
  Eigen::Vector3d duu(double u, double v) const override {
    return {-r1_ * std::cos(u) * E(v) / d_, -r2_ * std::sin(u) * std::cos(v),
            r3_ * std::sin(v) * Fpp(u) / d_};
  }
  Eigen::Vector3d duv(double u, double v) const override {
    return {-r1_ * std::sin(u) * Ep(v) / d_, -r2_ * std::cos(u) * std::sin(v),
            r3_ * std::cos(v) * Fp(u) / d_};
  }
  Eigen::Vector3d dvv(double u, double v) const override {
    return {r1_ * std::cos(u) * Epp(v) / d_, -r2_ * std::sin(u) * std::cos(v),
            -r3_ * std::sin(v) * F(u) / d_};
  }
  const Domain& domain() const override {
    static const Domain dom{-M_PI, M_PI, -M_PI, M_PI, false, false,
                            /*u_periodic=*/true, /*v_periodic=*/true};
    return dom;
  }
  std::string name() const override { return "ellipsoid"; }

 private:
  double E(double v) const {
    const double s = std::sin(v), c = std::cos(v);
    return std::sqrt(r1_ * r1_ - r2_ * r2_ * s * s - r3_ * r3_ * c * c);
  }
  double Ep(double v) const {
    return -(r2_ * r2_ - r3_ * r3_) * std::sin(v) * std::cos(v) / E(v);
  }
  double Epp(double v) const {
    const double a = r2_ * r2_ - r3_ * r3_;
    const double e = E(v), s = std::sin(v), c = std::cos(v);
    return -a * (std::cos(2.0 * v) / e + a * s * s * c * c / (e * e * e));
  }
  double F(double u) const {
    const double s = std::sin(u), c = std::cos(u);
    return std::sqrt(r1_ * r1_ * s * s + r2_ * r2_ * c * c - r3_ * r3_);
  }
  double Fp(double u) const {
    return (r1_ * r1_ - r2_ * r2_) * std::sin(u) * std::cos(u) / F(u);
  }
  double Fpp(double u) const {
    const double a = r1_ * r1_ - r2_ * r2_;
    const double f = F(u), s = std::sin(u), c = std::cos(u);
    return a * (std::cos(2.0 * u) / f - a * s * s * c * c / (f * f * f));
  }

  double r1_, r2_, r3_, d_;
};

class FiniteDifferenceChart final : public Chart {
 public:
  FiniteDifferenceChart(std::function<Eigen::Vector3d(double, double)> eval, const Domain& base,
                        double step)
      : eval_(std::move(eval)), h_(step) {
    if (!(step > 0.0)) throw InvalidParameterError("finite-difference step must be positive");
    dom_ = base;
    if (!dom_.u_periodic) {
      dom_.u_min += step;
      dom_.u_max -= step;
      dom_.u_open = true;
    }
    if (!dom_.v_periodic) {
      dom_.v_min += step;
      dom_.v_max -= step;
      dom_.v_open = true;
    }
    if (dom_.u_min >= dom_.u_max || dom_.v_min >= dom_.v_max) {
      throw InvalidParameterError("finite-difference step exceeds chart domain");
    }
  }

  Eigen::Vector3d point(double u, double v) const override {
    require_in_domain(u, v);
    return eval_(u, v);
  }
  Eigen::Vector3d du(double u, double v) const override {
    require_in_domain(u, v);
    return (eval_(u + h_, v) - eval_(u - h_, v)) / (2.0 * h_);
  }
  Eigen::Vector3d dv(double u, double v) const override {
    require_in_domain(u, v);
    return (eval_(u, v + h_) - eval_(u, v - h_)) / (2.0 * h_);
  }
  Eigen::Vector3d duu(double u, double v) const override {
    require_in_domain(u, v);
    return (eval_(u + h_, v) - 2.0 * eval_(u, v) + eval_(u - h_, v)) / (h_ * h_);
  }
  Eigen::Vector3d duv(double u, double v) const override {
    require_in_domain(u, v);
    return (eval_(u + h_, v + h_) - eval_(u + h_, v - h_) - eval_(u - h_, v + h_) +
            eval_(u - h_, v - h_)) /
           (4.0 * h_ * h_);
  }
  Eigen::Vector3d dvv(double u, double v) const override {
    require_in_domain(u, v);
    return (eval_(u, v + h_) - 2.0 * eval_(u, v) + eval_(u, v - h_)) / (h_ * h_);
  }
  const Domain& domain() const override { return dom_; }
  std::string name() const override { return "finite-difference"; }

 private:
  std::function<Eigen::Vector3d(double, double)> eval_;
  double h_;
  Domain dom_;
};

}  // namespace

ChartPtr sphere_chart(double radius) { return std::make_shared<SphereChart>(radius); }

ChartPtr ellipsoid_chart(double r1, double r2, double r3) {
  return std::make_shared<EllipsoidChart>(r1, r2, r3);
}

ChartPtr cylinder_chart(double radius) { return std::make_shared<CylinderChart>(radius); }

ChartPtr finite_difference_chart(std::function<Eigen::Vector3d(double, double)> eval,
                                 const Domain& base_domain, double step) {
  return std::make_shared<FiniteDifferenceChart>(std::move(eval), base_domain, step);
}

SurfaceGeometry geometry_at(const Chart& chart, double u, double v) {
  chart.require_in_domain(u, v);

  const Eigen::Vector3d fu = chart.du(u, v);
  const Eigen::Vector3d fv = chart.dv(u, v);
  const Eigen::Vector3d cross = fu.cross(fv);
  const double cross_norm = cross.norm();
  if (cross_norm < kDegenerateTol) {
    throw DegenerateChartError(chart.name() + ": degenerate tangent basis at (u,v)=(" +
                               std::to_string(u) + "," + std::to_string(v) + ")");
  }

  const Eigen::Vector3d fuu = chart.duu(u, v);
  const Eigen::Vector3d fuv = chart.duv(u, v);
  const Eigen::Vector3d fvv = chart.dvv(u, v);

  SurfaceGeometry g;
  g.norm_u = fu.norm();
  g.norm_v = fv.norm();
  g.normal = cross / cross_norm;

  const double inv_eu = 1.0 / (g.norm_u * g.norm_u);
  const double inv_ev = 1.0 / (g.norm_v * g.norm_v);
  g.gamma1_11 = fu.dot(fuu) * inv_eu;
  g.gamma1_12 = fu.dot(fuv) * inv_eu;
  g.gamma1_22 = fu.dot(fvv) * inv_eu;
  g.gamma2_11 = fv.dot(fuu) * inv_ev;
  g.gamma2_12 = fv.dot(fuv) * inv_ev;
  g.gamma2_22 = fv.dot(fvv) * inv_ev;

  g.sff_uu = g.normal.dot(fuu);
  g.sff_uv = g.normal.dot(fuv);
  g.sff_vv = g.normal.dot(fvv);
  return g;
}

double max_orthogonality_defect(const Chart& chart, int grid) {
  const Domain& dom = chart.domain();
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      // interior grid; avoids boundary singularities and the exact midlines
      const double u = dom.u_min + (dom.u_max - dom.u_min) * (i + 0.5) / grid;
      const double v = dom.v_min + (dom.v_max - dom.v_min) * (j + 0.5) / grid;
      const Eigen::Vector3d fu = chart.du(u, v);
      const Eigen::Vector3d fv = chart.dv(u, v);
      const double scale = fu.norm() * fv.norm();
      if (scale < kDegenerateTol) continue;
      worst = std::max(worst, std::abs(fu.dot(fv)) / scale);
    }
  }
  return worst;
}

}  // namespace geocontact
