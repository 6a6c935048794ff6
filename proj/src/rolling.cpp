// geocontact - rolling constraint evolution and contact-curve diagnostics

#include "geocontact/rolling.hpp"

#include <cmath>

#include "geocontact/errors.hpp"

namespace geocontact {

double frame_spin_rate(const SurfaceGeometry& g, double du, double dv) {
  return (g.norm_v / g.norm_u) * (g.gamma2_11 * du + g.gamma2_12 * dv);
}

RollingEvolution rolling_rates(const ContactState& s, const Chart& chart1, const Chart& chart2) {
  const SurfaceGeometry g1 = geometry_at(chart1, s.u1, s.v1);
  const SurfaceGeometry g2 = geometry_at(chart2, s.u2, s.v2);
  const double c = std::cos(s.psi), sn = std::sin(s.psi);
  const double a = g1.norm_u * s.du1;
  const double b = g1.norm_v * s.dv1;

  RollingEvolution out;
  out.du2 = (a * c - b * sn) / g2.norm_u;
  out.dv2 = (-a * sn - b * c) / g2.norm_v;
  out.dpsi = frame_spin_rate(g1, s.du1, s.dv1) + frame_spin_rate(g2, out.du2, out.dv2);
  return out;
}

void rolling_rates_body1(const ContactState& s, const Chart& chart1, const Chart& chart2,
                         double& du1, double& dv1) {
  const SurfaceGeometry g1 = geometry_at(chart1, s.u1, s.v1);
  const SurfaceGeometry g2 = geometry_at(chart2, s.u2, s.v2);
  const double c = std::cos(s.psi), sn = std::sin(s.psi);
  const double a = g2.norm_u * s.du2;
  const double b = g2.norm_v * s.dv2;
  du1 = (a * c - b * sn) / g1.norm_u;
  dv1 = (-a * sn - b * c) / g1.norm_v;
}

Eigen::Vector2d rolling_angular_velocity(const ContactState& s, const Chart& chart1,
                                         const Chart& chart2) {
  const SurfaceGeometry g1 = geometry_at(chart1, s.u1, s.v1);
  const SurfaceGeometry g2 = geometry_at(chart2, s.u2, s.v2);

  auto curvature_form = [](const SurfaceGeometry& g) {
    Eigen::Matrix2d k;
    k << -g.sff_uu / (g.norm_u * g.norm_u), -g.sff_uv / (g.norm_u * g.norm_v),
        -g.sff_uv / (g.norm_u * g.norm_v), -g.sff_vv / (g.norm_v * g.norm_v);
    return k;
  };

  const double c = std::cos(s.psi), sn = std::sin(s.psi);
  Eigen::Matrix2d rot;
  rot << c, -sn, -sn, -c;  // tangential block of the contact frame change; involutory

  const Eigen::Matrix2d k_sum = curvature_form(g1) + rot * curvature_form(g2) * rot;
  const Eigen::Vector2d w1(g1.norm_u * s.du1, g1.norm_v * s.dv1);
  const Eigen::Vector2d h = k_sum * w1;             // (-w_y, w_x) in the body-1 frame
  return rot * Eigen::Vector2d(h.y(), -h.x());      // body-2 frame components
}

double GeodesicResidual::max_abs() const { return std::max(std::abs(rho_u), std::abs(rho_v)); }

std::vector<GeodesicResidual> geodesic_residuals(const Chart& chart,
                                                 const std::vector<CurveSample>& samples,
                                                 const std::vector<SigmaProfile::Value>& sigma,
                                                 double dt) {
  if (samples.size() < 5) {
    throw InvalidParameterError("geodesic residuals need at least 5 samples");
  }
  if (sigma.size() != samples.size()) {
    throw InvalidParameterError("sigma samples must match curve samples");
  }
  // five-point central differences of the stored rates; fourth order, so the
  // check stays well below the trajectory's own discretization error
  auto second = [&](auto pick, std::size_t i) {
    return (-pick(samples[i + 2]) + 8.0 * pick(samples[i + 1]) - 8.0 * pick(samples[i - 1]) +
            pick(samples[i - 2])) /
           (12.0 * dt);
  };
  std::vector<GeodesicResidual> out;
  out.reserve(samples.size() - 4);
  for (std::size_t i = 2; i + 2 < samples.size(); ++i) {
    const CurveSample& m = samples[i];
    const double ddu = second([](const CurveSample& c) { return c.du; }, i);
    const double ddv = second([](const CurveSample& c) { return c.dv; }, i);
    const SurfaceGeometry g = geometry_at(chart, m.u, m.v);
    const double s = sigma[i].sigma, sd = sigma[i].sigma_dot;
    const double inv_s2 = 1.0 / (s * s);
    GeodesicResidual r;
    r.rho_u = inv_s2 * (ddu - (sd / s) * m.du + g.gamma1_11 * m.du * m.du +
                        2.0 * g.gamma1_12 * m.du * m.dv + g.gamma1_22 * m.dv * m.dv);
    r.rho_v = inv_s2 * (ddv - (sd / s) * m.dv + g.gamma2_11 * m.du * m.du +
                        2.0 * g.gamma2_12 * m.du * m.dv + g.gamma2_22 * m.dv * m.dv);
    out.push_back(r);
  }
  return out;
}

double max_geodesic_residual(const Chart& chart, const std::vector<CurveSample>& samples,
                             const std::vector<SigmaProfile::Value>& sigma, double dt) {
  double worst = 0.0;
  for (const GeodesicResidual& r : geodesic_residuals(chart, samples, sigma, dt)) {
    worst = std::max(worst, r.max_abs());
  }
  return worst;
}

std::vector<double> geodesic_curvature(const Chart& chart, const std::vector<CurveSample>& samples,
                                       double dt) {
  if (samples.size() < 3) {
    throw InvalidParameterError("geodesic curvature needs at least 3 samples");
  }
  std::vector<double> out;
  out.reserve(samples.size() - 2);
  for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
    const CurveSample& m = samples[i];
    const Eigen::Vector3d fu = chart.du(m.u, m.v);
    const Eigen::Vector3d fv = chart.dv(m.u, m.v);
    const Eigen::Vector3d fuu = chart.duu(m.u, m.v);
    const Eigen::Vector3d fuv = chart.duv(m.u, m.v);
    const Eigen::Vector3d fvv = chart.dvv(m.u, m.v);

    const Eigen::Vector3d vel = fu * m.du + fv * m.dv;
    const double speed2 = vel.squaredNorm();
    if (speed2 < 1e-20) {
      throw InvalidParameterError("geodesic curvature undefined at zero-speed sample");
    }
    const double ddu = (samples[i + 1].du - samples[i - 1].du) / (2.0 * dt);
    const double ddv = (samples[i + 1].dv - samples[i - 1].dv) / (2.0 * dt);
    const Eigen::Vector3d acc = fuu * m.du * m.du + 2.0 * fuv * m.du * m.dv + fvv * m.dv * m.dv +
                                fu * ddu + fv * ddv;
    const Eigen::Vector3d normal = fu.cross(fv).normalized();
    const Eigen::Vector3d side = normal.cross(vel / std::sqrt(speed2));
    out.push_back(std::abs(acc.dot(side)) / speed2);
  }
  return out;
}

double max_plane_distance_through_origin(const std::vector<Eigen::Vector3d>& points) {
  if (points.size() < 3) {
    throw InvalidParameterError("plane fit needs at least 3 points");
  }
  Eigen::MatrixXd m(points.size(), 3);
  for (std::size_t i = 0; i < points.size(); ++i) m.row(i) = points[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  const Eigen::Vector3d normal = svd.matrixV().col(2);
  return (m * normal).cwiseAbs().maxCoeff();
}

}  // namespace geocontact
