// Acceptance suite: runs every headline requirement at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "geocontact/contact.hpp"
#include "geocontact/geodesic.hpp"
#include "geocontact/integrate.hpp"
#include "geocontact/kinematics.hpp"
#include "geocontact/rolling.hpp"
#include "geocontact/scenario.hpp"

using namespace geocontact;

namespace {

int failures = 0;

void report(const char* name, bool pass, const std::string& detail) {
  std::printf("%-4s %-38s %s\n", pass ? "PASS" : "FAIL", name, detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::mt19937 gen(20240811u);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

ContactState random_state(bool ellipsoid_object) {
  ContactState s;
  s.u1 = uniform(0.4, 2.7);
  s.v1 = uniform(-3.0, 3.0);
  s.u2 = ellipsoid_object ? uniform(0.5, 2.6) : uniform(0.4, 2.7);
  s.v2 = ellipsoid_object ? uniform(-2.6, -0.5) : uniform(-3.0, 3.0);
  s.psi = uniform(-3.1, 3.1);
  s.du1 = uniform(-3.0, 3.0);
  s.dv1 = uniform(-3.0, 3.0);
  s.du2 = uniform(-3.0, 3.0);
  s.dv2 = uniform(-3.0, 3.0);
  return s;
}

// --- criterion 1: proportionality identity on random states ---------------

void criterion_identity() {
  const auto t0 = std::chrono::steady_clock::now();
  const ChartPtr finger = sphere_chart(0.04);
  const ChartPtr sphere_obj = sphere_chart(0.1);
  const ChartPtr ellipsoid_obj = ellipsoid_chart(0.3, 0.2, 0.1);
  const SigmaProfile sigma{1.0, 0.2, -0.02};

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const bool ell = i % 2 == 1;
    const ContactState s = random_state(ell);
    const double t = uniform(0.0, 2.0);
    const Chart& obj = ell ? *ellipsoid_obj : *sphere_obj;
    worst = std::max(worst, proportionality_residual(s, sigma, t, *finger, obj));
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "max residual %.3e (tol 1e-8), %.2f s (limit 5 s)", worst,
                elapsed);
  report("identity a_rel=(sd/s)v_rel", worst < 1e-8 && elapsed < 5.0, buf);
}

// --- criterion 2: second-order rolling under dual geodesics ---------------

double dual_geodesic_max_vrel(const ChartPtr& c1, const ChartPtr& c2, const PairInitial& init,
                              const SigmaProfile& sigma) {
  PairConfig cfg;
  cfg.body1 = c1;
  cfg.body2 = c2;
  cfg.mode = PairMode::DualGeodesic;
  cfg.sigma = sigma;
  const PairRunResult run = run_pair(cfg, init, 0.0, 0.2, 1e-4);
  double worst = 0.0;
  for (const PairSample& p : run.samples) {
    worst = std::max(worst, std::max(std::abs(p.v_rel_x), std::abs(p.v_rel_y)));
  }
  return worst;
}

void criterion_second_order_rolling() {
  const auto t0 = std::chrono::steady_clock::now();

  PairInitial init;
  init.u1 = M_PI / 2.0;
  init.v1 = 0.0;
  init.u2 = M_PI / 3.0;
  init.v2 = 0.4;
  init.psi = 0.3;
  init.du1 = 0.6 / 0.04;
  init.dv1 = 0.8 / 0.04;
  const double speed = std::hypot(0.04 * init.du1, 0.04 * std::sin(init.u1) * init.dv1);
  init.du1 *= 1.0 / speed;
  init.dv1 *= 1.0 / speed;
  const double w1 = dual_geodesic_max_vrel(sphere_chart(0.04), sphere_chart(0.1), init,
                                           SigmaProfile{1.0, 0.2, -0.02});

  PairInitial init2 = init;
  init2.u2 = 2.0 * M_PI / 3.0;
  init2.v2 = -1.2;
  init2.du1 *= 0.1;  // sigma(0) = 0.1 below
  init2.dv1 *= 0.1;
  const double w2 = dual_geodesic_max_vrel(sphere_chart(0.04), ellipsoid_chart(0.3, 0.2, 0.1),
                                           init2, SigmaProfile{0.1, 0.2, -0.02});

  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max |v_rel| sphere %.3e, ellipsoid %.3e (tol 1e-6), %.2f s (limit 10 s)", w1, w2,
                elapsed);
  report("second-order rolling", w1 < 1e-6 && w2 < 1e-6 && elapsed < 10.0, buf);
}

// --- criteria 3/4: disturbance rejection scenarios -------------------------

double worst_rejection(const std::string& builtin) {
  const Scenario s = load_scenario(builtin);
  const RunResult r = run_scenario(s);
  double worst = 0.0;
  for (const PairMetrics& m : r.metrics) {
    if (!m.rejection_time) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, *m.rejection_time);
  }
  return worst;
}

void criterion_sphere_rejection() {
  const double slip_case = worst_rejection("sphere_eta100");
  const double accel_case = worst_rejection("sphere_eta100_accel");
  const double limit = 0.04 * 1.25;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "rejection %.4f s / %.4f s (limit %.3f s)", slip_case,
                accel_case, limit);
  report("sphere disturbance rejection", slip_case <= limit && accel_case <= limit, buf);
}

void criterion_ellipsoid_rejection() {
  const double fast_case = worst_rejection("ellipsoid_eta100");
  const double slow_case = worst_rejection("ellipsoid_eta100_slow");
  const double limit = 0.015 * 1.25;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "rejection %.4f s (limit %.4f s), slow case %.4f s (settles)",
                fast_case, limit, slow_case);
  report("ellipsoid disturbance rejection",
         fast_case <= limit && std::isfinite(slow_case), buf);
}

// --- criterion 5: corollary -------------------------------------------------

double scenario_curve_planarity(const std::string& builtin, bool finger_side) {
  const Scenario s = load_scenario(builtin);
  const RunResult r = run_scenario(s);
  const ChartPtr chart = finger_side ? sphere_chart(s.finger.params[0])
                                     : sphere_chart(s.object.params[0]);
  std::vector<Eigen::Vector3d> pts;
  for (const PairSample& p : r.kinematic[0].samples) {
    pts.push_back(finger_side ? chart->point(p.state.u1, p.state.v1)
                              : chart->point(p.state.u2, p.state.v2));
  }
  return max_plane_distance_through_origin(pts);
}

void criterion_corollary() {
  const Scenario s = load_scenario("corollary_sphere");
  const RunResult r = run_scenario(s);
  const double residual = r.metrics[0].max_geodesic_residual.value_or(1.0);

  const double minjerk_plane = scenario_curve_planarity("corollary_minjerk", /*finger=*/true);
  const double cylinder_plane = scenario_curve_planarity("corollary_cylinder", /*finger=*/false);

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "residual %.3e (tol 1e-5), planarity minjerk %.3e, cylinder %.3e (tol 1e-5 m)",
                residual, minjerk_plane, cylinder_plane);
  report("rolling corollary", residual < 1e-5 && minjerk_plane < 1e-5 && cylinder_plane < 1e-5,
         buf);
}

// --- criterion 6: Christoffel correctness ----------------------------------

void criterion_christoffel() {
  auto eval = [](double u, double v) {
    return Eigen::Vector3d(0.1 * std::sin(u) * std::cos(v), 0.1 * std::sin(u) * std::sin(v),
                           0.1 * std::cos(u));
  };
  const Domain base{0.0, M_PI, -M_PI, M_PI, true, false, false, true};
  const ChartPtr fd = finite_difference_chart(eval, base, 1e-4);

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double u = 0.3 + (M_PI - 0.6) * (i + 0.5) / 20.0;
      const double v = -M_PI + 2.0 * M_PI * (j + 0.5) / 20.0;
      const SurfaceGeometry g = geometry_at(*fd, u, v);
      worst = std::max(worst, std::abs(g.gamma1_22 + std::sin(u) * std::cos(u)));
      worst = std::max(worst, std::abs(g.gamma2_12 - std::cos(u) / std::sin(u)));
      worst = std::max(worst, std::abs(g.gamma1_11));
      worst = std::max(worst, std::abs(g.gamma1_12));
      worst = std::max(worst, std::abs(g.gamma2_11));
      worst = std::max(worst, std::abs(g.gamma2_22));
    }
  }

  // cylinder: the flat metric makes every analytic symbol exactly zero; the
  // finite-difference route sits on the second-difference roundoff floor
  auto cyl_eval = [](double u, double v) {
    return Eigen::Vector3d(0.1 * std::cos(u), 0.1 * std::sin(u), v);
  };
  const ChartPtr cyl = cylinder_chart(0.1);
  const ChartPtr cyl_fd = finite_difference_chart(cyl_eval, cyl->domain(), 1e-4);
  double cyl_exact = 0.0, cyl_fd_worst = 0.0;
  for (double u = -3.0; u < 3.0; u += 0.37) {
    for (double v = -1.0; v < 1.0; v += 0.21) {
      const SurfaceGeometry ga = geometry_at(*cyl, u, v);
      cyl_exact = std::max({cyl_exact, std::abs(ga.gamma1_11), std::abs(ga.gamma1_12),
                            std::abs(ga.gamma1_22), std::abs(ga.gamma2_11), std::abs(ga.gamma2_12),
                            std::abs(ga.gamma2_22)});
      const SurfaceGeometry gn = geometry_at(*cyl_fd, u, v);
      cyl_fd_worst = std::max({cyl_fd_worst, std::abs(gn.gamma1_11), std::abs(gn.gamma1_12),
                               std::abs(gn.gamma1_22), std::abs(gn.gamma2_11),
                               std::abs(gn.gamma2_12), std::abs(gn.gamma2_22)});
    }
  }

  char buf[180];
  std::snprintf(buf, sizeof(buf),
                "sphere max err %.3e (tol 1e-6), cylinder exact %.1e (tol 0) fd %.3e (tol 1e-6)",
                worst, cyl_exact, cyl_fd_worst);
  report("christoffel correctness", worst < 1e-6 && cyl_exact == 0.0 && cyl_fd_worst < 1e-6, buf);
}

// --- criterion 7: geodesic-curvature rolling diagnostic ---------------------

void criterion_curvature_diagnostic() {
  // a geodesic rolling pair and a non-geodesic (latitude-driven) rolling pair
  const ChartPtr c1 = sphere_chart(0.04);
  const ChartPtr c2 = sphere_chart(0.1);

  PairConfig cfg;
  cfg.body1 = c1;
  cfg.body2 = c2;
  cfg.mode = PairMode::RollingCorollary;
  cfg.sigma = SigmaProfile{0.2};
  PairInitial init;
  init.u1 = M_PI / 2.0;
  init.v1 = 0.0;
  init.u2 = M_PI / 3.0;
  init.v2 = 0.4;
  init.psi = 0.3;
  init.du1 = 0.2 * 0.6 / 0.04 / std::hypot(0.6, 0.8);
  init.dv1 = 0.2 * 0.8 / 0.04 / std::hypot(0.6, 0.8);
  const PairRunResult run = run_pair(cfg, init, 0.0, 1.0, 1e-4);

  std::vector<CurveSample> g1, g2;
  for (const PairSample& p : run.samples) {
    g1.push_back({p.state.u1, p.state.v1, p.state.du1, p.state.dv1});
    g2.push_back({p.state.u2, p.state.v2, p.state.du2, p.state.dv2});
  }
  const auto k1 = geodesic_curvature(*c1, g1, 1e-4);
  const auto k2 = geodesic_curvature(*c2, g2, 1e-4);
  double worst_geo = 0.0;
  for (std::size_t i = 0; i < k1.size(); ++i) worst_geo = std::max(worst_geo, std::abs(k1[i] - k2[i]));

  // latitude drive: body-1 rates prescribed, body-2 and psi slaved (RK4)
  OdeRhs rhs = [&](double, const Eigen::VectorXd& y, Eigen::VectorXd& d) {
    ContactState s;
    s.u1 = 1.1;
    s.v1 = y[0];
    s.u2 = y[1];
    s.v2 = y[2];
    s.psi = y[3];
    s.du1 = 0.0;
    s.dv1 = 3.0;
    const RollingEvolution r = rolling_rates(s, *c1, *c2);
    d << s.dv1, r.du2, r.dv2, r.dpsi;
  };
  Eigen::VectorXd y0(4);
  y0 << 0.0, 0.9, 0.3, 0.7;
  const Trajectory traj = rk4_integrate(rhs, y0, 0.0, 0.5, 1e-4);
  std::vector<CurveSample> l1, l2;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Eigen::VectorXd& y = traj.states[i];
    ContactState s;
    s.u1 = 1.1;
    s.v1 = y[0];
    s.u2 = y[1];
    s.v2 = y[2];
    s.psi = y[3];
    s.du1 = 0.0;
    s.dv1 = 3.0;
    const RollingEvolution r = rolling_rates(s, *c1, *c2);
    l1.push_back({s.u1, s.v1, s.du1, s.dv1});
    l2.push_back({s.u2, s.v2, r.du2, r.dv2});
  }
  const auto lk1 = geodesic_curvature(*c1, l1, 1e-4);
  const auto lk2 = geodesic_curvature(*c2, l2, 1e-4);
  double worst_lat = 0.0;
  for (std::size_t i = 0; i < lk1.size(); ++i) {
    worst_lat = std::max(worst_lat, std::abs(lk1[i] - lk2[i]));
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf), "max |k1-k2| geodesic %.3e, latitude %.3e (tol 1e-5)", worst_geo,
                worst_lat);
  report("equal geodesic curvature", worst_geo < 1e-5 && worst_lat < 1e-5, buf);
}

// --- criterion 8: dynamics --------------------------------------------------

void criterion_dynamics() {
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario s = load_scenario("dynamic_case1");
  const RunResult r = run_scenario(s);

  bool cone_ok = true, saturation_seen = false;
  double saturation_err = 0.0;
  for (const auto& pair : r.dynamics.contact_samples) {
    for (const DynamicContactSample& d : pair) {
      const double ft = std::hypot(d.force.tangential_x, d.force.tangential_y);
      if (ft > s.mu * d.force.normal_force + 1e-9) cone_ok = false;
      if (d.force.saturated) {
        saturation_seen = true;
        saturation_err = std::max(saturation_err, std::abs(ft - 0.5));
      }
    }
  }
  const double rejection = r.metrics[0].rejection_time.value_or(1e9);
  const double elapsed = seconds_since(t0);

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "saturation err %.3e N (tol 0.01), rejection %.3f s (limit %.2f), cone %s, %.1f s",
                saturation_err, rejection, 0.2 * 1.5, cone_ok ? "ok" : "violated", elapsed);
  report("penalty-contact dynamics",
         saturation_seen && saturation_err <= 0.01 && rejection <= 0.2 * 1.5 && cone_ok &&
             elapsed < 120.0,
         buf);
}

// --- criterion 9: integrator convergence ------------------------------------

void criterion_convergence() {
  const ChartPtr s = sphere_chart(0.1);
  const SigmaProfile sigma{1.0};
  OdeRhs rhs = [&](double t, const Eigen::VectorXd& y, Eigen::VectorXd& d) {
    const auto sv = sigma.eval(t);
    const GeodesicRates r = geodesic_rhs(*s, y[0], y[1], y[2], y[3], sv.sigma, sv.sigma_dot);
    d << y[2], y[3], r.ddu, r.ddv;
  };
  Eigen::VectorXd y0(4);
  y0 << 1.1, 0.3, 6.0, 8.0 / std::sin(1.1);

  auto final_state = [&](double h) { return rk4_integrate(rhs, y0, 0.0, 0.2, h).states.back(); };
  const double coarse = (final_state(2e-3) - final_state(1e-3)).norm();
  const double fine = (final_state(1e-3) - final_state(5e-4)).norm();
  const double ratio = coarse / fine;

  char buf[120];
  std::snprintf(buf, sizeof(buf), "error ratio %.2f (expect 16 +- 3)", ratio);
  report("order-4 self convergence", ratio > 13.0 && ratio < 19.0, buf);
}

}  // namespace

int main() {
  criterion_identity();
  criterion_second_order_rolling();
  criterion_sphere_rejection();
  criterion_ellipsoid_rejection();
  criterion_corollary();
  criterion_christoffel();
  criterion_curvature_diagnostic();
  criterion_dynamics();
  criterion_convergence();

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
