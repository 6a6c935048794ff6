#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "geocontact/chart.hpp"
#include "geocontact/contact.hpp"
#include "geocontact/geodesic.hpp"
#include "geocontact/integrate.hpp"
#include "geocontact/sigma.hpp"

namespace geocontact {

// Time window during which a disturbance offset is applied.
//  - AccelerationOffset: added to the body-1 coordinate accelerations.
//  - RateOffset: added to the effective body-2 coordinate rates (they enter
//    the state advance, the slip feedback and the logged relative velocity).
struct DisturbanceWindow {
  enum class Kind { AccelerationOffset, RateOffset };
  Kind kind = Kind::AccelerationOffset;
  double t_start = 0.0, t_end = 0.0;
  double du = 0.0, dv = 0.0;

  bool active(double t) const { return t >= t_start && t < t_end; }
};

enum class PairMode {
  ModifiedGeodesic,      // body 1 geodesic, body 2 geodesic + slip feedback
  DualGeodesic,          // both bodies on unmodified geodesics
  RollingCorollary,      // body 1 geodesic, body 2 slaved through rolling
  PrescribedObjectSpin,  // body 2 driven by a given rotation, body 1 slaved
};

struct PairConfig {
  ChartPtr body1;  // fingertip
  ChartPtr body2;  // object
  PairMode mode = PairMode::ModifiedGeodesic;
  SigmaProfile sigma;
  double eta = 0.0;
  std::vector<DisturbanceWindow> disturbances;

  // PrescribedObjectSpin only: relative rotation omega(t) = spin_rate(t) * spin_axis,
  // converted to object-curve rates through the rolling map of a sphere pair
  // with curvature sum 1/r1 + 1/r2.
  Eigen::Vector3d spin_axis = Eigen::Vector3d::UnitZ();
  SigmaProfile spin_rate;
  double spin_curvature_sum = 0.0;
};

struct PairInitial {
  double u1 = 0.0, v1 = 0.0;
  double u2 = 0.0, v2 = 0.0;
  double psi = 0.0;
  double du1 = 0.0, dv1 = 0.0;  // body-1 rates; body-2 starts rolling-consistent
  double slip_du2 = 0.0, slip_dv2 = 0.0;  // initial body-2 rate offsets (slip injection)
};

struct PairSample {
  double t = 0.0;
  ContactState state;  // effective rates, spin rate included
  double v_rel_x = 0.0, v_rel_y = 0.0;
  double sigma = 0.0, sigma_dot = 0.0;
  double contraction_margin = 0.0;  // sigma_dot/sigma - eta sigma^2 (modified mode)
};

struct RunDiagnostics {
  long contraction_warnings = 0;  // steps where the margin was non-negative
  std::optional<double> first_warning_time;
};

struct PairRunResult {
  std::vector<PairSample> samples;
  RunDiagnostics diagnostics;
};

// One finger-object pair as a first-order ODE system over a packed state
// vector. The packing depends on the mode; body-2 rates are states only in
// the geodesic modes and algebraic otherwise.
class KinematicPair {
 public:
  explicit KinematicPair(PairConfig config);

  int state_size() const;
  Eigen::VectorXd initial_state(const PairInitial& init) const;
  void rhs(double t, const Eigen::Ref<const Eigen::VectorXd>& y,
           Eigen::Ref<Eigen::VectorXd> dydt) const;
  // Wraps periodic coordinates and the spin angle into their principal ranges.
  void wrap_state(Eigen::Ref<Eigen::VectorXd> y) const;
  PairSample sample(double t, const Eigen::Ref<const Eigen::VectorXd>& y) const;

  const PairConfig& config() const { return cfg_; }

 private:
  struct Rates {
    double du1, dv1, du2, dv2, dpsi;
  };
  Rates effective_rates(double t, const Eigen::Ref<const Eigen::VectorXd>& y,
                        const SurfaceGeometry& g1, const SurfaceGeometry& g2) const;

  PairConfig cfg_;
};

// Integrates a single pair and post-processes every stored step into a sample.
PairRunResult run_pair(const PairConfig& config, const PairInitial& init, double t0, double t1,
                       double step);

}  // namespace geocontact
