#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geocontact/dynamics.hpp"
#include "geocontact/kinematics.hpp"

namespace geocontact {

struct BodySpec {
  std::string chart;            // sphere | ellipsoid | cylinder
  std::vector<double> params;   // radius, or r1 r2 r3
  double mass = 0.0;            // required in dynamic mode
};

struct ContactSpec {
  double finger_u = 0.0, finger_v = 0.0;
  double object_u = 0.0, object_v = 0.0;
  double psi = 0.0;
  double dir_u = 0.0, dir_v = 0.0;        // finger path direction d(u,v)/ds
  double slip_du2 = 0.0, slip_dv2 = 0.0;  // initial object-rate offsets
};

struct DisturbanceSpec {
  int contact = 1;       // 1-based pair index
  std::string type;      // acceleration | rate
  double t_start = 0.0, t_end = 0.0;
  double du = 0.0, dv = 0.0;
};

// Declarative description of one run: bodies, contacts, speed profile,
// feedback gain, disturbances, integrator settings and outputs.
struct Scenario {
  std::string name;
  std::string mode;  // kinematic | rolling-corollary | dynamic
  BodySpec finger, object;
  std::vector<ContactSpec> contacts;
  std::vector<double> sigma_coeffs{0.0};
  double eta = 0.0;
  std::vector<DisturbanceSpec> disturbances;
  double step = 1e-4;
  double horizon = 0.0;
  std::string log_base = "run";
  double rejection_threshold = 1e-3;

  // rolling-corollary drive selection
  std::string drive = "geodesic";  // geodesic | minimum-jerk
  Eigen::Vector3d spin_axis = Eigen::Vector3d::Zero();
  std::vector<double> spin_rate_coeffs;  // polynomial dp/dt

  // dynamic mode contact parameters; masses live on the body descriptors
  double stiffness = 10000.0, damping = 1000.0, mu = 0.5, viscous_gain = 1000.0;
  double normal_force = 1.0;
};

Scenario parse_scenario(const std::string& text, const std::string& name);

// Loads from a file path, or from the embedded corpus when the argument names
// a builtin. The result is validated.
Scenario load_scenario(const std::string& path_or_builtin);

// Semantic checks: domains, profile zeros over the horizon, window ordering,
// chart orthogonality on a 20x20 grid, mode-specific requirements. Throws
// ValidationError naming the offending field.
void validate_scenario(const Scenario& s);

struct PairMetrics {
  double max_vrel = 0.0;                   // whole run
  double max_vrel_disturbed = 0.0;         // while a window was active
  std::optional<double> rejection_time;    // after the last window end; empty if never settles
  std::optional<double> max_geodesic_residual;  // corollary modes
  std::optional<double> max_saturation_defect;  // dynamic: max ||f_t| - mu f_n| while saturated
  long contraction_warnings = 0;
};

struct RunResult {
  Scenario scenario;
  std::vector<PairRunResult> kinematic;               // kinematic & corollary modes
  DynamicsRunResult dynamics;                         // dynamic mode
  std::vector<PairMetrics> metrics;
};

// Executes a validated scenario. Does not touch the filesystem.
RunResult run_scenario(const Scenario& s);

// Writes one CSV per pair plus a JSON summary into out_dir; returns the file
// paths (summary last). Identical scenarios produce byte-identical files.
std::vector<std::string> write_outputs(const RunResult& result, const std::string& out_dir,
                                       std::optional<long> seed = std::nullopt);

std::string summary_json(const RunResult& result, std::optional<long> seed = std::nullopt);

}  // namespace geocontact
