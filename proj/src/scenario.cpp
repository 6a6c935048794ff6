// geocontact - scenario parsing, validation, execution and summary metrics

#include "geocontact/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geocontact/builtin_scenarios.hpp"
#include "geocontact/rolling.hpp"
#include "geocontact/trajectory_log.hpp"

namespace geocontact {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& text, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + text + "'");
  }
}

std::vector<double> parse_doubles(const std::string& text, int line) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) out.push_back(parse_double(tok, line));
  if (out.empty()) throw ParseError(line, "expected one or more numbers");
  return out;
}

struct KeyValue {
  std::string key, value;
  int line;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  Scenario s;
  s.name = name;

  std::string section;
  int body_count = 0;
  std::string body_role;
  ContactSpec* contact = nullptr;
  DisturbanceSpec* disturbance = nullptr;
  bool have_object = false, have_finger = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section == "body") {
        ++body_count;
        body_role.clear();
        if (body_count > 2) throw ParseError(line_no, "expected exactly two [body] sections");
      } else if (section == "contact") {
        s.contacts.emplace_back();
        contact = &s.contacts.back();
      } else if (section == "disturbance") {
        s.disturbances.emplace_back();
        disturbance = &s.disturbances.back();
      } else if (section != "sigma" && section != "control" && section != "integrator" &&
                 section != "output" && section != "dynamics" && section != "drive") {
        throw ParseError(line_no, "unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) throw ParseError(line_no, "expected key = value");

    auto number = [&]() { return parse_double(value, line_no); };

    if (section.empty()) {
      if (key == "mode") {
        s.mode = value;
      } else {
        throw ParseError(line_no, "unknown top-level key '" + key + "'");
      }
    } else if (section == "body") {
      BodySpec* body = nullptr;
      if (key == "role") {
        body_role = value;
        if (value == "finger") {
          have_finger = true;
        } else if (value == "object") {
          have_object = true;
        } else {
          throw ParseError(line_no, "body role must be finger or object");
        }
        continue;
      }
      if (body_role.empty()) throw ParseError(line_no, "body section must set role first");
      body = body_role == "finger" ? &s.finger : &s.object;
      if (key == "chart") {
        body->chart = value;
      } else if (key == "radius") {
        body->params = {number()};
      } else if (key == "radii") {
        body->params = parse_doubles(value, line_no);
      } else if (key == "mass") {
        body->mass = number();
      } else {
        throw ParseError(line_no, "unknown body key '" + key + "'");
      }
    } else if (section == "contact") {
      if (key == "finger_u") contact->finger_u = number();
      else if (key == "finger_v") contact->finger_v = number();
      else if (key == "object_u") contact->object_u = number();
      else if (key == "object_v") contact->object_v = number();
      else if (key == "psi") contact->psi = number();
      else if (key == "dir_u") contact->dir_u = number();
      else if (key == "dir_v") contact->dir_v = number();
      else if (key == "slip_du2") contact->slip_du2 = number();
      else if (key == "slip_dv2") contact->slip_dv2 = number();
      else throw ParseError(line_no, "unknown contact key '" + key + "'");
    } else if (section == "sigma") {
      if (key == "coeffs") s.sigma_coeffs = parse_doubles(value, line_no);
      else throw ParseError(line_no, "unknown sigma key '" + key + "'");
    } else if (section == "control") {
      if (key == "eta") s.eta = number();
      else throw ParseError(line_no, "unknown control key '" + key + "'");
    } else if (section == "drive") {
      if (key == "kind") s.drive = value;
      else if (key == "spin_axis") {
        const auto v3 = parse_doubles(value, line_no);
        if (v3.size() != 3) throw ParseError(line_no, "spin_axis needs three numbers");
        s.spin_axis = Eigen::Vector3d(v3[0], v3[1], v3[2]);
      } else if (key == "spin_rate_coeffs") {
        s.spin_rate_coeffs = parse_doubles(value, line_no);
      } else {
        throw ParseError(line_no, "unknown drive key '" + key + "'");
      }
    } else if (section == "disturbance") {
      if (key == "contact") disturbance->contact = static_cast<int>(number());
      else if (key == "type") disturbance->type = value;
      else if (key == "t_start") disturbance->t_start = number();
      else if (key == "t_end") disturbance->t_end = number();
      else if (key == "du") disturbance->du = number();
      else if (key == "dv") disturbance->dv = number();
      else throw ParseError(line_no, "unknown disturbance key '" + key + "'");
    } else if (section == "integrator") {
      if (key == "step") s.step = number();
      else if (key == "horizon") s.horizon = number();
      else throw ParseError(line_no, "unknown integrator key '" + key + "'");
    } else if (section == "output") {
      if (key == "log") s.log_base = value;
      else if (key == "rejection_threshold") s.rejection_threshold = number();
      else throw ParseError(line_no, "unknown output key '" + key + "'");
    } else if (section == "dynamics") {
      if (key == "stiffness") s.stiffness = number();
      else if (key == "damping") s.damping = number();
      else if (key == "mu") s.mu = number();
      else if (key == "viscous_gain") s.viscous_gain = number();
      else if (key == "normal_force") s.normal_force = number();
      else throw ParseError(line_no, "unknown dynamics key '" + key + "'");
    }
  }

  if (s.mode.empty()) throw ParseError(line_no, "missing top-level 'mode = ...'");
  if (!have_finger || !have_object) {
    throw ParseError(line_no, "scenario needs one finger body and one object body");
  }
  return s;
}

namespace {

ChartPtr build_chart(const BodySpec& body, const std::string& field) {
  try {
    if (body.chart == "sphere") {
      if (body.params.size() != 1) throw InvalidParameterError("sphere needs 'radius'");
      return sphere_chart(body.params[0]);
    }
    if (body.chart == "cylinder") {
      if (body.params.size() != 1) throw InvalidParameterError("cylinder needs 'radius'");
      return cylinder_chart(body.params[0]);
    }
    if (body.chart == "ellipsoid") {
      if (body.params.size() != 3) throw InvalidParameterError("ellipsoid needs 'radii = r1 r2 r3'");
      return ellipsoid_chart(body.params[0], body.params[1], body.params[2]);
    }
    throw InvalidParameterError("unknown chart kind '" + body.chart + "'");
  } catch (const InvalidParameterError& e) {
    throw ValidationError(field, e.what());
  }
}

PairMode pair_mode(const Scenario& s) {
  if (s.mode == "kinematic" || s.mode == "dynamic") return PairMode::ModifiedGeodesic;
  if (s.drive == "minimum-jerk") return PairMode::PrescribedObjectSpin;
  return PairMode::RollingCorollary;
}

PairConfig make_pair_config(const Scenario& s, const ChartPtr& finger, const ChartPtr& object,
                            int contact_index) {
  PairConfig cfg;
  cfg.body1 = finger;
  cfg.body2 = object;
  cfg.mode = pair_mode(s);
  cfg.sigma = SigmaProfile(s.sigma_coeffs);
  cfg.eta = s.eta;
  for (const DisturbanceSpec& d : s.disturbances) {
    if (d.contact != contact_index + 1) continue;
    DisturbanceWindow w;
    w.kind = d.type == "rate" ? DisturbanceWindow::Kind::RateOffset
                              : DisturbanceWindow::Kind::AccelerationOffset;
    w.t_start = d.t_start;
    w.t_end = d.t_end;
    w.du = d.du;
    w.dv = d.dv;
    cfg.disturbances.push_back(w);
  }
  if (cfg.mode == PairMode::PrescribedObjectSpin) {
    cfg.spin_axis = s.spin_axis;
    cfg.spin_rate = SigmaProfile(s.spin_rate_coeffs);
    cfg.spin_curvature_sum = 1.0 / s.finger.params[0] + 1.0 / s.object.params[0];
  }
  return cfg;
}

PairInitial make_pair_initial(const Scenario& s, const ContactSpec& c, const Chart& finger,
                              PairMode mode) {
  PairInitial init;
  init.u1 = c.finger_u;
  init.v1 = c.finger_v;
  init.u2 = c.object_u;
  init.v2 = c.object_v;
  init.psi = c.psi;
  init.slip_du2 = c.slip_du2;
  init.slip_dv2 = c.slip_dv2;
  if (mode != PairMode::PrescribedObjectSpin) {
    // Initial rates: the requested path direction normalized to unit surface
    // speed, traversed at sigma(0).
    const SurfaceGeometry g = geometry_at(finger, c.finger_u, c.finger_v);
    const double speed = std::hypot(g.norm_u * c.dir_u, g.norm_v * c.dir_v);
    const double sigma0 = SigmaProfile(s.sigma_coeffs).eval(0.0).sigma;
    init.du1 = sigma0 * c.dir_u / speed;
    init.dv1 = sigma0 * c.dir_v / speed;
  }
  return init;
}

}  // namespace

void validate_scenario(const Scenario& s) {
  if (s.mode != "kinematic" && s.mode != "rolling-corollary" && s.mode != "dynamic") {
    throw ValidationError("mode", "must be kinematic, rolling-corollary or dynamic");
  }
  const ChartPtr finger = build_chart(s.finger, "body[finger]");
  const ChartPtr object = build_chart(s.object, "body[object]");

  if (max_orthogonality_defect(*finger) > 1e-8) {
    throw ValidationError("body[finger].chart", "chart is not orthogonal");
  }
  if (max_orthogonality_defect(*object) > 1e-8) {
    throw ValidationError("body[object].chart", "chart is not orthogonal");
  }

  if (s.contacts.empty()) throw ValidationError("contact", "at least one contact is required");
  if (!(s.step > 0.0)) throw ValidationError("integrator.step", "must be positive");
  if (!(s.horizon > 0.0)) throw ValidationError("integrator.horizon", "must be positive");
  if (!(s.rejection_threshold > 0.0)) {
    throw ValidationError("output.rejection_threshold", "must be positive");
  }

  const PairMode mode = pair_mode(s);
  if (mode == PairMode::ModifiedGeodesic && !(s.eta > 0.0)) {
    throw ValidationError("control.eta", "must be positive in kinematic and dynamic modes");
  }

  for (std::size_t i = 0; i < s.contacts.size(); ++i) {
    const ContactSpec& c = s.contacts[i];
    const std::string tag = "contact[" + std::to_string(i + 1) + "]";
    double fu = c.finger_u, fv = c.finger_v, ou = c.object_u, ov = c.object_v;
    finger->domain().wrap(fu, fv);
    object->domain().wrap(ou, ov);
    if (!finger->domain().contains(fu, fv)) {
      throw ValidationError(tag + ".finger_u/v", "outside the finger chart domain");
    }
    if (!object->domain().contains(ou, ov)) {
      throw ValidationError(tag + ".object_u/v", "outside the object chart domain");
    }
    if (mode != PairMode::PrescribedObjectSpin && c.dir_u == 0.0 && c.dir_v == 0.0) {
      throw ValidationError(tag + ".dir_u/dir_v", "initial path direction must be nonzero");
    }
  }

  for (std::size_t i = 0; i < s.disturbances.size(); ++i) {
    const DisturbanceSpec& d = s.disturbances[i];
    const std::string tag = "disturbance[" + std::to_string(i + 1) + "]";
    if (d.type != "acceleration" && d.type != "rate") {
      throw ValidationError(tag + ".type", "must be acceleration or rate");
    }
    if (d.contact < 1 || d.contact > static_cast<int>(s.contacts.size())) {
      throw ValidationError(tag + ".contact", "contact index out of range");
    }
    if (!(d.t_end > d.t_start)) throw ValidationError(tag + ".t_end", "must exceed t_start");
    if (d.t_start < 0.0) throw ValidationError(tag + ".t_start", "must be non-negative");
  }

  if (mode == PairMode::PrescribedObjectSpin) {
    if (s.finger.chart != "sphere" || s.object.chart != "sphere") {
      throw ValidationError("drive.kind", "minimum-jerk drive requires sphere bodies");
    }
    if (s.spin_axis.norm() == 0.0) throw ValidationError("drive.spin_axis", "must be nonzero");
    if (s.spin_rate_coeffs.empty()) {
      throw ValidationError("drive.spin_rate_coeffs", "required for the minimum-jerk drive");
    }
  } else {
    // sigma must stay clear of zero at every step point of the horizon
    const SigmaProfile sigma(s.sigma_coeffs);
    const long n = std::max(1L, std::lround(s.horizon / s.step));
    for (long k = 0; k <= n; ++k) {
      const double t = s.horizon * static_cast<double>(k) / static_cast<double>(n);
      if (std::abs(sigma.value_unchecked(t)) < 1e-9) {
        throw ValidationError("sigma.coeffs", "sigma(t) crosses zero inside the horizon at t=" +
                                                  std::to_string(t));
      }
    }
  }

  if (s.mode == "dynamic") {
    if (s.finger.chart != "sphere" || s.object.chart != "sphere") {
      throw ValidationError("mode", "dynamic mode supports sphere bodies only");
    }
    if (!(s.stiffness > 0.0)) throw ValidationError("dynamics.stiffness", "must be positive");
    if (s.damping < 0.0) throw ValidationError("dynamics.damping", "must be non-negative");
    if (s.mu < 0.0) throw ValidationError("dynamics.mu", "must be non-negative");
    if (!(s.viscous_gain > 0.0)) throw ValidationError("dynamics.viscous_gain", "must be positive");
    if (!(s.normal_force > 0.0)) throw ValidationError("dynamics.normal_force", "must be positive");
    if (!(s.object.mass > 0.0)) throw ValidationError("body[object].mass", "must be positive");
    if (!(s.finger.mass > 0.0)) throw ValidationError("body[finger].mass", "must be positive");
    const double penetration = s.normal_force / s.stiffness;
    if (penetration > 0.1 * std::min(s.finger.params[0], s.object.params[0])) {
      throw ValidationError("dynamics.normal_force", "commanded penetration too deep for the radii");
    }
  }
}

Scenario load_scenario(const std::string& path_or_builtin) {
  std::string text, name;
  if (std::filesystem::exists(path_or_builtin)) {
    std::ifstream in(path_or_builtin);
    if (!in) throw ParseError(0, "cannot open scenario file: " + path_or_builtin);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    name = std::filesystem::path(path_or_builtin).stem().string();
  } else {
    const auto& table = builtin_scenarios();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const BuiltinScenario& b) { return b.name == path_or_builtin; });
    if (it == table.end()) {
      throw ParseError(0, "no such scenario file or builtin: " + path_or_builtin);
    }
    text = it->text;
    name = it->name;
  }
  Scenario s = parse_scenario(text, name);
  validate_scenario(s);
  return s;
}

namespace {

struct VrelSeries {
  std::vector<double> t;
  std::vector<double> norm;
};

PairMetrics kinematic_metrics(const Scenario& s, int pair_index, const VrelSeries& series,
                              long warnings) {
  PairMetrics m;
  m.contraction_warnings = warnings;

  double last_window_end = 0.0;
  bool has_window = false;
  auto window_active = [&](double t) {
    for (const DisturbanceSpec& d : s.disturbances) {
      if (d.contact == pair_index + 1 && t >= d.t_start && t < d.t_end) return true;
    }
    return false;
  };
  for (const DisturbanceSpec& d : s.disturbances) {
    if (d.contact == pair_index + 1) {
      has_window = true;
      last_window_end = std::max(last_window_end, d.t_end);
    }
  }

  for (std::size_t i = 0; i < series.t.size(); ++i) {
    m.max_vrel = std::max(m.max_vrel, series.norm[i]);
    if (!has_window || window_active(series.t[i])) {
      m.max_vrel_disturbed = std::max(m.max_vrel_disturbed, series.norm[i]);
    }
  }

  // First instant after the disturbance end from which the norm stays below
  // the threshold through the end of the horizon.
  std::size_t settle = series.t.size();
  for (std::size_t i = series.t.size(); i-- > 0;) {
    if (series.t[i] < last_window_end) break;
    if (series.norm[i] >= s.rejection_threshold) break;
    settle = i;
  }
  if (settle < series.t.size() && series.t[settle] >= last_window_end) {
    m.rejection_time = series.t[settle] - last_window_end;
  }
  return m;
}

// Contiguous sample range where |sigma| is at least 10% of its maximum, so
// residuals are not evaluated where the drive profile passes through zero.
std::pair<std::size_t, std::size_t> usable_sigma_range(const std::vector<PairSample>& samples) {
  double smax = 0.0;
  for (const PairSample& p : samples) smax = std::max(smax, std::abs(p.sigma));
  const double floor = 0.1 * smax;
  std::size_t lo = 0, hi = samples.size();
  while (lo < hi && std::abs(samples[lo].sigma) < floor) ++lo;
  while (hi > lo && std::abs(samples[hi - 1].sigma) < floor) --hi;
  return {lo, hi};
}

std::optional<double> corollary_residual(const PairConfig& cfg,
                                         const std::vector<PairSample>& samples, double dt) {
  // The checked curve is the slaved body: body 2 behind a body-1 geodesic,
  // body 1 behind a prescribed object drive.
  const bool check_body2 = cfg.mode != PairMode::PrescribedObjectSpin;
  const auto [lo, hi] = usable_sigma_range(samples);
  if (hi - lo < 5) return std::nullopt;  // the residual stencil needs 5 samples

  std::vector<CurveSample> curve;
  std::vector<SigmaProfile::Value> sigma;
  curve.reserve(hi - lo);
  sigma.reserve(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) {
    const PairSample& p = samples[i];
    CurveSample c;
    if (check_body2) {
      c = {p.state.u2, p.state.v2, p.state.du2, p.state.dv2};
    } else {
      c = {p.state.u1, p.state.v1, p.state.du1, p.state.dv1};
    }
    curve.push_back(c);
    sigma.push_back({p.sigma, p.sigma_dot});
  }
  const Chart& chart = check_body2 ? *cfg.body2 : *cfg.body1;
  return max_geodesic_residual(chart, curve, sigma, dt);
}

}  // namespace

RunResult run_scenario(const Scenario& s) {
  validate_scenario(s);
  RunResult result;
  result.scenario = s;

  const ChartPtr finger = build_chart(s.finger, "body[finger]");
  const ChartPtr object = build_chart(s.object, "body[object]");
  const PairMode mode = pair_mode(s);

  if (s.mode == "dynamic") {
    std::vector<KinematicPair> drives;
    for (std::size_t i = 0; i < s.contacts.size(); ++i) {
      drives.emplace_back(make_pair_config(s, finger, object, static_cast<int>(i)));
    }

    RigidBodyState obj;
    obj.mass = s.object.mass;
    const double r_o = s.object.params[0];
    obj.inertia = Eigen::Matrix3d::Identity() * (0.4 * s.object.mass * r_o * r_o);

    DynamicsParams params;
    params.stiffness = s.stiffness;
    params.damping = s.damping;
    params.mu = s.mu;
    params.viscous_gain = s.viscous_gain;
    params.normal_force = s.normal_force;

    DynamicWorld world(obj, r_o, std::move(drives), s.finger.params[0], params);
    for (std::size_t i = 0; i < s.contacts.size(); ++i) {
      KinematicPair pair(make_pair_config(s, finger, object, static_cast<int>(i)));
      world.set_drive_state(i, pair.initial_state(make_pair_initial(s, s.contacts[i], *finger, mode)));
    }

    result.dynamics = run_dynamics(world, s.horizon, s.step);

    for (std::size_t i = 0; i < s.contacts.size(); ++i) {
      VrelSeries series;
      for (const DynamicContactSample& d : result.dynamics.contact_samples[i]) {
        series.t.push_back(d.t);
        series.norm.push_back(std::hypot(d.slip_x, d.slip_y));
      }
      PairMetrics m = kinematic_metrics(s, static_cast<int>(i), series, 0);
      double defect = 0.0;
      for (const DynamicContactSample& d : result.dynamics.contact_samples[i]) {
        if (d.force.saturated) {
          const double ft = std::hypot(d.force.tangential_x, d.force.tangential_y);
          defect = std::max(defect, std::abs(ft - s.mu * d.force.normal_force));
        }
      }
      m.max_saturation_defect = defect;
      result.metrics.push_back(std::move(m));
    }
    return result;
  }

  for (std::size_t i = 0; i < s.contacts.size(); ++i) {
    const PairConfig cfg = make_pair_config(s, finger, object, static_cast<int>(i));
    const PairInitial init = make_pair_initial(s, s.contacts[i], *finger, mode);
    PairRunResult run = run_pair(cfg, init, 0.0, s.horizon, s.step);

    VrelSeries series;
    for (const PairSample& p : run.samples) {
      series.t.push_back(p.t);
      series.norm.push_back(std::hypot(p.v_rel_x, p.v_rel_y));
    }
    PairMetrics m =
        kinematic_metrics(s, static_cast<int>(i), series, run.diagnostics.contraction_warnings);
    if (s.mode == "rolling-corollary") {
      m.max_geodesic_residual = corollary_residual(cfg, run.samples, s.step);
    }
    result.metrics.push_back(std::move(m));
    result.kinematic.push_back(std::move(run));
  }
  return result;
}

std::string summary_json(const RunResult& result, std::optional<long> seed) {
  nlohmann::ordered_json j;
  j["scenario"] = result.scenario.name;
  j["mode"] = result.scenario.mode;
  j["rejection_threshold"] = result.scenario.rejection_threshold;
  if (seed) j["seed"] = *seed;
  j["pairs"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.metrics.size(); ++i) {
    const PairMetrics& m = result.metrics[i];
    nlohmann::ordered_json p;
    p["contact"] = i + 1;
    p["max_v_rel"] = m.max_vrel;
    p["max_v_rel_during_disturbance"] = m.max_vrel_disturbed;
    if (m.rejection_time) {
      p["rejection_time"] = *m.rejection_time;
    } else {
      p["rejection_time"] = nullptr;
    }
    if (m.max_geodesic_residual) p["max_geodesic_residual"] = *m.max_geodesic_residual;
    if (m.max_saturation_defect) p["max_saturation_defect"] = *m.max_saturation_defect;
    p["contraction_warnings"] = m.contraction_warnings;
    j["pairs"].push_back(std::move(p));
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> write_outputs(const RunResult& result, const std::string& out_dir,
                                       std::optional<long> seed) {
  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);

  std::vector<std::string> files;
  const std::string base = result.scenario.log_base;
  const bool dynamic = result.scenario.mode == "dynamic";
  const std::size_t pairs =
      dynamic ? result.dynamics.kinematic_samples.size() : result.kinematic.size();

  for (std::size_t i = 0; i < pairs; ++i) {
    const fs::path path = dir / (base + "_pair" + std::to_string(i + 1) + ".csv");
    if (dynamic) {
      write_pair_csv(path.string(), result.dynamics.kinematic_samples[i],
                     result.dynamics.contact_samples[i]);
    } else {
      write_pair_csv(path.string(), result.kinematic[i].samples);
    }
    files.push_back(path.string());
  }

  const fs::path summary_path = dir / (base + "_summary.json");
  std::ofstream out(summary_path, std::ios::binary);
  if (!out) throw InvalidParameterError("cannot write summary: " + summary_path.string());
  out << summary_json(result, seed);
  files.push_back(summary_path.string());
  return files;
}

}  // namespace geocontact
