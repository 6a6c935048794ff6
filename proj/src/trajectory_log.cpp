#include "geocontact/trajectory_log.hpp"

#include <cstdio>
#include <fstream>

#include "geocontact/errors.hpp"

namespace geocontact {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

constexpr const char* kKinematicHeader =
    "t,u1,v1,u2,v2,psi,du1,dv1,du2,dv2,dpsi,v_rel_x,v_rel_y";

void write_rows(std::ofstream& out, const std::vector<PairSample>& samples,
                const std::vector<DynamicContactSample>* forces) {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const PairSample& s = samples[i];
    out << fmt(s.t) << ',' << fmt(s.state.u1) << ',' << fmt(s.state.v1) << ',' << fmt(s.state.u2)
        << ',' << fmt(s.state.v2) << ',' << fmt(s.state.psi) << ',' << fmt(s.state.du1) << ','
        << fmt(s.state.dv1) << ',' << fmt(s.state.du2) << ',' << fmt(s.state.dv2) << ','
        << fmt(s.state.dpsi) << ',' << fmt(s.v_rel_x) << ',' << fmt(s.v_rel_y);
    if (forces) {
      const DynamicContactSample& f = (*forces)[i];
      out << ',' << fmt(f.force.normal_force) << ',' << fmt(f.force.tangential_x) << ','
          << fmt(f.force.tangential_y);
    }
    out << '\n';
  }
}

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameterError("cannot open log file for writing: " + path);
  return out;
}

}  // namespace

void write_pair_csv(const std::string& path, const std::vector<PairSample>& samples) {
  std::ofstream out = open_or_throw(path);
  out << kKinematicHeader << '\n';
  write_rows(out, samples, nullptr);
}

void write_pair_csv(const std::string& path, const std::vector<PairSample>& samples,
                    const std::vector<DynamicContactSample>& forces) {
  if (forces.size() != samples.size()) {
    throw InvalidParameterError("force and kinematic sample counts differ");
  }
  std::ofstream out = open_or_throw(path);
  out << kKinematicHeader << ",f_n,f_t_x,f_t_y\n";
  write_rows(out, samples, &forces);
}

}  // namespace geocontact
