#pragma once

#include <string>
#include <vector>

#include "geocontact/dynamics.hpp"
#include "geocontact/kinematics.hpp"

namespace geocontact {

// Plain-CSV trajectory log, one header row, floats at 17 significant digits.
// Column order is fixed: t, contact coordinates, spin angle, their rates,
// relative velocity, then (dynamic runs) normal and tangential forces.
void write_pair_csv(const std::string& path, const std::vector<PairSample>& samples);
void write_pair_csv(const std::string& path, const std::vector<PairSample>& samples,
                    const std::vector<DynamicContactSample>& forces);

}  // namespace geocontact
