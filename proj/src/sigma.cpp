#include "geocontact/sigma.hpp"

#include <cmath>

#include "geocontact/errors.hpp"

namespace geocontact {

namespace {
constexpr double kSigmaFloor = 1e-9;
}

SigmaProfile::SigmaProfile(std::initializer_list<double> ascending_coeffs)
    : SigmaProfile(std::vector<double>(ascending_coeffs)) {}

SigmaProfile::SigmaProfile(const std::vector<double>& ascending_coeffs) : coeffs_(ascending_coeffs) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (coeffs_.size() > kMaxDegree + 1) {
    throw InvalidParameterError("sigma polynomial degree exceeds 5");
  }
}

double SigmaProfile::value_unchecked(double t) const {
  double s = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * t + *it;
  return s;
}

SigmaProfile::Value SigmaProfile::eval_unchecked(double t) const {
  double d = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) d = d * t + static_cast<double>(k) * coeffs_[k];
  return {value_unchecked(t), d};
}

SigmaProfile::Value SigmaProfile::eval(double t) const {
  const Value v = eval_unchecked(t);
  if (std::abs(v.sigma) < kSigmaFloor) {
    throw SingularProfileError("sigma(t) vanished at t=" + std::to_string(t) +
                               "; the profile needs a nonzero intercept over the horizon");
  }
  return v;
}

}  // namespace geocontact
