#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace geocontact {

// Path-speed profile sigma(t) = ds/dt as a polynomial of degree up to 5,
// stored with ascending coefficients. sigma relates the path parameter of a
// contact curve to time; it must stay away from zero wherever the
// sigma-parameterized equations are evaluated.
class SigmaProfile {
 public:
  SigmaProfile() : coeffs_{0.0} {}
  SigmaProfile(std::initializer_list<double> ascending_coeffs);
  explicit SigmaProfile(const std::vector<double>& ascending_coeffs);

  static constexpr std::size_t kMaxDegree = 5;

  // Value and time derivative; throws SingularProfileError if |sigma| < 1e-9.
  struct Value {
    double sigma;
    double sigma_dot;
  };
  Value eval(double t) const;

  // Value and derivative without the singularity guard, for diagnostics,
  // validation and drive profiles that legitimately pass through zero.
  Value eval_unchecked(double t) const;
  double value_unchecked(double t) const;

  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

}  // namespace geocontact
