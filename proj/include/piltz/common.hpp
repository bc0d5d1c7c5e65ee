#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace piltz {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

/// Input outside the domain of an operation (bad field, pole, malformed data).
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numerical procedure stopped before reaching its target accuracy.
class convergence_error : public std::runtime_error {
public:
  convergence_error(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved residual " + std::to_string(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  double achieved_;
};

/// Value with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace piltz
