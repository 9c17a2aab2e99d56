#pragma once

#include <functional>

namespace ahatom::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  ///< Kronrod error estimate
};

using Integrand = std::function<double(double)>;

/// Adaptive 61-point Gauss-Kronrod on [a, b].
Result integrate(const Integrand& f, double a, double b, double rel_tol = 1e-10,
                 unsigned max_depth = 18);

/// As `integrate`, but throws NumericalError when the error estimate exceeds
/// rel_tol * |value| + abs_floor.
double integrate_checked(const Integrand& f, double a, double b,
                         double rel_tol = 1e-10, double abs_floor = 1e-300);

}  // namespace ahatom::quad
