#include "ahatom/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ahatom/error.hpp"

namespace ahatom::quad {

Result integrate(const Integrand& f, double a, double b, double rel_tol,
                 unsigned max_depth) {
  Result r;
  r.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, max_depth, rel_tol, &r.error);
  return r;
}

double integrate_checked(const Integrand& f, double a, double b,
                         double rel_tol, double abs_floor) {
  const Result r = integrate(f, a, b, rel_tol);
  // The Kronrod estimate |K - G| overshoots the true error by orders of
  // magnitude on smooth integrands; only a gross miss counts as failure.
  if (!std::isfinite(r.value) ||
      r.error > 100.0 * (rel_tol * std::abs(r.value) + abs_floor)) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b << "] did not converge: value "
        << r.value << ", error estimate " << r.error << ", requested relative "
        << rel_tol;
    throw NumericalError(msg.str());
  }
  return r.value;
}

}  // namespace ahatom::quad
