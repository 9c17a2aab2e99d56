#include "ahatom/orbital.hpp"

#include <cmath>
#include <string>

#include "ahatom/error.hpp"
#include "ahatom/subshell.hpp"

namespace ahatom {

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

double confluent_poly(int a, int c, double x) {
  if (a > 0) {
    throw InvalidArgument("confluent_poly: a = " + std::to_string(a) +
                          " > 0 does not terminate");
  }
  if (c < 1) throw InvalidArgument("confluent_poly: c must be positive");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < -a; ++k) {
    term *= static_cast<double>(a + k) / static_cast<double>(c + k) * x /
            static_cast<double>(k + 1);
    sum += term;
  }
  return sum;
}

RadialOrbital::RadialOrbital(int n_, int l_, double z_eff_)
    : n(n_), l(l_), z_eff(z_eff_) {
  static_cast<void>(SubshellKey(n, l));
  if (!(z_eff > 0.0)) {
    throw InvalidArgument("orbital needs a positive effective charge, got " +
                          std::to_string(z_eff));
  }
  norm = std::sqrt(factorial(n + l) / (2.0 * n * factorial(n - l - 1))) /
         factorial(2 * l + 1) * std::pow(xi(), 1.5);
}

double radial_value(const RadialOrbital& orb, double r, bool include_norm) {
  const double x = orb.xi() * r;
  const double value = std::pow(x, orb.l) * std::exp(-0.5 * x) *
                       confluent_poly(-orb.n + orb.l + 1, 2 * orb.l + 2, x);
  return include_norm ? orb.norm * value : value;
}

double radial_probability(const RadialOrbital& orb, double r) {
  const double v = radial_value(orb, r, true);
  return v * v;
}

}  // namespace ahatom
