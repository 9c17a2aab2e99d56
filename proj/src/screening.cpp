#include "ahatom/screening.hpp"

#include <cmath>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "ahatom/error.hpp"

namespace ahatom {

void ScreeningParams::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1), got " +
                          std::to_string(alpha));
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1), got " +
                          std::to_string(beta));
  }
  if (!(intra_factor > 0.0)) {
    throw InvalidArgument("intra-shell factor must be positive");
  }
}

double kappa_inter(int n_host, int l_inner, const ScreeningParams& params) {
  if (n_host < 1 || l_inner < 0) {
    throw InvalidArgument("kappa_inter: need n_host >= 1 and l_inner >= 0");
  }
  const double n = n_host;
  return 1.0 - params.alpha / n - params.beta * l_inner * (l_inner + 1) / (n * n);
}

double kappa_intra(int n, int l, const ScreeningParams& params) {
  const SubshellKey key(n, l);  // validates
  const double nn = key.n;
  return 1.0 + params.beta * key.l_weight() / (nn * nn);
}

EffectiveCharge effective_charge(double z_nuclear, const Configuration& config,
                                 const SubshellKey& key,
                                 const ScreeningParams& params) {
  if (!config.occupied(key)) {
    throw InvalidArgument("effective charge requested for unoccupied subshell " +
                          key.label());
  }
  double inner = 0.0;
  double same = 0.0;
  for (const auto& [other, g] : config) {
    if (other.n < key.n) {
      inner += g * kappa_inter(key.n, other.l, params);
    } else if (other.n == key.n) {
      same += g * kappa_intra(key.n, other.l, params);
    }
  }
  same -= kappa_intra(key.n, key.l, params);
  EffectiveCharge z;
  z.value = z_nuclear - inner - params.intra_factor * same;
  z.unbound = !(z.value > 0.0);
  return z;
}

EffectiveChargeTable effective_charges(double z_nuclear,
                                       const Configuration& config,
                                       const ScreeningParams& params) {
  EffectiveChargeTable table;
  for (const auto& [key, g] : config) {
    table.emplace(key, effective_charge(z_nuclear, config, key, params));
  }
  return table;
}

EnergyBreakdown total_energy(double z_nuclear, const Configuration& config,
                             const ScreeningParams& params) {
  EnergyBreakdown out;
  for (const auto& [key, g] : config) {
    const auto z = effective_charge(z_nuclear, config, key, params);
    const double n2 = static_cast<double>(key.n) * key.n;
    const double e = -g * z.value * z.value / (2.0 * n2);
    out.per_subshell.emplace(key, e);
    out.total += e;
    if (z.unbound) out.unbound.push_back(key);
  }
  out.binding = -out.total;
  return out;
}

double binding_energy(double z_nuclear, const Configuration& config,
                      const ScreeningParams& params) {
  return total_energy(z_nuclear, config, params).binding;
}

double screening_integral_coefficient(double beta) {
  return 2.0 / 3.0 - beta / 5.0;
}

double asymptotic_binding_coefficient(double beta) {
  const double x = 1.5;
  const double c7 = 4.0 / 63.0 - 4.0 * beta / 105.0 + beta * beta / 175.0;
  const double c4 = -1.0 / 3.0 + beta / 10.0;
  return c7 * std::pow(x, 7.0 / 3.0) + c4 * std::pow(x, 4.0 / 3.0) +
         std::cbrt(x);
}

double calibrate_beta(double target) {
  const auto f = [target](double b) {
    return asymptotic_binding_coefficient(b) - target;
  };
  const double lo = 0.0;
  const double hi = 1.0;
  const double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NumericalError("calibrate_beta: no root for target " +
                         std::to_string(target) + " on [0, 1]");
  }
  boost::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(50),
      iters);
  return 0.5 * (a + b);
}

}  // namespace ahatom
