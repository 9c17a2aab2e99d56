#include "ahatom/observables.hpp"

#include <cmath>
#include <string>

#include "ahatom/error.hpp"
#include "ahatom/orbital.hpp"
#include "ahatom/quadrature.hpp"
#include "ahatom/units.hpp"

namespace ahatom {

namespace {

double factorial(int k) { return std::tgamma(k + 1.0); }

RadialOrbital orbital_for(const AtomModel& atom, const SubshellKey& key) {
  const auto& z = atom.charges.at(key);
  if (z.unbound) {
    throw InvalidArgument("subshell " + key.label() +
                          " is unbound (Z_eff = " + std::to_string(z.value) +
                          "); no orbital density");
  }
  return RadialOrbital(key.n, key.l, z.value);
}

}  // namespace

AtomModel make_atom(double z_nuclear, const Configuration& config,
                    const ScreeningParams& params) {
  AtomModel atom;
  atom.z_nuclear = z_nuclear;
  atom.config = config;
  atom.params = params;
  atom.charges = effective_charges(z_nuclear, config, params);
  atom.energy = total_energy(z_nuclear, config, params);
  return atom;
}

double density(const AtomModel& atom, double r) {
  if (r < 0.0) throw InvalidArgument("density: negative radius");
  double rho = 0.0;
  for (const auto& [key, g] : atom.config) {
    rho += g * radial_probability(orbital_for(atom, key), r);
  }
  return rho / (4.0 * units::pi);
}

double radial_density(const AtomModel& atom, double r) {
  return r * r * density(atom, r);
}

std::vector<double> log_grid(double r_min, double r_max, int points) {
  if (!(r_min > 0.0) || !(r_max > r_min) || points < 2) {
    throw InvalidArgument("log_grid: need 0 < r_min < r_max and >= 2 points");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double step = std::log(r_max / r_min) / (points - 1);
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = r_min * std::exp(step * i);
  }
  grid.back() = r_max;
  return grid;
}

DensityProfile density_profile(const AtomModel& atom,
                               std::span<const double> grid) {
  DensityProfile p;
  p.grid.assign(grid.begin(), grid.end());
  p.rho.reserve(grid.size());
  p.d_radial.reserve(grid.size());
  for (const double r : grid) {
    const double rho = density(atom, r);
    p.rho.push_back(rho);
    p.d_radial.push_back(r * r * rho);
  }
  return p;
}

DensityProfile density_profile(const AtomModel& atom) {
  const auto grid = log_grid();
  return density_profile(atom, grid);
}

int count_radial_maxima(const DensityProfile& profile) {
  const auto& d = profile.d_radial;
  int count = 0;
  for (std::size_t i = 1; i + 1 < d.size(); ++i) {
    if (d[i] > d[i - 1] && d[i] >= d[i + 1]) ++count;
  }
  return count;
}

double integrated_electrons(const AtomModel& atom, double rel_tol) {
  double total = 0.0;
  for (const auto& [key, g] : atom.config) {
    const RadialOrbital orb = orbital_for(atom, key);
    const double r_max = 60.0 * key.n / orb.z_eff;
    total += g * quad::integrate_checked(
                     [&](double r) { return r * r * radial_probability(orb, r); },
                     0.0, r_max, rel_tol);
  }
  return total;
}

double rho_at_nucleus(const AtomModel& atom) {
  double rho = 0.0;
  for (const auto& [key, g] : atom.config) {
    if (key.l != 0) continue;
    const double x = atom.charges.at(key).value / key.n;
    rho += g * x * x * x;
  }
  return rho / units::pi;
}

double inverse_power_derivative(int p, double xi, double q) {
  if (p < 0) throw InvalidArgument("inverse_power_derivative: negative order");
  if (!(xi > 0.0)) throw InvalidArgument("inverse_power_derivative: xi must be positive");
  if (q < 0.0) throw InvalidArgument("inverse_power_derivative: negative q");
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  if (q == 0.0) {
    return sign * factorial(p + 1) * std::pow(xi, -(p + 2));
  }
  const double modulus = std::hypot(xi, q);
  const double phase = std::atan2(q, xi);
  return sign * factorial(p) * std::sin((p + 1) * phase) /
         (q * std::pow(modulus, p + 1));
}

double subshell_form_factor(int n, int l, double z_eff, double q) {
  if (q < 0.0) throw InvalidArgument("form factor: negative q");
  const RadialOrbital orb(n, l, z_eff);
  const double xi = orb.xi();
  const int top = n - l - 1;
  // |(a)_k / ((c)_k k!)| up to the constant (2l+1)!, with a = -(n-l-1),
  // c = 2l+2. The alternating signs of the polynomial coefficients combine
  // with (-1)^p of the derivative into the overall minus sign.
  std::vector<double> coef(static_cast<std::size_t>(top + 1));
  for (int k = 0; k <= top; ++k) {
    coef[static_cast<std::size_t>(k)] =
        factorial(top) /
        (factorial(top - k) * factorial(2 * l + 1 + k) * factorial(k));
  }
  const auto kernel_sum = [&](double qq) {
    double s = 0.0;
    for (int k = 0; k <= top; ++k) {
      for (int m = 0; m <= top; ++m) {
        s += coef[static_cast<std::size_t>(k)] * coef[static_cast<std::size_t>(m)] *
             std::pow(xi, k + m) *
             inverse_power_derivative(2 * l + 1 + k + m, xi, qq);
      }
    }
    return -std::pow(xi, 2 * l + 3) * s;
  };
  const double at_zero = kernel_sum(0.0);
  if (!(at_zero > 0.0)) {
    throw NumericalError("form factor normalization for " +
                         SubshellKey(n, l).label() + " is not positive");
  }
  const double c_norm = 1.0 / at_zero;
  return q == 0.0 ? 1.0 : c_norm * kernel_sum(q);
}

double form_factor(const AtomModel& atom, double q) {
  double f = 0.0;
  for (const auto& [key, g] : atom.config) {
    const auto& z = atom.charges.at(key);
    if (z.unbound) {
      throw InvalidArgument("subshell " + key.label() +
                            " is unbound; form factor undefined");
    }
    f += g * subshell_form_factor(key.n, key.l, z.value, q);
  }
  return f;
}

double s_to_q(double s) { return 4.0 * units::pi * s * units::bohr_angstrom; }

FormFactorCurve form_factor_curve(const AtomModel& atom,
                                  std::span<const double> s_grid) {
  FormFactorCurve curve;
  curve.s_grid.assign(s_grid.begin(), s_grid.end());
  for (const auto& [key, z] : atom.charges) {
    curve.xi.emplace(key, 2.0 * z.value / key.n);
  }
  for (const double s : s_grid) {
    if (s < 0.0) throw InvalidArgument("form_factor_curve: negative s");
    const double q = s_to_q(s);
    curve.q_grid.push_back(q);
    curve.f.push_back(form_factor(atom, q));
  }
  return curve;
}

}  // namespace ahatom
