#pragma once

#include <map>
#include <span>
#include <vector>

#include "ahatom/screening.hpp"
#include "ahatom/subshell.hpp"

namespace ahatom {

/// A configuration together with its effective charges and energy, all
/// computed under the same screening parameters.
struct AtomModel {
  double z_nuclear = 1.0;
  Configuration config;
  ScreeningParams params;
  EffectiveChargeTable charges;
  EnergyBreakdown energy;

  int n_electrons() const { return config.total_electrons(); }
};

/// Evaluates charges and energy for `config`.
AtomModel make_atom(double z_nuclear, const Configuration& config,
                    const ScreeningParams& params = {});

// Electron density. Open subshells are spherically averaged, so every
// subshell contributes g |N R(r; Z_nl)|^2 / (4 pi). Observables throw
// InvalidArgument if an occupied subshell has a non-positive charge.

double density(const AtomModel& atom, double r);

/// D(r) = r^2 rho(r).
double radial_density(const AtomModel& atom, double r);

struct DensityProfile {
  std::vector<double> grid;      ///< bohr
  std::vector<double> rho;       ///< electrons / bohr^3
  std::vector<double> d_radial;  ///< r^2 rho
};

/// `points` log-spaced radii on [r_min, r_max].
std::vector<double> log_grid(double r_min = 1e-4, double r_max = 50.0,
                             int points = 400);

DensityProfile density_profile(const AtomModel& atom,
                               std::span<const double> grid);
DensityProfile density_profile(const AtomModel& atom);

/// Interior local maxima of the sampled D(r).
int count_radial_maxima(const DensityProfile& profile);

/// 4 pi int rho r^2 dr by adaptive quadrature, subshell by subshell.
double integrated_electrons(const AtomModel& atom, double rel_tol = 1e-12);

/// sum over occupied s subshells of g (Z_n0 / n)^3 / pi.
double rho_at_nucleus(const AtomModel& atom);

/// d^p/dxi^p (xi^2 + q^2)^{-1}.
///
/// For q > 0 this is (-1)^p p! Im[(xi - i q)^{-(p+1)}] / q, evaluated from
/// modulus and phase. At q = 0 it is (-1)^p (p+1)! xi^{-(p+2)}.
/// Throws InvalidArgument for xi <= 0, p < 0 or q < 0.
double inverse_power_derivative(int p, double xi, double q);

/// Scattering factor of one electron in the (n, l) Coulomb orbital with
/// charge z_eff, normalized to 1 at q = 0. q in inverse bohr.
double subshell_form_factor(int n, int l, double z_eff, double q);

/// f(q) = sum g_nl F_nl(Z_nl, q).
double form_factor(const AtomModel& atom, double q);

/// q = 4 pi s a_B with s = sin(theta)/lambda in inverse angstrom.
double s_to_q(double s);

struct FormFactorCurve {
  std::vector<double> s_grid;  ///< inverse angstrom
  std::vector<double> q_grid;  ///< inverse bohr
  std::vector<double> f;
  std::map<SubshellKey, double> xi;  ///< 2 Z_nl / n
};

FormFactorCurve form_factor_curve(const AtomModel& atom,
                                  std::span<const double> s_grid);

}  // namespace ahatom
