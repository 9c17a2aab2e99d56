#pragma once

#include <map>
#include <vector>

#include "ahatom/subshell.hpp"

namespace ahatom {

/// Model constants of the screening formula.
///
/// `alpha` and `beta` enter the inter-shell coefficient, `beta` also the
/// intra-shell one, and `intra_factor` scales all same-shell screening.
struct ScreeningParams {
  double alpha = 26.0 / 81.0;
  double beta = 0.412;
  double intra_factor = 5.0 / 16.0;

  /// Exact calibration of alpha against the (1s,2s) Coulomb element.
  static ScreeningParams calibrated() { return {}; }
  /// Three-digit alpha = 0.321, as commonly quoted.
  static ScreeningParams rounded() { return {0.321, 0.412, 5.0 / 16.0}; }

  /// Throws InvalidArgument unless alpha, beta lie in (0, 1) and
  /// intra_factor > 0.
  void validate() const;
};

/// Screening of an electron in shell `n_host` by an inner electron with
/// angular momentum `l_inner`: 1 - alpha/n - beta l(l+1)/n^2.
///
/// The principal quantum number is the host's, the angular momentum the
/// screening electron's.
double kappa_inter(int n_host, int l_inner, const ScreeningParams& params);

/// Same-shell coefficient 1 + beta l(l+1)/n^2.
double kappa_intra(int n, int l, const ScreeningParams& params);

struct EffectiveCharge {
  double value = 0.0;
  /// Set when value <= 0: the subshell is not bound by the screened field.
  bool unbound = false;

  friend bool operator==(const EffectiveCharge&, const EffectiveCharge&) = default;
};

using EffectiveChargeTable = std::map<SubshellKey, EffectiveCharge>;

/// Z_nl = Z - sum_{n'<n} g kappa_inter(n, l') -
///        intra_factor (sum_{l''} g kappa_intra(n, l'') - kappa_intra(n, l)).
///
/// Throws InvalidArgument if `key` is unoccupied. Non-positive results are
/// returned as-is with `unbound` set.
EffectiveCharge effective_charge(double z_nuclear, const Configuration& config,
                                 const SubshellKey& key,
                                 const ScreeningParams& params = {});

EffectiveChargeTable effective_charges(double z_nuclear,
                                       const Configuration& config,
                                       const ScreeningParams& params = {});

struct EnergyBreakdown {
  /// -g Z_nl^2 / (2 n^2) per subshell, hartree.
  std::map<SubshellKey, double> per_subshell;
  double total = 0.0;
  double binding = 0.0;
  /// Subshells whose effective charge came out non-positive.
  std::vector<SubshellKey> unbound;
};

EnergyBreakdown total_energy(double z_nuclear, const Configuration& config,
                             const ScreeningParams& params = {});

/// Shorthand for total_energy(...).binding.
double binding_energy(double z_nuclear, const Configuration& config,
                      const ScreeningParams& params = {});

// Large-Z limit. Treating every shell up to n_max = (3Z/2)^{1/3} as full and
// replacing sums by integrals gives Z_n = Z - c n^3 and E = -C Z^{7/3}.

/// c(beta) = 2/3 - beta/5. The printed closed form has +beta/5; integrating
/// the screening sums directly gives the minus sign, which is also the
/// one consistent with the energy polynomial below.
double screening_integral_coefficient(double beta);

/// C(beta) = (4/63 - 4b/105 + b^2/175)(3/2)^{7/3}
///         + (-1/3 + b/10)(3/2)^{4/3} + (3/2)^{1/3}.
double asymptotic_binding_coefficient(double beta);

/// Thomas-Fermi coefficient of the nonrelativistic binding energy.
inline constexpr double kThomasFermiCoefficient = 0.768745;

/// Solves asymptotic_binding_coefficient(beta) = target for beta in [0, 1].
/// Throws NumericalError when the target is not bracketed.
double calibrate_beta(double target = kThomasFermiCoefficient);

}  // namespace ahatom
