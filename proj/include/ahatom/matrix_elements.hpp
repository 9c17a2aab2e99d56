#pragma once

#include <vector>

#include "ahatom/screening.hpp"
#include "ahatom/subshell.hpp"

namespace ahatom {

/// Unordered subshell pair, stored with a <= b.
struct PairKey {
  SubshellKey a;
  SubshellKey b;

  PairKey(const SubshellKey& x, const SubshellKey& y);

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Two-electron element per unit nuclear charge, from Coulomb orbitals and
/// from the single-particle ansatz.
struct MatrixElementRecord {
  PairKey pair;
  double exact = 0.0;
  double approx = 0.0;
  double diff = 0.0;  ///< |exact - approx|
};

/// Radial Slater integral
///   R^k = int int P_a(r1)^2 P_b(r2)^2 r_<^k / r_>^{k+1} dr1 dr2
/// for Z = 1 hydrogenic orbitals, P = r N R. By Z-scaling this equals the
/// Coulomb element divided by Z. Nested adaptive quadrature, inner integral
/// split at r1. Throws NumericalError if the quadrature does not converge.
double slater_integral(const SubshellKey& a, const SubshellKey& b, int k);

/// Spherically averaged (F0, 1/r_>) element.
double exact_monopole(const SubshellKey& a, const SubshellKey& b);

/// (2l+1) (l k l; 0 0 0)^2, the multipole weight of |Y_l0|^2.
double multipole_weight(int l, int k);

/// Full direct Coulomb element between the real m = 0 orbitals,
///   sum_k multipole_weight(l_a, k) multipole_weight(l_b, k) R^k.
/// This is the "exact" value of the difference grid.
double exact_direct(const SubshellKey& a, const SubshellKey& b);

/// Inter-shell ansatz for a host electron in `outer` screened by one in
/// `inner`: kappa(n_outer, l_outer) / n_outer^2.
/// Throws InvalidArgument unless inner.n < outer.n.
double approx_inter(const SubshellKey& outer, const SubshellKey& inner,
                    const ScreeningParams& params = {});

/// Same-shell ansatz: intra_factor (kappa'(n, l_a) + kappa'(n, l_b)) / n^2.
/// Throws InvalidArgument unless a.n == b.n.
double approx_intra(const SubshellKey& a, const SubshellKey& b,
                    const ScreeningParams& params = {});

/// approx_inter or approx_intra, whichever applies to the pair.
double approx_element(const SubshellKey& a, const SubshellKey& b,
                      const ScreeningParams& params = {});

/// Every unordered pair of subshells with n <= n_max, in (a, b) order.
std::vector<MatrixElementRecord> difference_grid(int n_max,
                                                 const ScreeningParams& params = {});

/// alpha making the (1s,2s) ansatz equal to the quadrature element,
/// alpha = 2 (1 - 4 M(1s,2s)); analytically 26/81.
double calibrate_alpha();

/// intra_factor making approx_intra(1s,1s) equal the quadrature element,
/// M(1s,1s) / 2; analytically 5/16.
double calibrate_intra_factor();

}  // namespace ahatom
