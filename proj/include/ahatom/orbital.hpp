#pragma once

namespace ahatom {

/// Terminating confluent hypergeometric series
///   F(a, c, x) = sum_{k=0}^{-a} (a)_k / (c)_k x^k / k!
/// for a nonpositive integer a and positive integer c.
/// Throws InvalidArgument for a > 0 or c < 1.
double confluent_poly(int a, int c, double x);

/// Hydrogen-like radial orbital in an effective point charge.
///
///   R_nl(r) = (2Zr/n)^l exp(-Zr/n) F(-n+l+1, 2l+2, 2Zr/n)
///   N_nl    = 1/(2l+1)! sqrt((n+l)! / (2n (n-l-1)!)) (2Z/n)^{3/2}
///
/// so that the integral of (N R)^2 r^2 over [0, inf) is one.
struct RadialOrbital {
  int n = 1;
  int l = 0;
  double z_eff = 1.0;
  double norm = 2.0;

  /// Throws InvalidArgument for invalid (n, l) or z_eff <= 0.
  RadialOrbital(int n_, int l_, double z_eff_);

  /// 2 Z / n, the exponent scale of the density.
  double xi() const { return 2.0 * z_eff / n; }
};

/// R_nl(r), times N_nl when `include_norm` is set.
double radial_value(const RadialOrbital& orb, double r, bool include_norm = true);

/// |N R(r)|^2.
double radial_probability(const RadialOrbital& orb, double r);

}  // namespace ahatom
