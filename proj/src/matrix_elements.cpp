#include "ahatom/matrix_elements.hpp"

#include <algorithm>
#include <cmath>

#include "ahatom/error.hpp"
#include "ahatom/orbital.hpp"
#include "ahatom/quadrature.hpp"

namespace ahatom {

namespace {

constexpr double kInnerTol = 1e-12;
constexpr double kOuterTol = 1e-11;

double factorial(int k) { return std::tgamma(k + 1.0); }

// (l1 l2 l3; 0 0 0), zero unless l1 + l2 + l3 is even and triangular.
double three_j_zero(int l1, int l2, int l3) {
  const int two_g = l1 + l2 + l3;
  if (two_g % 2 != 0) return 0.0;
  if (l3 < std::abs(l1 - l2) || l3 > l1 + l2) return 0.0;
  const int g = two_g / 2;
  const double sign = (g % 2 == 0) ? 1.0 : -1.0;
  const double root = std::sqrt(factorial(two_g - 2 * l1) *
                                factorial(two_g - 2 * l2) *
                                factorial(two_g - 2 * l3) / factorial(two_g + 1));
  return sign * root * factorial(g) /
         (factorial(g - l1) * factorial(g - l2) * factorial(g - l3));
}

}  // namespace

PairKey::PairKey(const SubshellKey& x, const SubshellKey& y)
    : a(std::min(x, y)), b(std::max(x, y)) {}

double slater_integral(const SubshellKey& a, const SubshellKey& b, int k) {
  if (k < 0) throw InvalidArgument("slater_integral: negative multipole order");
  const RadialOrbital oa(a.n, a.l, 1.0);
  const RadialOrbital ob(b.n, b.l, 1.0);
  // Densities decay like exp(-2r/n); beyond 60 n nothing is left.
  const double r_max = 60.0 * std::max(a.n, b.n);

  const auto pb2 = [&](double r) { return r * r * radial_probability(ob, r); };
  const auto potential = [&](double r1) {
    const double below = quad::integrate(
        [&](double r) { return std::pow(r, k) * pb2(r); }, 0.0, r1, kInnerTol).value;
    const double above = quad::integrate(
        [&](double r) { return pb2(r) / std::pow(r, k + 1); }, r1, r_max,
        kInnerTol).value;
    return below / std::pow(r1, k + 1) + above * std::pow(r1, k);
  };
  return quad::integrate_checked(
      [&](double r1) {
        return r1 * r1 * radial_probability(oa, r1) * potential(r1);
      },
      0.0, r_max, kOuterTol, 1e-14);
}

double exact_monopole(const SubshellKey& a, const SubshellKey& b) {
  return slater_integral(a, b, 0);
}

double multipole_weight(int l, int k) {
  const double w = three_j_zero(l, k, l);
  return (2 * l + 1) * w * w;
}

double exact_direct(const SubshellKey& a, const SubshellKey& b) {
  double sum = 0.0;
  for (int k = 0; k <= 2 * std::min(a.l, b.l); k += 2) {
    sum += multipole_weight(a.l, k) * multipole_weight(b.l, k) *
           slater_integral(a, b, k);
  }
  return sum;
}

double approx_inter(const SubshellKey& outer, const SubshellKey& inner,
                    const ScreeningParams& params) {
  if (inner.n >= outer.n) {
    throw InvalidArgument("approx_inter: " + inner.label() +
                          " is not inside " + outer.label() +
                          "; use approx_intra for equal shells");
  }
  const double n2 = static_cast<double>(outer.n) * outer.n;
  return kappa_inter(outer.n, outer.l, params) / n2;
}

double approx_intra(const SubshellKey& a, const SubshellKey& b,
                    const ScreeningParams& params) {
  if (a.n != b.n) {
    throw InvalidArgument("approx_intra: " + a.label() + " and " + b.label() +
                          " are in different shells");
  }
  const double n2 = static_cast<double>(a.n) * a.n;
  return params.intra_factor *
         (kappa_intra(a.n, a.l, params) + kappa_intra(b.n, b.l, params)) / n2;
}

double approx_element(const SubshellKey& a, const SubshellKey& b,
                      const ScreeningParams& params) {
  if (a.n == b.n) return approx_intra(a, b, params);
  return a.n > b.n ? approx_inter(a, b, params) : approx_inter(b, a, params);
}

std::vector<MatrixElementRecord> difference_grid(int n_max,
                                                 const ScreeningParams& params) {
  if (n_max < 1) throw InvalidArgument("difference_grid: n_max must be >= 1");
  std::vector<SubshellKey> keys;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 0; l < n; ++l) keys.emplace_back(n, l);
  }
  std::vector<MatrixElementRecord> grid;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i; j < keys.size(); ++j) {
      MatrixElementRecord rec{PairKey(keys[i], keys[j]), 0.0, 0.0, 0.0};
      rec.exact = exact_direct(keys[i], keys[j]);
      rec.approx = approx_element(keys[i], keys[j], params);
      rec.diff = std::abs(rec.exact - rec.approx);
      grid.push_back(rec);
    }
  }
  return grid;
}

double calibrate_alpha() {
  // (1 - alpha/2) / 4 = M(1s, 2s)
  return 2.0 * (1.0 - 4.0 * exact_monopole({1, 0}, {2, 0}));
}

double calibrate_intra_factor() {
  // intra_factor * 2 = M(1s, 1s)
  return 0.5 * exact_monopole({1, 0}, {1, 0});
}

}  // namespace ahatom
