#include <doctest.h>

#include <cmath>

#include "ahatom/error.hpp"
#include "ahatom/orbital.hpp"
#include "ahatom/quadrature.hpp"
#include "oracles.hpp"

using namespace ahatom;
using doctest::Approx;

TEST_CASE("terminating confluent series") {
  for (double x : {0.0, 0.5, 7.0}) CHECK(confluent_poly(0, 2, x) == 1.0);
  CHECK(confluent_poly(-1, 2, 3.0) == Approx(-0.5).epsilon(1e-15));
  CHECK(confluent_poly(-2, 2, 1.0) == Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK_THROWS_AS(confluent_poly(1, 2, 1.0), InvalidArgument);
  CHECK_THROWS_AS(confluent_poly(-1, 0, 1.0), InvalidArgument);
}

TEST_CASE("orbital values") {
  CHECK(radial_value(RadialOrbital(1, 0, 1.0), 0.0) == Approx(2.0).epsilon(1e-15));
  CHECK(std::abs(radial_value(RadialOrbital(2, 0, 1.0), 2.0)) < 1e-15);
  CHECK_THROWS_AS(RadialOrbital(2, 2, 1.0), InvalidArgument);
  CHECK_THROWS_AS(RadialOrbital(1, 0, 0.0), InvalidArgument);
}

TEST_CASE("orbitals agree with the Laguerre form") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      for (double z : {1.0, 2.5, 37.0}) {
        const RadialOrbital orb(n, l, z);
        for (double r : {0.01, 0.3, 1.0, 4.0, 15.0}) {
          const double rr = r * n / z;
          const double ref = oracle::radial(n, l, z, rr);
          CHECK(radial_value(orb, rr) ==
                Approx(ref).epsilon(1e-10).scale(1e-12 * std::pow(z, 1.5)));
        }
      }
    }
  }
}

TEST_CASE("normalization, orthogonality, scaling, nodes") {
  const RadialOrbital o31(3, 1, 2.5);
  const double norm = quad::integrate_checked(
      [&](double r) { return radial_probability(o31, r) * r * r; }, 0.0, 60.0 * 3 / 2.5);
  CHECK(std::abs(norm - 1.0) < 1e-9);

  for (int l = 0; l <= 2; ++l) {
    for (int n = l + 1; n <= 5; ++n) {
      for (int m = n; m <= 5; ++m) {
        const RadialOrbital a(n, l, 1.7), b(m, l, 1.7);
        const double s = quad::integrate_checked(
            [&](double r) { return radial_value(a, r) * radial_value(b, r) * r * r; }, 0.0,
            60.0 * 5 / 1.7, 1e-10, 1e-12);
        CHECK(std::abs(s - (n == m ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }

  for (double r : {0.05, 0.7, 3.0}) {
    const double z = 3.3;
    CHECK(radial_value(RadialOrbital(4, 2, z), r) ==
          Approx(std::pow(z, 1.5) * radial_value(RadialOrbital(4, 2, 1.0), z * r))
              .epsilon(1e-12));
  }

  for (int n = 1; n <= 7; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialOrbital orb(n, l, 1.0);
      int changes = 0;
      double prev = radial_value(orb, 1e-3);
      for (int i = 1; i <= 4000; ++i) {
        const double r = 1e-3 * std::pow(2e5, i / 4000.0);
        const double v = radial_value(orb, r);
        if (v * prev < 0.0) ++changes;
        if (v != 0.0) prev = v;
      }
      CHECK(changes == n - l - 1);
    }
  }
}
