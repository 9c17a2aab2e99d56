#include <doctest.h>

#include <cmath>

#include "ahatom/error.hpp"
#include "ahatom/matrix_elements.hpp"
#include "oracles.hpp"

using namespace ahatom;
using doctest::Approx;

TEST_CASE("monopole and direct elements match the symbolic values") {
  for (const auto& e : oracle::coulomb_elements()) {
    const SubshellKey a(e.na, e.la), b(e.nb, e.lb);
    CAPTURE(a.label());
    CAPTURE(b.label());
    CHECK(std::abs(exact_monopole(a, b) - e.monopole) < 1e-8);
    CHECK(std::abs(exact_direct(a, b) - e.direct) < 1e-8);
    CHECK(exact_monopole(a, b) == Approx(exact_monopole(b, a)).epsilon(1e-10));
  }
}

TEST_CASE("multipole weights") {
  CHECK(multipole_weight(0, 0) == 1.0);
  CHECK(multipole_weight(1, 2) == Approx(2.0 / 5.0).epsilon(1e-14));
  CHECK(multipole_weight(2, 2) == Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(multipole_weight(2, 4) == Approx(2.0 / 7.0).epsilon(1e-14));
  CHECK(multipole_weight(1, 1) == 0.0);
  CHECK(multipole_weight(1, 4) == 0.0);
  // sum_k (2k+1) (l k l; 0 0 0)^2 = 1.
  for (int l = 0; l <= 4; ++l) {
    double sum = 0.0;
    for (int k = 0; k <= 2 * l; ++k) sum += (2 * k + 1) * multipole_weight(l, k) / (2 * l + 1);
    CHECK(sum == Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("ansatz elements") {
  const auto rounded = ScreeningParams::rounded();
  CHECK(approx_inter(SubshellKey(2, 0), SubshellKey(1, 0)) ==
        Approx(17.0 / 81.0).epsilon(1e-14));
  CHECK(approx_inter(SubshellKey(2, 1), SubshellKey(1, 0), rounded) ==
        Approx(0.158375).epsilon(1e-12));
  CHECK(approx_inter(SubshellKey(3, 0), SubshellKey(1, 0), rounded) ==
        Approx(0.0992222).epsilon(1e-6));
  CHECK_THROWS_AS(approx_inter(SubshellKey(2, 0), SubshellKey(2, 1)), InvalidArgument);
  CHECK(approx_intra(SubshellKey(1, 0), SubshellKey(1, 0)) == 0.625);
  CHECK(approx_intra(SubshellKey(2, 0), SubshellKey(2, 0)) == 0.15625);
  CHECK(approx_intra(SubshellKey(2, 0), SubshellKey(2, 1), rounded) ==
        Approx(0.172344).epsilon(1e-6));
  CHECK_THROWS_AS(approx_intra(SubshellKey(1, 0), SubshellKey(2, 0)), InvalidArgument);
  CHECK(approx_element(SubshellKey(1, 0), SubshellKey(3, 2)) ==
        approx_inter(SubshellKey(3, 2), SubshellKey(1, 0)));
}

TEST_CASE("difference grid against the printed table") {
  const auto grid = difference_grid(3);
  CHECK(grid.size() == 21);
  double mean = 0.0, printed_mean = 0.0;
  for (const auto& r : grid) {
    const int ka = 10 * r.pair.a.n + r.pair.a.l;
    const int kb = 10 * r.pair.b.n + r.pair.b.l;
    const double printed = oracle::printed_table1().at({ka, kb});
    CAPTURE(ka);
    CAPTURE(kb);
    CHECK(r.diff == Approx(std::abs(r.exact - r.approx)).epsilon(1e-15));
    CHECK(r.exact > 0.0);
    CHECK(r.approx > 0.0);
    CHECK(std::abs(r.diff - printed) <= 1e-3);
    mean += r.diff / 21.0;
    printed_mean += printed / 21.0;
  }
  CHECK(std::abs(mean - printed_mean) < 2e-4);
  CHECK_THROWS_AS(difference_grid(0), InvalidArgument);
}

TEST_CASE("calibrations") {
  CHECK(calibrate_alpha() == Approx(26.0 / 81.0).epsilon(1e-9));
  CHECK(calibrate_intra_factor() == Approx(5.0 / 16.0).epsilon(1e-9));
  const auto grid = difference_grid(2);
  for (const auto& r : grid) {
    if (r.pair.a == SubshellKey(1, 0) && r.pair.b == SubshellKey(2, 0)) {
      CHECK(r.diff < 1e-9);
    }
  }
}

TEST_CASE("Slater integral arguments") {
  CHECK_THROWS_AS(slater_integral(SubshellKey(1, 0), SubshellKey(2, 0), -1), InvalidArgument);
  // F2(2p,2p) for hydrogen is 45/512.
  CHECK(std::abs(slater_integral(SubshellKey(2, 1), SubshellKey(2, 1), 2) - 45.0 / 512.0) <
        1e-9);
}
