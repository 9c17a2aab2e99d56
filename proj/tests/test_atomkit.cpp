#include <doctest.h>

#include <cmath>
#include <limits>

#include "ahatom/atomkit.hpp"
#include "ahatom/error.hpp"
#include "ahatom/reference_data.hpp"
#include "ahatom/units.hpp"
#include "oracles.hpp"

using namespace ahatom;
using doctest::Approx;

namespace {
SearchSpec spec_for(int z, int electrons, int n_cap = 7, int l_max = 4,
                    SearchMode mode = SearchMode::exhaustive) {
  SearchSpec s;
  s.z_nuclear = z;
  s.n_electrons = electrons;
  s.n_cap = n_cap;
  s.l_max = l_max;
  s.mode = mode;
  return s;
}
}  // namespace

TEST_CASE("search spec validation") {
  CHECK_THROWS_AS(spec_for(2, -1).validate(), InvalidArgument);
  CHECK_THROWS_AS(spec_for(3, 3, 1).validate(), InvalidArgument);
  CHECK_THROWS_AS(spec_for(30, 30, 3).validate(), InvalidArgument);
  CHECK_NOTHROW(spec_for(28, 28, 3).validate());
  CHECK(ground_state(spec_for(5, 0)).config.empty());
}

TEST_CASE("exhaustive search equals brute-force enumeration") {
  for (int n_cap : {2, 3}) {
    for (int z = 1; z <= 14; ++z) {
      for (int electrons : {z - 1, z, z + 1}) {
        if (electrons < 1) continue;
        int cap = 0;
        for (const auto& k : madelung_order(n_cap, 2)) cap += k.capacity();
        if (electrons > cap) continue;
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& c : oracle::all_configurations(electrons, n_cap, 2)) {
          best = std::max(best, feasible_binding(z, c, {}));
        }
        if (!std::isfinite(best)) continue;
        const auto atom = ground_state(spec_for(z, electrons, n_cap, 2));
        CAPTURE(z);
        CAPTURE(electrons);
        CHECK(atom.energy.binding == Approx(best).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("exhaustive search never loses to the Madelung filling") {
  for (int z = 1; z <= kMaxTabulatedZ; ++z) {
    const auto atom = ground_state(spec_for(z, z));
    CHECK(atom.n_electrons() == z);
    CHECK(atom.energy.unbound.empty());
    CHECK(atom.energy.binding >= binding_energy(z, aufbau_configuration(z)) - 1e-9);
    CHECK(atom.energy.binding >= binding_energy(z, reference_configuration(z)) - 1e-9);
  }
}

TEST_CASE("local and exhaustive search agree for light atoms") {
  for (int z = 1; z <= 20; ++z) {
    const auto ex = ground_state(spec_for(z, z));
    const auto lo = ground_state(spec_for(z, z, 7, 4, SearchMode::local));
    CAPTURE(z);
    CHECK(ex.config == lo.config);
  }
}

TEST_CASE("ground states of light atoms") {
  CHECK(ground_state(spec_for(2, 2)).config.to_string() == "1s2");
  CHECK(ground_state(spec_for(2, 2)).energy.binding == Approx(2.84766).epsilon(1e-6));

  // A lone outer electron feels the same charge in every subshell of its
  // shell, so 2s and 2p are degenerate and the tie goes to 2s.
  const auto s = Configuration::parse("1s2 2s1");
  const auto p = Configuration::parse("1s2 2p1");
  CHECK(binding_energy(3, s) == binding_energy(3, p));
  const auto li = search_ground_state(spec_for(3, 3));
  CHECK(li.atom.config == s);
  REQUIRE(li.ties.size() == 1);
  CHECK(li.ties.front() == p);
}

TEST_CASE("ions") {
  const auto li_plus = ground_state(spec_for(3, 2));
  CHECK(li_plus.config.to_string() == "1s2");
  CHECK(li_plus.energy.binding == Approx(2.0 * std::pow(3 - 0.3125, 2) / 2.0));
  // For H- the 1s electrons screen each other more (5/16) than a 1s core
  // screens 2s, so the model puts the second electron in 2s.
  const auto h_minus = ground_state(spec_for(1, 2));
  CHECK(h_minus.config.to_string() == "1s1 2s1");
  CHECK(h_minus.energy.binding ==
        Approx(0.5 + std::pow(13.0 / 81.0, 2) / 8.0).epsilon(1e-14));
}

TEST_CASE("ionization potentials") {
  const auto he = ionization_potential(2, Configuration::parse("1s2"), SubshellKey(1, 0));
  CHECK(he.ip_hartree == Approx(729.0 / 256.0 - 2.0).epsilon(1e-14));
  CHECK(std::abs(he.ip_ev - 23.0563) < 0.05 + 0.002 * 23.0563);
  CHECK(he.ip_ev == he.ip_hartree * units::hartree_ev);

  const auto li = Configuration::parse("1s2 2s1");
  CHECK(std::abs(ionization_potential(3, li, SubshellKey(2, 0)).ip_ev - 5.93) < 0.05);
  CHECK(std::abs(ionization_potential(3, li, SubshellKey(1, 0)).ip_ev - 64.12) < 0.2);

  const auto h = ionization_potential(1, Configuration::parse("1s1"), SubshellKey(1, 0));
  CHECK(h.ip_ev == Approx(13.605693).epsilon(1e-12));

  CHECK_THROWS_AS(ionization_potential(3, li, SubshellKey(2, 1)), InvalidArgument);

  // Relaxing the ion can only lower its energy.
  const auto ne = Configuration::parse("1s2 2s2 2p6");
  const auto frozen = ionization_potential(10, ne, SubshellKey(1, 0));
  const auto relaxed = ionization_potential(10, ne, SubshellKey(1, 0), {}, true);
  CHECK(relaxed.ip_hartree <= frozen.ip_hartree + 1e-12);
}

TEST_CASE("ionization potential is a difference of two energies") {
  for (int z = 1; z <= kMaxTabulatedZ; ++z) {
    const auto& config = reference_configuration(z);
    for (const auto& [key, g] : config) {
      const double direct =
          oracle::binding(z, config, 26.0 / 81.0, 0.412, 0.3125) -
          oracle::binding(z, config.without_electron(key), 26.0 / 81.0, 0.412, 0.3125);
      CHECK(ionization_potential(z, config, key).ip_hartree ==
            Approx(direct).epsilon(1e-10).scale(1e-9));
    }
  }
}

TEST_CASE("tabulated ionization potentials") {
  CHECK_THROWS_AS(ip_table(0), InvalidArgument);
  CHECK_THROWS_AS(ip_table(61), InvalidArgument);
  const auto be = ip_table(4);
  REQUIRE(be.size() == 2);
  CHECK(be[0].shell == SubshellKey(1, 0));
  CHECK(be[0].ip_ev > 118.0);
  CHECK(be[0].ip_ev < 130.0);
  CHECK(std::abs(be[1].ip_ev - 9.11561) < 0.05 + 0.002 * 9.11561);

  const auto na = ip_table(11);
  const double expected[] = {42.9851, 25.1571, 10.3722};
  REQUIRE(na.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(na[i].ip_ev - expected[i]) < 0.05 + 0.002 * expected[i]);
  }

  for (int z = 1; z <= kMaxTabulatedZ; ++z) {
    for (const auto& rec : ip_table(z)) CHECK(rec.ip_hartree > 0.0);
  }
}
