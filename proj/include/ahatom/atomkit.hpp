#pragma once

#include <vector>

#include "ahatom/observables.hpp"
#include "ahatom/screening.hpp"
#include "ahatom/subshell.hpp"

namespace ahatom {

enum class SearchMode {
  /// Exact minimization over every occupancy vector (the reference).
  exhaustive,
  /// Single-electron moves from the Madelung filling to a fixed point.
  local,
};

struct SearchSpec {
  double z_nuclear = 1.0;
  int n_electrons = 1;
  int n_cap = 7;
  int l_max = 4;
  SearchMode mode = SearchMode::exhaustive;

  /// Throws InvalidArgument on negative counts, bad caps, or more electrons
  /// than subshells with n <= n_cap, l <= l_max can hold.
  void validate() const;
};

/// Energies closer than this are treated as degenerate.
inline constexpr double kEnergyTieTolerance = 1e-10;

struct SearchResult {
  AtomModel atom;
  /// Other configurations within kEnergyTieTolerance of the minimum that the
  /// search encountered; the returned one won the Madelung tie-break.
  std::vector<Configuration> ties;
};

/// Minimizes the total energy over configurations with
/// sum g = n_electrons, n <= n_cap and l <= l_max. Configurations with a
/// non-positive effective charge anywhere are excluded.
///
/// The exhaustive mode is exact: the screening felt by shell n depends on
/// the inner shells only through their electron count and sum of l(l+1),
/// so partial configurations agreeing in both are interchangeable and only
/// the best is kept. Within a shell, for fixed electron count and sum of
/// l(l+1), the energy grows with sum g (l(l+1))^2, which fixes the best
/// occupancy pattern independently of the inner shells.
SearchResult search_ground_state(const SearchSpec& spec,
                                 const ScreeningParams& params = {});

AtomModel ground_state(const SearchSpec& spec, const ScreeningParams& params = {});

/// Binding energy at the configuration, with unbound subshells counted as
/// infeasible (returns -infinity).
double feasible_binding(double z_nuclear, const Configuration& config,
                        const ScreeningParams& params);

struct IonizationRecord {
  SubshellKey shell;
  double ip_hartree = 0.0;
  double ip_ev = 0.0;
};

/// E(Z, N - 1_{nl}) - E(Z, N) with the ion frozen in the neutral's
/// configuration minus one electron in `shell`. With `relax_ion` the ion is
/// instead re-minimized by the exhaustive search.
/// Throws InvalidArgument if `shell` is unoccupied.
IonizationRecord ionization_potential(double z_nuclear, const Configuration& config,
                                      const SubshellKey& shell,
                                      const ScreeningParams& params = {},
                                      bool relax_ion = false);

/// Ionization potentials of the tabulated shells for Z, using the reference
/// ground configuration. Throws InvalidArgument unless 1 <= Z <= 60.
std::vector<IonizationRecord> ip_table(int z, const ScreeningParams& params = {});

}  // namespace ahatom
