#include "ahatom/atomkit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "ahatom/error.hpp"
#include "ahatom/reference_data.hpp"
#include "ahatom/units.hpp"

namespace ahatom {

namespace {

constexpr int kMaxL = 7;
constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

int capacity_below(int n_cap, int l_max) {
  int total = 0;
  for (int n = 1; n <= n_cap; ++n) {
    for (int l = 0; l < n && l <= l_max; ++l) total += 2 * (2 * l + 1);
  }
  return total;
}

// Occupancy pattern of one shell, representative of all patterns with the
// same electron count and sum of l(l+1).
struct ShellOption {
  std::array<int, kMaxL + 1> occ{};
  int electrons = 0;
  int l_sum = 0;
  long long l_sq_sum = 0;
};

// True if `a` fills lower l first (Madelung order within one shell).
bool lower_l_first(const ShellOption& a, const ShellOption& b) {
  for (std::size_t l = 0; l < a.occ.size(); ++l) {
    if (a.occ[l] != b.occ[l]) return a.occ[l] > b.occ[l];
  }
  return false;
}

std::vector<ShellOption> shell_options(int n, int l_max, int max_electrons) {
  const int top_l = std::min(n - 1, l_max);
  std::map<std::pair<int, int>, ShellOption> best;
  ShellOption cur;
  // Depth-first over l = 0..top_l.
  auto recurse = [&](auto&& self, int l) -> void {
    if (l > top_l) {
      auto key = std::make_pair(cur.electrons, cur.l_sum);
      auto it = best.find(key);
      if (it == best.end() || cur.l_sq_sum > it->second.l_sq_sum ||
          (cur.l_sq_sum == it->second.l_sq_sum && lower_l_first(cur, it->second))) {
        best[key] = cur;
      }
      return;
    }
    const int cap = 2 * (2 * l + 1);
    const int w = l * (l + 1);
    for (int g = 0; g <= cap && cur.electrons + g <= max_electrons; ++g) {
      cur.occ[static_cast<std::size_t>(l)] = g;
      cur.electrons += g;
      cur.l_sum += g * w;
      cur.l_sq_sum += static_cast<long long>(g) * w * w;
      self(self, l + 1);
      cur.electrons -= g;
      cur.l_sum -= g * w;
      cur.l_sq_sum -= static_cast<long long>(g) * w * w;
    }
    cur.occ[static_cast<std::size_t>(l)] = 0;
  };
  recurse(recurse, 0);
  std::vector<ShellOption> out;
  out.reserve(best.size());
  for (auto& [_, opt] : best) out.push_back(opt);
  return out;
}

struct DpState {
  int electrons = 0;
  int l_sum = 0;
  double binding = 0.0;
  int parent = -1;
  int option = -1;
};

struct Layer {
  int n = 0;
  std::vector<ShellOption> options;
  std::vector<DpState> states;
};

Configuration reconstruct(const std::vector<Layer>& layers, std::size_t depth,
                          int index) {
  Configuration config;
  for (std::size_t d = depth + 1; d-- > 1;) {
    const auto& st = layers[d].states[static_cast<std::size_t>(index)];
    const auto& opt = layers[d].options[static_cast<std::size_t>(st.option)];
    for (std::size_t l = 0; l < opt.occ.size(); ++l) {
      if (opt.occ[l] > 0) {
        config.set(SubshellKey(layers[d].n, static_cast<int>(l)), opt.occ[l]);
      }
    }
    index = st.parent;
  }
  return config;
}

// Partial configuration of `state`, a candidate in the layer being built.
Configuration extend(const std::vector<Layer>& layers, const DpState& state,
                     const Layer& building) {
  Configuration config = reconstruct(layers, layers.size() - 1, state.parent);
  const auto& opt = building.options[static_cast<std::size_t>(state.option)];
  for (std::size_t l = 0; l < opt.occ.size(); ++l) {
    if (opt.occ[l] > 0) {
      config.set(SubshellKey(building.n, static_cast<int>(l)), opt.occ[l]);
    }
  }
  return config;
}

std::vector<Configuration> neighbours(const Configuration& c,
                                      const std::vector<SubshellKey>& keys) {
  std::vector<Configuration> out;
  for (const auto& [from, g] : c) {
    for (const auto& to : keys) {
      if (to == from || c.occupancy(to) >= to.capacity()) continue;
      Configuration moved = c;
      moved.add(from, -1);
      moved.add(to, +1);
      out.push_back(std::move(moved));
    }
  }
  return out;
}

struct Ascent {
  Configuration config;
  double binding = kInfeasible;
};

// Steepest ascent in binding energy from the Madelung filling.
Ascent ascend(const SearchSpec& spec, const ScreeningParams& p,
              const std::vector<SubshellKey>& keys) {
  Ascent cur{aufbau_configuration(spec.n_electrons, spec.n_cap, spec.l_max), 0.0};
  cur.binding = feasible_binding(spec.z_nuclear, cur.config, p);
  while (true) {
    Ascent best = cur;
    for (auto& cand : neighbours(cur.config, keys)) {
      const double b = feasible_binding(spec.z_nuclear, cand, p);
      if (b > best.binding + kEnergyTieTolerance) best = {std::move(cand), b};
    }
    if (best.binding == cur.binding) return cur;
    cur = std::move(best);
  }
}

// Upper bound on the binding the remaining electrons can add once shells
// below n are fixed: an electron in shell m >= n sees at most
// Z - N_in (1 - alpha/n) + beta L_in / n^2, and same-shell terms only lower it.
double remaining_bound(double z, const DpState& s, int remaining, int n,
                       const ScreeningParams& p) {
  if (remaining == 0) return 0.0;
  const double nn = static_cast<double>(n) * n;
  const double zb = z - s.electrons * (1.0 - p.alpha / n) + p.beta * s.l_sum / nn;
  if (!(zb > 0.0)) return kInfeasible;
  return remaining * zb * zb / (2.0 * nn);
}

SearchResult exhaustive_search(const SearchSpec& spec, const ScreeningParams& p,
                               double incumbent) {
  const double z = spec.z_nuclear;
  const int total = spec.n_electrons;
  const int l_sum_cap = total * kMaxL * (kMaxL + 1);
  // layers[0] is the empty core; layers[n] holds states after shell n.
  std::vector<Layer> layers(1);
  layers[0].states.push_back(DpState{});

  for (int n = 1; n <= spec.n_cap; ++n) {
    const Layer& prev = layers.back();
    Layer next;
    next.n = n;
    next.options = shell_options(n, spec.l_max, total);
    const double nn = static_cast<double>(n) * n;
    const int top_l = std::min(n - 1, spec.l_max);
    std::array<double, kMaxL + 1> intra_self{};
    for (int l = 0; l <= top_l; ++l) {
      intra_self[static_cast<std::size_t>(l)] = kappa_intra(n, l, p);
    }
    std::vector<int> index(static_cast<std::size_t>(total + 1) * (l_sum_cap + 1), -1);
    const bool last = n == spec.n_cap;

    for (std::size_t si = 0; si < prev.states.size(); ++si) {
      const DpState& s = prev.states[si];
      if (s.binding + remaining_bound(z, s, total - s.electrons, n, p) <
          incumbent - kEnergyTieTolerance) {
        continue;
      }
      const double inner =
          s.electrons * (1.0 - p.alpha / n) - p.beta * s.l_sum / nn;
      for (std::size_t oi = 0; oi < next.options.size(); ++oi) {
        const ShellOption& opt = next.options[oi];
        const int electrons = s.electrons + opt.electrons;
        // Options are ordered by electron count.
        if (electrons > total) break;
        if (last && electrons != total) continue;
        const double same = opt.electrons + p.beta * opt.l_sum / nn;
        double shell_binding = 0.0;
        bool feasible = true;
        for (int l = 0; l <= top_l; ++l) {
          const int g = opt.occ[static_cast<std::size_t>(l)];
          if (g == 0) continue;
          const double zl = z - inner -
                            p.intra_factor * (same - intra_self[static_cast<std::size_t>(l)]);
          if (!(zl > 0.0)) {
            feasible = false;
            break;
          }
          shell_binding += g * zl * zl / (2.0 * nn);
        }
        if (!feasible) continue;
        DpState cand{electrons, s.l_sum + opt.l_sum, s.binding + shell_binding,
                     static_cast<int>(si), static_cast<int>(oi)};
        int& slot = index[static_cast<std::size_t>(cand.electrons) * (l_sum_cap + 1) +
                          static_cast<std::size_t>(cand.l_sum)];
        if (slot < 0) {
          slot = static_cast<int>(next.states.size());
          next.states.push_back(cand);
          continue;
        }
        DpState& held = next.states[static_cast<std::size_t>(slot)];
        if (cand.binding > held.binding + kEnergyTieTolerance) {
          held = cand;
        } else if (std::abs(cand.binding - held.binding) <= kEnergyTieTolerance) {
          // Identical futures: keep the Madelung-preferred partial filling.
          const auto ca = extend(layers, cand, next);
          const auto cb = extend(layers, held, next);
          if (madelung_preferred(ca, cb)) held = cand;
        }
      }
    }
    layers.push_back(std::move(next));
  }

  const auto& final_states = layers.back().states;
  if (final_states.empty()) {
    throw NumericalError("no bound configuration with " + std::to_string(total) +
                         " electrons for Z=" + std::to_string(z));
  }
  double best = kInfeasible;
  for (const auto& s : final_states) best = std::max(best, s.binding);
  std::vector<Configuration> candidates;
  for (std::size_t i = 0; i < final_states.size(); ++i) {
    if (final_states[i].binding >= best - kEnergyTieTolerance) {
      candidates.push_back(reconstruct(layers, layers.size() - 1, static_cast<int>(i)));
    }
  }
  std::sort(candidates.begin(), candidates.end(), madelung_preferred);
  SearchResult result;
  result.atom = make_atom(z, candidates.front(), p);
  result.ties.assign(candidates.begin() + 1, candidates.end());
  return result;
}

SearchResult local_search(const SearchSpec& spec, const ScreeningParams& p) {
  const double z = spec.z_nuclear;
  const auto keys = madelung_order(spec.n_cap, spec.l_max);
  const Ascent top = ascend(spec, p, keys);
  if (top.binding == kInfeasible) {
    throw NumericalError("local search found no bound configuration for Z=" +
                         std::to_string(z));
  }
  const Configuration& current = top.config;
  const double current_binding = top.binding;

  // Walk the degenerate plateau around the fixed point so that ties resolve
  // the same way as in the exhaustive search.
  std::vector<Configuration> plateau{current};
  std::set<std::string> seen{current.to_string()};
  for (std::size_t i = 0; i < plateau.size() && plateau.size() < 4096; ++i) {
    for (auto& cand : neighbours(plateau[i], keys)) {
      if (!seen.insert(cand.to_string()).second) continue;
      if (std::abs(feasible_binding(z, cand, p) - current_binding) <= kEnergyTieTolerance) {
        plateau.push_back(std::move(cand));
      }
    }
  }
  std::sort(plateau.begin(), plateau.end(), madelung_preferred);
  SearchResult result;
  result.atom = make_atom(z, plateau.front(), p);
  result.ties.assign(plateau.begin() + 1, plateau.end());
  return result;
}

}  // namespace

void SearchSpec::validate() const {
  if (n_electrons < 0) throw InvalidArgument("negative electron count");
  if (!(z_nuclear > 0.0)) throw InvalidArgument("nuclear charge must be positive");
  if (n_cap < 1) throw InvalidArgument("n_cap must be >= 1");
  if (l_max < 0 || l_max > kMaxL) {
    throw InvalidArgument("l_max must lie in [0, " + std::to_string(kMaxL) + "]");
  }
  const int cap = capacity_below(n_cap, l_max);
  if (n_electrons > cap) {
    throw InvalidArgument(std::to_string(n_electrons) +
                          " electrons do not fit below n_cap=" +
                          std::to_string(n_cap) + " (capacity " +
                          std::to_string(cap) + ")");
  }
}

double feasible_binding(double z_nuclear, const Configuration& config,
                        const ScreeningParams& params) {
  const auto e = total_energy(z_nuclear, config, params);
  return e.unbound.empty() ? e.binding : kInfeasible;
}

SearchResult search_ground_state(const SearchSpec& spec,
                                 const ScreeningParams& params) {
  spec.validate();
  params.validate();
  if (spec.n_electrons == 0) {
    return SearchResult{make_atom(spec.z_nuclear, Configuration{}, params), {}};
  }
  if (spec.mode == SearchMode::local) return local_search(spec, params);
  // The local optimum seeds the pruning bound.
  const auto seed = ascend(spec, params, madelung_order(spec.n_cap, spec.l_max));
  return exhaustive_search(spec, params, seed.binding);
}

AtomModel ground_state(const SearchSpec& spec, const ScreeningParams& params) {
  return search_ground_state(spec, params).atom;
}

IonizationRecord ionization_potential(double z_nuclear, const Configuration& config,
                                      const SubshellKey& shell,
                                      const ScreeningParams& params,
                                      bool relax_ion) {
  const Configuration frozen = config.without_electron(shell);
  const double neutral = total_energy(z_nuclear, config, params).binding;
  double ion = 0.0;
  if (relax_ion) {
    SearchSpec spec;
    spec.z_nuclear = z_nuclear;
    spec.n_electrons = frozen.total_electrons();
    ion = ground_state(spec, params).energy.binding;
  } else {
    ion = total_energy(z_nuclear, frozen, params).binding;
  }
  IonizationRecord rec;
  rec.shell = shell;
  rec.ip_hartree = neutral - ion;
  rec.ip_ev = rec.ip_hartree * units::hartree_ev;
  return rec;
}

std::vector<IonizationRecord> ip_table(int z, const ScreeningParams& params) {
  const auto& config = reference_configuration(z);
  std::vector<IonizationRecord> out;
  for (const auto& shell : ip_shells(z)) {
    out.push_back(ionization_potential(z, config, shell, params));
  }
  return out;
}

}  // namespace ahatom
