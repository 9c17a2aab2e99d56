#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ahatom {

/// An (n, l) subshell. The magnetic and spin quantum numbers only enter
/// through the degeneracy 2(2l+1).
struct SubshellKey {
  int n = 1;
  int l = 0;

  constexpr SubshellKey() = default;
  /// Throws InvalidArgument unless n >= 1 and 0 <= l < n.
  SubshellKey(int n_, int l_);

  constexpr int capacity() const { return 2 * (2 * l + 1); }
  constexpr int l_weight() const { return l * (l + 1); }

  /// Spectroscopic label such as "3d".
  std::string label() const;
  /// Parses a label such as "3d"; throws InvalidArgument on malformed input.
  static SubshellKey parse(std::string_view token);

  friend constexpr auto operator<=>(const SubshellKey&,
                                    const SubshellKey&) = default;
};

char l_letter(int l);
int l_from_letter(char c);

/// Madelung-Klechkowski ordering: increasing n + l, ties by increasing n.
bool madelung_less(const SubshellKey& a, const SubshellKey& b);

/// Subshells with n <= n_cap and l <= l_max in Madelung order.
std::vector<SubshellKey> madelung_order(int n_cap = 7, int l_max = 4);

/// Occupation numbers aggregated per (n, l) subshell.
///
/// Only occupied subshells are stored; setting an occupancy to zero erases the
/// entry. Iteration is in (n, l) lexicographic order.
class Configuration {
 public:
  using Map = std::map<SubshellKey, int>;

  Configuration() = default;
  explicit Configuration(const Map& occupancy);

  /// Throws InvalidArgument if count is negative or exceeds the capacity.
  void set(const SubshellKey& key, int count);
  void add(const SubshellKey& key, int delta);
  int occupancy(const SubshellKey& key) const;
  bool occupied(const SubshellKey& key) const { return occupancy(key) > 0; }

  int total_electrons() const { return total_; }
  const Map& occupancies() const { return occ_; }
  bool empty() const { return occ_.empty(); }
  std::size_t size() const { return occ_.size(); }
  auto begin() const { return occ_.begin(); }
  auto end() const { return occ_.end(); }

  /// Copy with one electron moved out of `key`; throws if `key` is empty.
  Configuration without_electron(const SubshellKey& key) const;

  /// Whitespace-separated tokens in Madelung order, e.g. "1s2 2s2 2p6".
  std::string to_string() const;

  /// Parses `1s2 2s2 2p6 3d10` style strings. A leading noble-gas core
  /// token ([He], [Ne], [Ar], [Kr], [Xe], [Rn]) expands to its Madelung
  /// filling. Repeated subshells and overfilled subshells are rejected.
  static Configuration parse(std::string_view text);

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Map occ_;
  int total_ = 0;
};

/// Fills subshells in Madelung order up to capacity.
Configuration aufbau_configuration(int n_electrons, int n_cap = 7,
                                   int l_max = 4);

/// True if `a` should win a tie against `b`: comparing occupancies subshell
/// by subshell in Madelung order, the first difference favours the
/// configuration with more electrons in the earlier subshell.
bool madelung_preferred(const Configuration& a, const Configuration& b);

}  // namespace ahatom
