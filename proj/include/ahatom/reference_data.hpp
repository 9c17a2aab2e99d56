#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahatom/subshell.hpp"

namespace ahatom {

enum class Unit { hartree, eV, dimensionless };

std::string_view to_string(Unit unit);
Unit parse_unit(std::string_view text);

struct ReferenceRow {
  int z = 0;
  std::string label;
  double value = 0.0;
  Unit unit = Unit::dimensionless;
};

/// Externally computed comparison values keyed by (Z, label), e.g.
/// (18, "E_HF") or (11, "IP_HF:2p").
///
/// CSV layout: header `Z,label,value,unit`, one row per value, `#` comments.
class ReferenceDataset {
 public:
  ReferenceDataset() = default;

  /// Throws InvalidArgument on malformed rows or duplicate (Z, label) pairs.
  static ReferenceDataset parse(std::string_view csv);
  static ReferenceDataset load(const std::string& path);
  /// The transcription shipped with the library.
  static const ReferenceDataset& bundled();

  void add(ReferenceRow row);
  std::optional<double> find(int z, std::string_view label) const;
  const std::vector<ReferenceRow>& rows() const { return rows_; }

 private:
  std::vector<ReferenceRow> rows_;
  std::map<std::pair<int, std::string>, std::size_t, std::less<>> index_;
};

/// `Z config-string` lines, `#` comments.
std::map<int, Configuration> parse_configuration_manifest(std::string_view text);

/// `Z shell1 shell2 shell3` lines, `#` comments.
std::map<int, std::vector<SubshellKey>> parse_shell_manifest(std::string_view text);

/// Ground configuration behind the reference binding energies, 1 <= Z <= 60.
const Configuration& reference_configuration(int z);

/// Subshells whose ionization potentials are tabulated for Z, 1 <= Z <= 60.
const std::vector<SubshellKey>& ip_shells(int z);

inline constexpr int kMaxTabulatedZ = 60;

namespace bundled {
std::string_view reference_configurations();
std::string_view ip_shells();
std::string_view table2_reference();
}  // namespace bundled

}  // namespace ahatom
