#pragma once

namespace ahatom::units {

/// CODATA hartree energy in electronvolts.
inline constexpr double hartree_ev = 27.211386;

/// Bohr radius in angstrom, as used for the s -> q conversion.
inline constexpr double bohr_angstrom = 0.529177;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace ahatom::units
