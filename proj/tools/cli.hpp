#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahatom/observables.hpp"

namespace ahatom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json atom_to_json(const AtomModel& atom);

/// Rebuilds the model from the Z, configuration and parameters stored in
/// `j` and recomputes everything else.
AtomModel atom_from_json(const nlohmann::json& j);

}  // namespace ahatom::cli
