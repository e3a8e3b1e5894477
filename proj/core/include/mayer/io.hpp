#pragma once

// JSON and text serialization: interaction matrices, potential configs, bound
// reports and reproduction tables.

#include <string>

#include <nlohmann/json.hpp>

#include "mayer/bounds.hpp"
#include "mayer/interaction_matrix.hpp"
#include "mayer/potentials.hpp"
#include "mayer/reference_values.hpp"

namespace mayer {

// {"n": int, "entries": [[i, j, value], ...], "hard_core_pairs": [[i, j], ...],
//  "cutoff": H (optional)}; 1-based, missing pairs are 0. Hard-core pairs get
// kDefaultHardCoreCutoff unless "cutoff" is given.
InteractionMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const InteractionMatrix& m);
InteractionMatrix load_matrix(const std::string& path);

// {"kind": "lennard-jones"} | {"kind": "inverse-power", "C": .., "p": ..}
// | {"kind": "hard-core", "a": .., "H": .., "tail": <potential>}
// | {"kind": "tabulated", "knots": [[r, V], ...]} | {"kind": "zero"}; "d"
// defaults to 3.
PairPotential potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const PairPotential& v);

// A built-in name ("lj", "lennard-jones", "zero"), inline JSON, or a path
// to a JSON file.
PairPotential parse_potential(const std::string& source);

// Finite numbers as numbers; inf and nan as the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);

// Fixed significant digits, "inf" for infinities.
std::string format_sig(double x, int digits = 6);

nlohmann::json report_to_json(const BoundReport& r);
// One row per radius bound: bound,integral,integral_error,inner,outer,radius.
std::string report_to_csv(const BoundReport& r);
std::string report_to_table(const BoundReport& r);

nlohmann::json reproduction_to_json(const Reproduction& r);
std::string reproduction_to_csv(const Reproduction& r);
std::string reproduction_to_table(const Reproduction& r);

}  // namespace mayer
