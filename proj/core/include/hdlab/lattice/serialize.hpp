#pragma once

#include <nlohmann/json.hpp>

#include "hdlab/lattice/filtration.hpp"
#include "hdlab/lattice/prop34.hpp"

namespace hdlab::lattice {

/// {p, entries: [{i, a, b, z: {unit, shift, precision?}}]}; big values as decimal strings.
nlohmann::json to_json(const LatticeFiltration& f);
LatticeFiltration filtration_from_json(const nlohmann::json& j);

/// {p, nu, window, lambda_points: [{j, lambda, f}]}.
nlohmann::json to_json(const Prop34Instance& inst);
Prop34Instance prop34_from_json(const nlohmann::json& j);

}  // namespace hdlab::lattice
