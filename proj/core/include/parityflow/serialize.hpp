#pragma once

#include <string>
#include <string_view>

#include "parityflow/circuit.hpp"
#include "parityflow/combined.hpp"
#include "parityflow/tableau.hpp"

namespace parityflow {

// {"n":..,"kind":"flow"|"clifford","rows":[[kappa,"xi","zeta"],..]}; bit strings start at qubit 1.
std::string tableau_to_json(const Tableau& t, int indent = -1);
Tableau tableau_from_json(std::string_view text);

// Flow dump plus "push_phases" ordered X_1..X_n, Z_1..Z_n.
std::string combined_to_json(const CombinedTableau& ct, int indent = -1);
CombinedTableau combined_from_json(std::string_view text);

std::string timeline_to_json(const Circuit& c, const Timeline& tl, int indent = -1);

}  // namespace parityflow
