// Frozen reference data: the quadratic and quartic invariant densities, the
// canonical quartic-grade basis, the coefficient relations and witness data
// of the quartic singular family, translation/derivative image states, and
// the two-point pair states entering the zero-product decompositions.
//
// Everything is rebuilt from these tables at runtime; data/golden.json is a
// serialized snapshot of the same states and guards against drift.

#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaudin/algebra.hpp"

namespace gaudin {

// The 14 basis states of the relevant quartic-grade subspace over one point,
// 1-based to match the coefficient tables.
State quartic_basis_state(int i);

// sum_i xi_i * basis_i.
State from_quartic_coordinates(const std::array<QExt, 14>& xi);

// Coordinates of the quartic density sigma_3 and of the alternative quartic
// density in the 14-state basis.
std::array<QExt, 14> sigma3_coordinates();
std::array<QExt, 14> quartic_alt_coordinates();

// The singular quartic family: free coordinate indices, and each dependent
// coordinate as a linear form over the free ones.
const std::vector<int>& quartic_free_indices();
const std::vector<std::pair<int, std::vector<std::pair<int, Rat>>>>&
quartic_coordinate_relations();

// Extends an assignment of the free coordinates to all 14 via the relations.
// Missing free indices default to zero; non-free keys are rejected.
std::array<QExt, 14> quartic_coordinates_from_free(const std::map<int, QExt>& free_values);

// Witness coefficients rho_1..rho_8 of the mode-1 singularity identity, as
// linear forms in the 14 coordinates.
std::array<QExt, 8> quartic_witness_rhos(const std::array<QExt, 14>& xi);

// The three witness states G^r (r = 1,2,3) assembled from rho.
std::array<State, 3> quartic_witness_states(const std::array<QExt, 8>& rho);

// Tagged reference states; unknown tags throw argument_error.
State golden_state(const std::string& tag);
const std::vector<std::string>& golden_tags();

// JSON payload {"version":1,"states":[{"tag":...,"expr":...}...]} with every
// tagged state in canonical text form.
std::string golden_json();

}  // namespace gaudin
