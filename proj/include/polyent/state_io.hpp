// state_io.hpp — text file format for pure and mixed states.
//
// JSON layout (numbers written with 17 significant digits):
//   { "kind": "pure",  "n_qubits": k, "amplitudes": [[re, im], ...] }
//   { "kind": "mixed", "n_qubits": k, "matrix": [[[re, im], ...], ...] }
// Qubit 0 is the most significant bit of the basis index.

#pragma once

#include <string>
#include <variant>

#include "polyent/states.hpp"

namespace polyent {

using StateVariant = std::variant<PureState, DensityMatrix>;

/// Throws ParseError on malformed input and InvariantViolation when the
/// loaded object fails its type invariants.
StateVariant load_state(const std::string &path);

void save_state(const PureState &psi, const std::string &path);
void save_state(const DensityMatrix &rho, const std::string &path);

} // namespace polyent
