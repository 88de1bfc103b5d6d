// reproduce.hpp — the three worked examples with their reference values.
//
// Each example builds its state, runs the full measurement/threshold pipeline
// and compares every reference number against the computed one at a pinned
// tolerance. The CLI prints the rows; the acceptance suite asserts them.

#pragma once

#include <string>
#include <vector>

#include "polyent/exponents.hpp"

namespace polyent {

struct ExampleRow {
    std::string label;
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ExampleReport {
    int which = 0;
    std::vector<ExampleRow> rows;
    bool all_pass = true;
};

/// The 3-qubit W state (|100⟩+|010⟩+|001⟩)/√3.
PureState w3_state();

/// The 4-qubit generalized W-class state with a=b₂=1/√10, b₁=1/√15,
/// b₃=√(2/15), b₄=√(3/5).
PureState four_qubit_w_class_state();

ExampleReport run_example(int which);

} // namespace polyent
