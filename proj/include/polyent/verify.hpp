// verify.hpp — seeded ensemble property suites.
//
// The theorem suite drives Haar-random 3- and 4-qubit states (restricted to
// those with at least two entangled pairs) through every inequality region;
// the oracle suite pits the roof optimizer against the two-qubit closed forms.
// All sampling is deterministic in the seed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyent/exponents.hpp"

namespace polyent {

struct SuiteCheck {
    std::string name;
    long total = 0;
    long failures = 0;
};

struct VerifyReport {
    std::vector<SuiteCheck> checks;

    SuiteCheck &check(const std::string &name);
    void record(const std::string &name, bool pass);
    bool all_pass() const;
    long total_checks() const;
    long total_failures() const;
};

struct EnsembleConfig {
    int n_states_3q = 500;
    int n_states_4q = 200;
    std::uint64_t seed = 42;
    int grid_points = 20;
    double slack = tol::region_slack;
    double entangled_tol = tol::entangled;
};

/// Theorem/corollary regions: f(α₀)=1 within 1e-10, polygamy on [0,α₀],
/// monogamy on [2,4] (C) and [√2,3] (E), the CoA polygamy inequality, the
/// strict reversal at α ∈ {−2,−1}, and the α₁ sandwich.
VerifyReport run_theorem_suite(const EnsembleConfig &cfg);

struct OracleConfig {
    int n_states = 200;       // random rank-2 two-qubit states
    int n_eq12_states = 100;  // random 3-qubit pure states for the E_a sum bound
    std::uint64_t seed = 777;
    RestartBudget budget;
    double agree_tol = tol::oracle_agree;
};

/// Roof optimizer vs closed forms: |min−C| and |max−Σλ| within agree_tol,
/// direction ordering with 1e-6 slack, decomposition reconstruction within
/// 1e-6 Frobenius, and the assisted-EoF sum bound on 3-qubit states.
VerifyReport run_oracle_suite(const OracleConfig &cfg);

/// Deterministic rank-2 two-qubit state from a Gaussian 4×2 factor.
DensityMatrix random_rank2_two_qubit(std::uint64_t seed);

} // namespace polyent
