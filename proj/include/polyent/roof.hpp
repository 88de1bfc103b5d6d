// roof.hpp — convex-roof optimization over pure-state decompositions.
//
// Minimizes (or maximizes, for the assistance variants) the average pure-state
// measure Σ_j p_j M(|ψ_j⟩) over all decompositions ρ = Σ_j p_j |ψ_j⟩⟨ψ_j| of a
// fixed size m. Size-m decompositions of a rank-r state correspond exactly to
// m×r isometries applied to the scaled eigenvectors of ρ, so the search walks
// the isometry manifold with Givens rotations. Minimization results are upper
// bounds and maximization results lower bounds; consumers apply one-sided
// tolerances.

#pragma once

#include <cstdint>

#include "polyent/measures.hpp"

namespace polyent {

enum class RoofDirection { Min, Max };

struct RestartBudget {
    int restarts = 20;
    int decomposition_factor = 2;  // m = factor · rank(ρ)
    double step_init = 0.5;        // initial Givens angle
    double step_min = 1e-6;        // termination threshold for the step size
    std::uint64_t seed_salt = 0;   // mixed into the per-state deterministic seed
};

struct Decomposition {
    std::vector<double> weights;
    std::vector<PureState> states;
};

struct RoofResult {
    double value = 0.0;
    Decomposition best;
    int restarts_used = 0;
    bool converged = false;  // running best of the last 3 restarts agreed within 1e-4
};

/// Σ_j p_j |ψ_j⟩⟨ψ_j| of a decomposition; tests compare this against ρ.
CMatrix reconstruct(const Decomposition &d);

/// kind must be Concurrence or EoF (the assistance variants are direction=Max).
/// Throws RankTooHigh above rank 8. Non-convergence is reported through
/// RoofResult::converged, never an exception.
RoofResult roof_optimize(const DensityMatrix &rho, const PartitionSpec &part,
                         MeasureKind kind, RoofDirection direction,
                         const RestartBudget &budget = {});

/// Entanglement of assistance of a two-qubit state: decomposition-maximized
/// average EoF. A lower bound within optimizer tolerance.
double eoa(const DensityMatrix &rho, const RestartBudget &budget = {});

} // namespace polyent
