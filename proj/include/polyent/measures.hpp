// measures.hpp — closed-form bipartite entanglement measures.
//
// Pure-state concurrence √(2(1−Tr ρ_A²)) and EoF S(ρ_A); two-qubit mixed
// states through the Wootters spectrum λ₁ ≥ λ₂ ≥ λ₃ ≥ λ₄ of √(√ρ ρ̃ √ρ):
// concurrence max(0, λ₁−λ₂−λ₃−λ₄), concurrence of assistance Σλ, and
// EoF h((1+√(1−C²))/2). The roof module cross-validates all three.

#pragma once

#include <array>
#include <functional>
#include <optional>

#include "polyent/states.hpp"

namespace polyent {

enum class MeasureKind { Concurrence, ConcurrenceOfAssistance, EoF };

const char *to_string(MeasureKind kind);

struct MeasureVector {
    MeasureKind kind = MeasureKind::Concurrence;
    double global = 0.0;            // M(ρ_{A|B₁…B_{n−1}})
    std::vector<double> pairs;      // pairs[i] = M(ρ_{AB_{i+1}})
    bool global_approximate = false;  // true when the roof optimizer supplied `global`
};

/// Unnormalized reduced single-qubit matrix of the focus qubit,
/// ⟨a|ρ_A|b⟩ = Σ_rest ψ[a,rest] ψ*[b,rest]. Trace equals ‖amps‖².
Eigen::Matrix2cd reduced_focus(const CVector &amps, int n_qubits, int focus);

double concurrence_pure(const PureState &psi, const PartitionSpec &part);
double eof_pure(const PureState &psi, const PartitionSpec &part);

/// ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y) for a two-qubit state.
CMatrix spin_flip(const DensityMatrix &rho);

/// Wootters spectrum, descending.
std::array<double, 4> wootters_lambdas(const DensityMatrix &rho);

/// λ₁ − λ₂ − λ₃ − λ₄ without the clamp at zero; negative below the
/// separability threshold. concurrence_mixed is max(0, ·) of this.
double wootters_difference(const DensityMatrix &rho);

double concurrence_mixed(const DensityMatrix &rho);
double coa(const DensityMatrix &rho);

double binary_entropy(double x);
double von_neumann_entropy(const DensityMatrix &rho);
double eof_two_qubit(const DensityMatrix &rho);

/// Hook for evaluating global measures of genuinely mixed multiqubit states;
/// wired to the roof optimizer by callers that accept approximate values.
using GlobalEvaluator =
    std::function<double(const DensityMatrix &, const PartitionSpec &, MeasureKind)>;

MeasureVector measure_vector(const PureState &psi, const PartitionSpec &part, MeasureKind kind);

/// Pair values always come from the closed forms. The global value uses the
/// pure-state formula when rho is (numerically) pure; otherwise `fallback`
/// evaluates it and the result is flagged approximate. Throws
/// UnsupportedGlobalMeasure for mixed input without a fallback.
MeasureVector measure_vector(const DensityMatrix &rho, const PartitionSpec &part,
                             MeasureKind kind, const GlobalEvaluator &fallback = nullptr);

} // namespace polyent
