// states.hpp — n-qubit pure states, density matrices and bipartitions.
//
// Invariants are checked at construction, not trusted: a PureState always has
// unit norm, a DensityMatrix is always Hermitian, PSD and unit trace (within
// the tolerances in linalg.hpp). Values are immutable after construction.

#pragma once

#include <cstdint>
#include <vector>

#include "polyent/linalg.hpp"

namespace polyent {

inline constexpr int kMaxQubits = 5;

class PureState {
  public:
    PureState(int n_qubits, CVector amplitudes);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const CVector &amplitudes() const { return amplitudes_; }

    /// |ψ⟩⟨ψ| as a raw matrix.
    CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

  private:
    int n_qubits_;
    CVector amplitudes_;
};

class DensityMatrix {
  public:
    DensityMatrix(int n_qubits, CMatrix matrix);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const CMatrix &matrix() const { return matrix_; }

  private:
    int n_qubits_;
    CMatrix matrix_;
};

struct PartitionSpec {
    int focus = 0;              // qubit A
    std::vector<int> partners;  // B_1 ... B_{n-1}, ordered

    /// focus + partners must cover {0..n-1} exactly once.
    void validate(int n_qubits) const;

    /// Focus qubit A with partners in ascending index order.
    static PartitionSpec default_for(int n_qubits, int focus = 0);
};

/// Generalized W-class state a|0…0⟩ + Σ_i b_i |0…1_i…0⟩ on b.size() qubits.
/// Coefficients are real; throws NotNormalized unless a² + Σ b_i² = 1.
PureState w_class_state(double a, const std::vector<double> &b);

/// (1-t)/2ⁿ · I + t·|base⟩⟨base|.
DensityMatrix isotropic_mixture(double t, const PureState &base);

/// Haar-distributed pure state: i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic for a given seed (mt19937_64 + Box-Muller).
PureState haar_random_pure(int n_qubits, std::uint64_t seed);

DensityMatrix density(const PureState &psi);

/// Typed partial trace; keep order is preserved in the result's qubit order.
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

} // namespace polyent
