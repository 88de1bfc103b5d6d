// linalg.hpp — dense complex linear algebra for small qubit registers.
//
// Everything here operates on Eigen types directly. Matrices are row-major
// in storage conventions used by the file formats, but internally we use
// Eigen's defaults; qubit 0 is the most significant bit of a basis index,
// fixed project-wide.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "polyent/errors.hpp"

namespace polyent {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

namespace tol {
inline constexpr double hermiticity = 1e-10;    // max-entry deviation from m == m†
inline constexpr double psd_clamp = 1e-10;      // eigenvalues in [-psd_clamp, 0) are rounding noise
inline constexpr double trace_one = 1e-10;      // density matrix trace check
inline constexpr double norm_one = 1e-10;       // pure state norm check
inline constexpr double entangled = 1e-9;       // a pair counts as entangled iff C > this
inline constexpr double region_slack = 1e-9;    // slack for inequality region checks
inline constexpr double root_residual = 1e-12;  // bisection residual target
inline constexpr double oracle_agree = 2e-3;    // roof optimizer vs closed form
} // namespace tol

struct EigenDecomposition {
    RVector values;   // real eigenvalues, descending
    CMatrix vectors;  // orthonormal columns, vectors.col(k) pairs with values[k]
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Throws NotHermitian when ‖m − m†‖_max exceeds tol::hermiticity, and
/// NoConvergence if the backend solver fails to converge.
EigenDecomposition hermitian_eig(const CMatrix &m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-tol::psd_clamp, 0) are clamped to zero; anything more negative throws NotPSD.
CMatrix matrix_sqrt_psd(const CMatrix &m);

/// Partial trace of an n-qubit density matrix onto the qubits listed in
/// `keep` (order preserved: keep.front() becomes the most significant qubit
/// of the result). Throws BadIndex for out-of-range or duplicate indices.
CMatrix partial_trace(const CMatrix &rho, int n_qubits, const std::vector<int> &keep);

/// Kronecker product, dims multiply. Accepts arbitrary Eigen expressions.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>
tensor(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b) {
    using Mat = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
    return out;
}

inline bool is_hermitian(const CMatrix &m, double eps = tol::hermiticity) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

} // namespace polyent
