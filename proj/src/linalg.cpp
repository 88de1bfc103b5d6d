#include "polyent/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

namespace polyent {

EigenDecomposition hermitian_eig(const CMatrix &m) {
    if (m.rows() != m.cols())
        throw WrongDimension("hermitian_eig: matrix is not square");
    if (m.rows() > 64)
        throw WrongDimension("hermitian_eig: dimension above 64 unsupported");
    const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::hermiticity)
        throw NotHermitian("hermitian_eig: max |m - m†| = " + std::to_string(dev));

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("hermitian_eig: eigensolver did not converge");

    // Eigen sorts ascending; flip to descending.
    const Eigen::Index d = m.rows();
    EigenDecomposition out;
    out.values.resize(d);
    out.vectors.resize(d, d);
    for (Eigen::Index k = 0; k < d; ++k) {
        out.values[k] = solver.eigenvalues()[d - 1 - k];
        out.vectors.col(k) = solver.eigenvectors().col(d - 1 - k);
    }
    return out;
}

CMatrix matrix_sqrt_psd(const CMatrix &m) {
    EigenDecomposition eig = hermitian_eig(m);
    RVector roots(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        double v = eig.values[k];
        if (v < -tol::psd_clamp)
            throw NotPSD("matrix_sqrt_psd: eigenvalue " + std::to_string(v) + " below -1e-10");
        roots[k] = std::sqrt(std::max(v, 0.0));
    }
    return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

CMatrix partial_trace(const CMatrix &rho, int n_qubits, const std::vector<int> &keep) {
    const Eigen::Index dim = rho.rows();
    if (rho.cols() != dim || dim != (Eigen::Index(1) << n_qubits))
        throw WrongDimension("partial_trace: matrix dimension does not match qubit count");
    if (keep.empty())
        throw BadIndex("partial_trace: keep set is empty");
    std::vector<bool> seen(static_cast<size_t>(n_qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= n_qubits)
            throw BadIndex("partial_trace: qubit index " + std::to_string(q) + " out of range");
        if (seen[static_cast<size_t>(q)])
            throw BadIndex("partial_trace: duplicate qubit index " + std::to_string(q));
        seen[static_cast<size_t>(q)] = true;
    }

    std::vector<int> traced;
    for (int q = 0; q < n_qubits; ++q)
        if (!seen[static_cast<size_t>(q)]) traced.push_back(q);

    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    const Eigen::Index dk = Eigen::Index(1) << nk;
    const Eigen::Index dt = Eigen::Index(1) << nt;

    // Qubit q occupies bit (n_qubits - 1 - q) of a basis index.
    auto bit_of = [n_qubits](int q) { return n_qubits - 1 - q; };

    // Assemble the full index from the kept sub-index a and traced sub-index e.
    auto full_index = [&](Eigen::Index a, Eigen::Index e) {
        Eigen::Index idx = 0;
        for (int k = 0; k < nk; ++k)
            if ((a >> (nk - 1 - k)) & 1) idx |= Eigen::Index(1) << bit_of(keep[static_cast<size_t>(k)]);
        for (int t = 0; t < nt; ++t)
            if ((e >> (nt - 1 - t)) & 1) idx |= Eigen::Index(1) << bit_of(traced[static_cast<size_t>(t)]);
        return idx;
    };

    CMatrix out = CMatrix::Zero(dk, dk);
    for (Eigen::Index a = 0; a < dk; ++a)
        for (Eigen::Index b = 0; b < dk; ++b) {
            Complex acc(0.0, 0.0);
            for (Eigen::Index e = 0; e < dt; ++e)
                acc += rho(full_index(a, e), full_index(b, e));
            out(a, b) = acc;
        }
    return out;
}

} // namespace polyent
