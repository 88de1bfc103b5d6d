#include "polyent/measures.hpp"

#include <algorithm>
#include <cmath>

namespace polyent {

namespace {

const CMatrix &sigma_yy() {
    static const CMatrix yy = [] {
        CMatrix m = CMatrix::Zero(4, 4);
        m(0, 3) = -1.0;
        m(1, 2) = 1.0;
        m(2, 1) = 1.0;
        m(3, 0) = -1.0;
        return m;
    }();
    return yy;
}

void require_two_qubits(const DensityMatrix &rho, const char *op) {
    if (rho.n_qubits() != 2)
        throw WrongDimension(std::string(op) + ": expected a 2-qubit density matrix");
}

double entropy_bits(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

DensityMatrix pair_state(const DensityMatrix &rho, int focus, int partner) {
    return partial_trace(rho, {focus, partner});
}

double pair_measure(const DensityMatrix &pair, MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Concurrence: return concurrence_mixed(pair);
        case MeasureKind::ConcurrenceOfAssistance: return coa(pair);
        case MeasureKind::EoF: return eof_two_qubit(pair);
    }
    throw Error("pair_measure: unknown kind");
}

double global_pure(const PureState &psi, const PartitionSpec &part, MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Concurrence: return concurrence_pure(psi, part);
        // C = C_a on pure states.
        case MeasureKind::ConcurrenceOfAssistance: return concurrence_pure(psi, part);
        case MeasureKind::EoF: return eof_pure(psi, part);
    }
    throw Error("global_pure: unknown kind");
}

void validate_measure_vector(const MeasureVector &mv) {
    const double cap = mv.kind == MeasureKind::EoF ? std::sqrt(2.0) : 1.0;
    if (!std::isfinite(mv.global) || mv.global < 0.0 || mv.global > cap + 1e-8)
        throw InvariantViolation("MeasureVector: global value " + std::to_string(mv.global) +
                                 " out of range");
    for (double p : mv.pairs)
        if (!std::isfinite(p) || p < 0.0 || p > 1.0 + 1e-8)
            throw InvariantViolation("MeasureVector: pair value " + std::to_string(p) +
                                     " out of range");
}

} // namespace

const char *to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Concurrence: return "concurrence";
        case MeasureKind::ConcurrenceOfAssistance: return "coa";
        case MeasureKind::EoF: return "eof";
    }
    return "?";
}

Eigen::Matrix2cd reduced_focus(const CVector &amps, int n_qubits, int focus) {
    const int shift = n_qubits - 1 - focus;
    const Eigen::Index mask = Eigen::Index(1) << shift;
    Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const int a = static_cast<int>((i >> shift) & 1);
        r(a, a) += std::norm(amps[i]);
        if (a == 0) {
            // ⟨0,rest|ρ|1,rest⟩ pairs index i with i|mask.
            r(0, 1) += amps[i] * std::conj(amps[i | mask]);
        }
    }
    r(1, 0) = std::conj(r(0, 1));
    return r;
}

double concurrence_pure(const PureState &psi, const PartitionSpec &part) {
    part.validate(psi.n_qubits());
    const Eigen::Matrix2cd rho_a = reduced_focus(psi.amplitudes(), psi.n_qubits(), part.focus);
    const double p00 = rho_a(0, 0).real();
    const double p11 = rho_a(1, 1).real();
    const double purity = p00 * p00 + p11 * p11 + 2.0 * std::norm(rho_a(0, 1));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double eof_pure(const PureState &psi, const PartitionSpec &part) {
    part.validate(psi.n_qubits());
    const Eigen::Matrix2cd rho_a = reduced_focus(psi.amplitudes(), psi.n_qubits(), part.focus);
    // 2x2 Hermitian spectrum in closed form.
    const double p = rho_a(0, 0).real();
    const double disc = std::sqrt(std::max(0.0, (p - 0.5) * (p - 0.5) + std::norm(rho_a(0, 1))));
    return binary_entropy(std::clamp(0.5 + disc, 0.0, 1.0));
}

CMatrix spin_flip(const DensityMatrix &rho) {
    require_two_qubits(rho, "spin_flip");
    return sigma_yy() * rho.matrix().conjugate() * sigma_yy();
}

std::array<double, 4> wootters_lambdas(const DensityMatrix &rho) {
    require_two_qubits(rho, "wootters_lambdas");
    // Factor ρ = X X† from the scaled eigenvectors and read the λ's off the
    // complex-symmetric τ = Xᵀ(σ_y⊗σ_y)X: eig(ρρ̃) = eig(τ*τ), so the λ's are
    // the singular values of τ. Truncating X at the numerical rank keeps the
    // small λ's exact; square-rooting near-zero eigenvalues of √ρ·ρ̃·√ρ would
    // amplify solver noise to ~1e-8.
    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    int rank = 0;
    while (rank < 4 && eig.values[rank] > 1e-13) ++rank;
    std::array<double, 4> lam{0.0, 0.0, 0.0, 0.0};
    if (rank == 0) return lam;
    CMatrix x(4, rank);
    for (int i = 0; i < rank; ++i)
        x.col(i) = eig.vectors.col(i) * std::sqrt(eig.values[i]);
    const CMatrix tau = x.transpose() * sigma_yy() * x;
    Eigen::JacobiSVD<CMatrix> svd(tau);
    for (int k = 0; k < rank; ++k) lam[static_cast<size_t>(k)] = svd.singularValues()[k];
    return lam;
}

double wootters_difference(const DensityMatrix &rho) {
    const auto lam = wootters_lambdas(rho);
    return lam[0] - lam[1] - lam[2] - lam[3];
}

double concurrence_mixed(const DensityMatrix &rho) {
    return std::max(0.0, wootters_difference(rho));
}

double coa(const DensityMatrix &rho) {
    const auto lam = wootters_lambdas(rho);
    return lam[0] + lam[1] + lam[2] + lam[3];
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("binary_entropy: x = " + std::to_string(x) + " outside [0,1]");
    return entropy_bits(x) + entropy_bits(1.0 - x);
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    double s = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k)
        s += entropy_bits(std::max(0.0, eig.values[k]));
    return s;
}

double eof_two_qubit(const DensityMatrix &rho) {
    require_two_qubits(rho, "eof_two_qubit");
    const double c = concurrence_mixed(rho);
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

MeasureVector measure_vector(const PureState &psi, const PartitionSpec &part, MeasureKind kind) {
    part.validate(psi.n_qubits());
    MeasureVector mv;
    mv.kind = kind;
    mv.global = global_pure(psi, part, kind);
    const DensityMatrix rho = density(psi);
    for (int partner : part.partners)
        mv.pairs.push_back(pair_measure(pair_state(rho, part.focus, partner), kind));
    validate_measure_vector(mv);
    return mv;
}

MeasureVector measure_vector(const DensityMatrix &rho, const PartitionSpec &part,
                             MeasureKind kind, const GlobalEvaluator &fallback) {
    part.validate(rho.n_qubits());
    MeasureVector mv;
    mv.kind = kind;

    const double purity = (rho.matrix() * rho.matrix()).trace().real();
    if (purity > 1.0 - 1e-10) {
        // Numerically pure: recover the state vector from the top eigenvector.
        const EigenDecomposition eig = hermitian_eig(rho.matrix());
        CVector amps = eig.vectors.col(0);
        amps /= amps.norm();
        mv.global = global_pure(PureState(rho.n_qubits(), std::move(amps)), part, kind);
    } else if (fallback) {
        mv.global = fallback(rho, part, kind);
        mv.global_approximate = true;
    } else {
        throw UnsupportedGlobalMeasure(
            "measure_vector: mixed-state global value requires the roof optimizer");
    }

    for (int partner : part.partners)
        mv.pairs.push_back(pair_measure(pair_state(rho, part.focus, partner), kind));
    validate_measure_vector(mv);
    return mv;
}

} // namespace polyent
