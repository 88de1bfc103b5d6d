#include "polyent/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polyent {

namespace {

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw BadParameter("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                           std::to_string(kMaxQubits) + "]");
}

} // namespace

PureState::PureState(int n_qubits, CVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits_);
    if (amplitudes_.size() != (Eigen::Index(1) << n_qubits_))
        throw InvariantViolation("PureState: amplitude count does not match qubit count");
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol::norm_one)
        throw NotNormalized("PureState: ‖ψ‖ = " + std::to_string(norm));
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
    check_qubit_count(n_qubits_);
    const Eigen::Index d = Eigen::Index(1) << n_qubits_;
    if (matrix_.rows() != d || matrix_.cols() != d)
        throw InvariantViolation("DensityMatrix: dimension does not match qubit count");
    if (!is_hermitian(matrix_))
        throw InvariantViolation("DensityMatrix: not Hermitian within 1e-10");
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > tol::trace_one)
        throw InvariantViolation("DensityMatrix: trace = " + std::to_string(tr));
    const EigenDecomposition eig = hermitian_eig(matrix_);
    const double min_ev = eig.values[eig.values.size() - 1];
    if (min_ev < -tol::psd_clamp)
        throw InvariantViolation("DensityMatrix: eigenvalue " + std::to_string(min_ev) +
                                 " below -1e-10");
}

void PartitionSpec::validate(int n_qubits) const {
    std::vector<bool> seen(static_cast<size_t>(n_qubits), false);
    auto mark = [&](int q) {
        if (q < 0 || q >= n_qubits)
            throw BadIndex("PartitionSpec: qubit " + std::to_string(q) + " out of range");
        if (seen[static_cast<size_t>(q)])
            throw BadIndex("PartitionSpec: qubit " + std::to_string(q) + " listed twice");
        seen[static_cast<size_t>(q)] = true;
    };
    mark(focus);
    for (int q : partners) mark(q);
    if (static_cast<int>(partners.size()) != n_qubits - 1)
        throw BadIndex("PartitionSpec: focus plus partners must cover all qubits");
}

PartitionSpec PartitionSpec::default_for(int n_qubits, int focus) {
    PartitionSpec part;
    part.focus = focus;
    for (int q = 0; q < n_qubits; ++q)
        if (q != focus) part.partners.push_back(q);
    part.validate(n_qubits);
    return part;
}

PureState w_class_state(double a, const std::vector<double> &b) {
    const int n = static_cast<int>(b.size());
    check_qubit_count(n);
    double sum = a * a;
    for (double bi : b) sum += bi * bi;
    if (std::abs(sum - 1.0) > tol::norm_one)
        throw NotNormalized("w_class_state: a² + Σb² = " + std::to_string(sum));

    CVector amps = CVector::Zero(Eigen::Index(1) << n);
    amps[0] = Complex(a, 0.0);
    for (int i = 0; i < n; ++i)
        amps[Eigen::Index(1) << (n - 1 - i)] = Complex(b[static_cast<size_t>(i)], 0.0);
    return PureState(n, std::move(amps));
}

DensityMatrix isotropic_mixture(double t, const PureState &base) {
    if (!(t >= 0.0 && t <= 1.0))
        throw BadParameter("isotropic_mixture: t = " + std::to_string(t) + " outside [0,1]");
    const Eigen::Index d = base.dim();
    CMatrix rho = ((1.0 - t) / static_cast<double>(d)) * CMatrix::Identity(d, d) +
                  t * base.projector();
    return DensityMatrix(base.n_qubits(), std::move(rho));
}

PureState haar_random_pure(int n_qubits, std::uint64_t seed) {
    check_qubit_count(n_qubits);
    std::mt19937_64 rng(seed);
    // Explicit Box-Muller over 53-bit uniforms, so the stream does not depend
    // on the standard library's distribution implementations.
    auto uniform = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };
    auto gauss_pair = [&](double &z0, double &z1) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * uniform();
        z0 = r * std::cos(th);
        z1 = r * std::sin(th);
    };

    const Eigen::Index d = Eigen::Index(1) << n_qubits;
    CVector amps(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        double re, im;
        gauss_pair(re, im);
        amps[i] = Complex(re, im);
    }
    amps /= amps.norm();
    return PureState(n_qubits, std::move(amps));
}

DensityMatrix density(const PureState &psi) {
    return DensityMatrix(psi.n_qubits(), psi.projector());
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    CMatrix reduced = partial_trace(rho.matrix(), rho.n_qubits(), keep);
    return DensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

} // namespace polyent
