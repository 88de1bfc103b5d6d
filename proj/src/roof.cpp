#include "polyent/roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace polyent {

namespace {

constexpr double kRankTol = 1e-12;
constexpr double kNegligibleWeight = 1e-30;
constexpr double kConvergeWindow = 1e-4;

std::uint64_t fnv1a(const void *data, size_t len, std::uint64_t h) {
    const auto *p = static_cast<const unsigned char *>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::uint64_t roof_seed(const DensityMatrix &rho, MeasureKind kind, RoofDirection dir,
                        std::uint64_t salt) {
    std::uint64_t h = 14695981039346656037ULL;
    h = fnv1a(rho.matrix().data(),
              sizeof(Complex) * static_cast<size_t>(rho.matrix().size()), h);
    const int tag[2] = {static_cast<int>(kind), static_cast<int>(dir)};
    h = fnv1a(tag, sizeof(tag), h);
    h = fnv1a(&salt, sizeof(salt), h);
    return h;
}

// p_j · M(ψ_j/√p_j) for an unnormalized decomposition column.
double contribution(const CVector &col, int n_qubits, int focus, MeasureKind kind) {
    const double p = col.squaredNorm();
    if (p < kNegligibleWeight) return 0.0;
    const Eigen::Matrix2cd r = reduced_focus(col, n_qubits, focus);
    const double a = r(0, 0).real() / p;
    const double b = r(1, 1).real() / p;
    const double q2 = std::norm(r(0, 1)) / (p * p);
    if (kind == MeasureKind::Concurrence) {
        const double purity = a * a + b * b + 2.0 * q2;
        return p * std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
    }
    const double disc = std::sqrt(std::max(0.0, (a - 0.5) * (a - 0.5) + q2));
    const double x = std::min(1.0, 0.5 + disc);
    const double y = 1.0 - x;
    double hx = 0.0;
    if (x > 0.0) hx -= x * std::log2(x);
    if (y > 0.0) hx -= y * std::log2(y);
    return p * hx;
}

struct GaussianPairs {
    std::mt19937_64 rng;
    explicit GaussianPairs(std::uint64_t seed) : rng(seed) {}
    double uniform() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    Complex next() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * uniform();
        return Complex(r * std::cos(th), r * std::sin(th));
    }
};

} // namespace

CMatrix reconstruct(const Decomposition &d) {
    if (d.states.empty()) return CMatrix();
    const Eigen::Index dim = d.states.front().dim();
    CMatrix rho = CMatrix::Zero(dim, dim);
    for (size_t j = 0; j < d.states.size(); ++j)
        rho += d.weights[j] * d.states[j].projector();
    return rho;
}

RoofResult roof_optimize(const DensityMatrix &rho, const PartitionSpec &part,
                         MeasureKind kind, RoofDirection direction,
                         const RestartBudget &budget) {
    if (kind != MeasureKind::Concurrence && kind != MeasureKind::EoF)
        throw BadParameter("roof_optimize: kind must be Concurrence or EoF");
    part.validate(rho.n_qubits());
    const int n = rho.n_qubits();
    const int focus = part.focus;

    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    int rank = 0;
    while (rank < static_cast<int>(eig.values.size()) && eig.values[rank] > kRankTol) ++rank;
    if (rank > 8)
        throw RankTooHigh("roof_optimize: rank " + std::to_string(rank) + " exceeds 8");
    if (rank == 0)
        throw InvariantViolation("roof_optimize: zero-rank input");

    const int m = std::max(2, budget.decomposition_factor * rank);
    const Eigen::Index dim = rho.dim();

    // Scaled eigenvectors: any size-m decomposition is cols = W · Uᵀ with U an
    // m×rank isometry.
    CMatrix scaled(dim, rank);
    for (int i = 0; i < rank; ++i)
        scaled.col(i) = eig.vectors.col(i) * std::sqrt(eig.values[i]);

    const double sgn = direction == RoofDirection::Min ? 1.0 : -1.0;
    GaussianPairs gauss(roof_seed(rho, kind, direction, budget.seed_salt));

    RoofResult out;
    double best_signed = std::numeric_limits<double>::infinity();
    CMatrix best_cols;
    std::vector<double> history;  // running best after each restart

    CMatrix cols(dim, m);
    std::vector<double> contrib(static_cast<size_t>(m));

    for (int restart = 0; restart < budget.restarts; ++restart) {
        // Haar start: thin QR of an m×rank complex Gaussian.
        CMatrix g(m, rank);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < rank; ++k) g(i, k) = gauss.next();
        const CMatrix iso = Eigen::HouseholderQR<CMatrix>(g)
                                .householderQ() *
                            CMatrix::Identity(m, rank);
        cols = scaled * iso.transpose();

        double cur = 0.0;
        for (int j = 0; j < m; ++j) {
            contrib[static_cast<size_t>(j)] = contribution(cols.col(j), n, focus, kind);
            cur += sgn * contrib[static_cast<size_t>(j)];
        }

        double step = budget.step_init;
        CVector trial_a(dim), trial_b(dim);
        while (step > budget.step_min) {
            bool improved = false;
            const double c = std::cos(step), s = std::sin(step);
            for (int j1 = 0; j1 < m; ++j1) {
                for (int j2 = j1 + 1; j2 < m; ++j2) {
                    const double base = sgn * (contrib[static_cast<size_t>(j1)] +
                                               contrib[static_cast<size_t>(j2)]);
                    // Four candidate Givens moves: θ = ±step with phase 0 or π/2.
                    double best_delta = -1e-15;
                    double best_ca = 0.0, best_cb = 0.0;
                    int best_move = -1;
                    for (int move = 0; move < 4; ++move) {
                        const Complex e = (move & 2) ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
                        const double th_s = (move & 1) ? -s : s;
                        trial_a = c * cols.col(j1) + th_s * e * cols.col(j2);
                        trial_b = -th_s * std::conj(e) * cols.col(j1) + c * cols.col(j2);
                        const double ca = contribution(trial_a, n, focus, kind);
                        const double cb = contribution(trial_b, n, focus, kind);
                        const double delta = sgn * (ca + cb) - base;
                        if (delta < best_delta) {
                            best_delta = delta;
                            best_move = move;
                            best_ca = ca;
                            best_cb = cb;
                        }
                    }
                    if (best_move >= 0) {
                        const Complex e = (best_move & 2) ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
                        const double th_s = (best_move & 1) ? -s : s;
                        trial_a = c * cols.col(j1) + th_s * e * cols.col(j2);
                        trial_b = -th_s * std::conj(e) * cols.col(j1) + c * cols.col(j2);
                        cols.col(j1) = trial_a;
                        cols.col(j2) = trial_b;
                        contrib[static_cast<size_t>(j1)] = best_ca;
                        contrib[static_cast<size_t>(j2)] = best_cb;
                        cur += best_delta;
                        improved = true;
                    }
                }
            }
            if (!improved) step *= 0.5;
        }

        if (cur < best_signed) {
            best_signed = cur;
            best_cols = cols;
        }
        history.push_back(sgn * best_signed);
        out.restarts_used = restart + 1;
    }

    // Re-derive value and decomposition from the best columns.
    double value = 0.0;
    for (int j = 0; j < m; ++j) {
        const double p = best_cols.col(j).squaredNorm();
        if (p < kNegligibleWeight) continue;
        out.best.weights.push_back(p);
        out.best.states.emplace_back(n, CVector(best_cols.col(j) / std::sqrt(p)));
        value += contribution(best_cols.col(j), n, focus, kind);
    }
    out.value = value;

    if (history.size() >= 3) {
        const double a = history[history.size() - 3];
        const double b = history[history.size() - 1];
        out.converged = std::abs(a - b) <= kConvergeWindow;
    }
    return out;
}

double eoa(const DensityMatrix &rho, const RestartBudget &budget) {
    if (rho.n_qubits() != 2)
        throw WrongDimension("eoa: expected a 2-qubit density matrix");
    return roof_optimize(rho, PartitionSpec::default_for(2), MeasureKind::EoF,
                         RoofDirection::Max, budget)
        .value;
}

} // namespace polyent
