#include "polyent/verify.hpp"

#include <cmath>
#include <random>

#include "polyent/textio.hpp"

namespace polyent {

namespace {

// Same Box-Muller stream as states.cpp, seeded independently.
struct Gaussian {
    std::mt19937_64 rng;
    explicit Gaussian(std::uint64_t seed) : rng(seed) {}
    double uniform() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
    Complex next() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * uniform();
        return Complex(r * std::cos(th), r * std::sin(th));
    }
};

struct AcceptedState {
    PureState psi;
    MeasureVector mv_c;
};

// Haar states until one has >= 2 entangled concurrence pairs.
AcceptedState next_accepted(int n_qubits, std::uint64_t &seed_counter,
                            const PartitionSpec &part, double entangled_tol) {
    for (int attempts = 0; attempts < 100000; ++attempts) {
        PureState psi = haar_random_pure(n_qubits, seed_counter++);
        MeasureVector mv = measure_vector(psi, part, MeasureKind::Concurrence);
        if (classify(mv, entangled_tol).entangled_pairs.size() >= 2)
            return {std::move(psi), std::move(mv)};
    }
    throw Error("ensemble sampling failed to find a state with two entangled pairs");
}

void theorem_checks_for_state(VerifyReport &rep, const EnsembleConfig &cfg,
                              const PureState &psi, const MeasureVector &mv_c,
                              const PartitionSpec &part, const std::string &tag) {
    const MeasureVector mv_e = measure_vector(psi, part, MeasureKind::EoF);

    // (a) f(alpha0) = 1 within 1e-10, alpha0 inside its interval.
    const ThresholdResult a0c = find_alpha0(mv_c, cfg.entangled_tol);
    rep.record(tag + "/alpha0_C_root", !a0c.saturated && a0c.residual <= 1e-10 &&
                                           a0c.threshold > 0.0 && a0c.threshold <= 2.0);
    const ThresholdResult a0e = find_alpha0(mv_e, cfg.entangled_tol);
    rep.record(tag + "/alpha0_E_root",
               !a0e.saturated && a0e.residual <= 1e-10 && a0e.threshold > 0.0 &&
                   a0e.threshold <= std::sqrt(2.0));

    // (b) polygamy below alpha0.
    rep.record(tag + "/polygamy_C",
               verify_region(mv_c, linspace(0.0, a0c.threshold, cfg.grid_points),
                             Relation::PolygamyLE, cfg.slack, cfg.entangled_tol)
                   .all_pass);
    rep.record(tag + "/polygamy_E",
               verify_region(mv_e, linspace(0.0, a0e.threshold, cfg.grid_points),
                             Relation::PolygamyLE, cfg.slack, cfg.entangled_tol)
                   .all_pass);

    // (c) monogamy above the cap.
    rep.record(tag + "/monogamy_C",
               verify_region(mv_c, linspace(2.0, 4.0, cfg.grid_points), Relation::MonogamyGE,
                             cfg.slack, cfg.entangled_tol)
                   .all_pass);
    rep.record(tag + "/monogamy_E",
               verify_region(mv_e, linspace(std::sqrt(2.0), 3.0, cfg.grid_points),
                             Relation::MonogamyGE, cfg.slack, cfg.entangled_tol)
                   .all_pass);

    // (d) CoA polygamy, squared and on the beta grid.
    rep.record(tag + "/coa_polygamy", verify_coa_polygamy(psi, part).all_hold);

    // (e) strict reversal at negative exponents.
    bool reversal = true;
    for (double alpha : {-2.0, -1.0}) {
        double rhs = 0.0;
        for (double p : mv_c.pairs)
            if (p > cfg.entangled_tol) rhs += std::pow(p, alpha);
        const double lhs = std::pow(mv_c.global, alpha);
        reversal = reversal && (rhs - lhs > cfg.slack);
    }
    rep.record(tag + "/negative_alpha_reversal", reversal);

    // alpha1 sandwich whenever the crossing exists.
    for (const auto &[mv, a0, cap, name] :
         {std::tuple{&mv_c, &a0c, 2.0, tag + "/alpha1_C"},
          std::tuple{&mv_e, &a0e, std::sqrt(2.0), tag + "/alpha1_E"}}) {
        try {
            const ThresholdResult a1 = find_alpha1(*mv, cfg.entangled_tol);
            rep.record(name, a1.threshold >= a0->threshold - 1e-9 &&
                                 a1.threshold <= cap + 1e-9 && a1.residual <= 1e-8);
        } catch (const NoSignChange &) {
            rep.record(name, false);
        }
    }
}

} // namespace

SuiteCheck &VerifyReport::check(const std::string &name) {
    for (auto &c : checks)
        if (c.name == name) return c;
    checks.push_back({name, 0, 0});
    return checks.back();
}

void VerifyReport::record(const std::string &name, bool pass) {
    SuiteCheck &c = check(name);
    ++c.total;
    if (!pass) ++c.failures;
}

bool VerifyReport::all_pass() const {
    for (const auto &c : checks)
        if (c.failures != 0) return false;
    return true;
}

long VerifyReport::total_checks() const {
    long n = 0;
    for (const auto &c : checks) n += c.total;
    return n;
}

long VerifyReport::total_failures() const {
    long n = 0;
    for (const auto &c : checks) n += c.failures;
    return n;
}

VerifyReport run_theorem_suite(const EnsembleConfig &cfg) {
    VerifyReport rep;
    std::uint64_t counter3 = cfg.seed * 1000003ULL + 1;
    std::uint64_t counter4 = cfg.seed * 1000033ULL + 7;

    const PartitionSpec part3 = PartitionSpec::default_for(3);
    for (int k = 0; k < cfg.n_states_3q; ++k) {
        const AcceptedState st = next_accepted(3, counter3, part3, cfg.entangled_tol);
        theorem_checks_for_state(rep, cfg, st.psi, st.mv_c, part3, "3q");
    }
    const PartitionSpec part4 = PartitionSpec::default_for(4);
    for (int k = 0; k < cfg.n_states_4q; ++k) {
        const AcceptedState st = next_accepted(4, counter4, part4, cfg.entangled_tol);
        theorem_checks_for_state(rep, cfg, st.psi, st.mv_c, part4, "4q");
    }
    return rep;
}

DensityMatrix random_rank2_two_qubit(std::uint64_t seed) {
    Gaussian gauss(seed);
    CMatrix g(4, 2);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) g(i, j) = gauss.next();
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint().eval());  // strip rounding asymmetry
    return DensityMatrix(2, std::move(rho));
}

VerifyReport run_oracle_suite(const OracleConfig &cfg) {
    VerifyReport rep;
    const PartitionSpec part2 = PartitionSpec::default_for(2);

    for (int k = 0; k < cfg.n_states; ++k) {
        const DensityMatrix rho = random_rank2_two_qubit(cfg.seed * 4100041ULL + 11 +
                                                         static_cast<std::uint64_t>(k));
        const double c_closed = concurrence_mixed(rho);
        const double coa_closed = coa(rho);
        const double e_closed = eof_two_qubit(rho);

        const RoofResult cmin =
            roof_optimize(rho, part2, MeasureKind::Concurrence, RoofDirection::Min, cfg.budget);
        const RoofResult cmax =
            roof_optimize(rho, part2, MeasureKind::Concurrence, RoofDirection::Max, cfg.budget);
        const RoofResult emin =
            roof_optimize(rho, part2, MeasureKind::EoF, RoofDirection::Min, cfg.budget);
        const RoofResult emax =
            roof_optimize(rho, part2, MeasureKind::EoF, RoofDirection::Max, cfg.budget);

        rep.record("oracle/roof_min_vs_wootters", std::abs(cmin.value - c_closed) <= cfg.agree_tol);
        rep.record("oracle/roof_max_vs_sum_lambda",
                   std::abs(cmax.value - coa_closed) <= cfg.agree_tol);
        rep.record("oracle/direction_order_C",
                   cmin.value - 1e-6 <= c_closed && c_closed <= cmax.value + 1e-6);
        rep.record("oracle/direction_order_E",
                   emin.value - 1e-6 <= e_closed && e_closed <= emax.value + 1e-6);
        rep.record("oracle/roof_min_vs_eof_closed_form",
                   std::abs(emin.value - e_closed) <= cfg.agree_tol);

        bool rebuilt = true;
        for (const RoofResult *r : {&cmin, &cmax, &emin, &emax})
            rebuilt = rebuilt &&
                      (reconstruct(r->best) - rho.matrix()).norm() <= 1e-6;
        rep.record("oracle/decomposition_reconstructs", rebuilt);
    }

    // Assisted-EoF sum bound on 3-qubit pure states, E_a from the maximizer.
    std::uint64_t counter = cfg.seed * 7000003ULL + 3;
    const PartitionSpec part3 = PartitionSpec::default_for(3);
    for (int k = 0; k < cfg.n_eq12_states; ++k) {
        const PureState psi = haar_random_pure(3, counter++);
        const DensityMatrix rho = density(psi);
        const double lhs = eof_pure(psi, part3);
        double rhs = 0.0;
        for (int partner : part3.partners)
            rhs += eoa(partial_trace(rho, {0, partner}), cfg.budget);
        rep.record("oracle/eoa_sum_bound", lhs <= rhs + cfg.agree_tol);
    }
    return rep;
}

} // namespace polyent
