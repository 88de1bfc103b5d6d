#include "polyent/reproduce.hpp"

#include <cmath>

namespace polyent {

namespace {

void add_row(ExampleReport &rep, const std::string &label, double expected, double computed,
             double tolerance) {
    ExampleRow row{label, expected, computed, tolerance,
                   std::abs(expected - computed) <= tolerance};
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
}

// Published pair-concurrence expression for the isotropic W mixture. Wrong for
// t < 1: the Wootters spectrum is ((1-t)/4 + 2t/3, √(p₀₀p₁₁), √(p₀₀p₁₁),
// (1-t)/4) with p₀₀p₁₁ = (3-2t-t²)/48, so the √ term enters twice at half this
// weight. PPT and a brute-force convex-roof minimization both confirm the
// corrected expression below. The two agree exactly at t = 1.
double example1_pair_published(double t) {
    return 2.0 * t / 3.0 - std::sqrt((3.0 - 2.0 * t - t * t) / 3.0);
}

double example1_pair_corrected(double t) {
    return 2.0 * t / 3.0 - std::sqrt((3.0 - 2.0 * t - t * t) / 12.0);
}

ExampleReport example1() {
    ExampleReport rep;
    rep.which = 1;
    const PureState w3 = w3_state();
    const PartitionSpec part = PartitionSpec::default_for(3);

    const MeasureVector mv = measure_vector(w3, part, MeasureKind::Concurrence);
    add_row(rep, "C(|psi>_{A|BC})", 2.0 * std::sqrt(2.0) / 3.0, mv.global, 1e-9);
    add_row(rep, "C(rho_AB) at t=1", 2.0 / 3.0, mv.pairs[0], 1e-8);
    add_row(rep, "C(rho_AC) at t=1", 2.0 / 3.0, mv.pairs[1], 1e-8);

    // Mixed-state pair concurrence at t = 0.9, published and corrected forms.
    const DensityMatrix mix09 = isotropic_mixture(0.9, w3);
    const double c09 = concurrence_mixed(partial_trace(mix09, {0, 1}));
    add_row(rep, "C(rho_AB) t=0.9 (published form)", example1_pair_published(0.9), c09, 1e-8);
    add_row(rep, "C(rho_AB) t=0.9 (corrected form)", example1_pair_corrected(0.9), c09, 1e-8);

    const ThresholdResult a0 = find_alpha0(mv);
    add_row(rep, "alpha0 at t=1 (root)", 1.70951, a0.threshold, 1e-4);
    add_row(rep, "alpha0 at t=1 (closed form)", 1.70951, alpha0_closed_form_example1(1.0),
            1e-4);

    // Root-found alpha0(t) against the published closed form and against the
    // inverse of the corrected pair concurrence, on 20 mixtures.
    double worst_published = 0.0;
    double worst_corrected = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double t = 0.79 + (1.0 - 0.79) * static_cast<double>(k) / 19.0;
        const DensityMatrix mix = isotropic_mixture(t, w3);
        MeasureVector pairs_mv;
        pairs_mv.kind = MeasureKind::Concurrence;
        pairs_mv.global = 1.0;  // unused by the root finder
        pairs_mv.pairs = {concurrence_mixed(partial_trace(mix, {0, 1})),
                          concurrence_mixed(partial_trace(mix, {0, 2}))};
        const double root = find_alpha0(pairs_mv).threshold;
        worst_published = std::max(worst_published,
                                   std::abs(root - alpha0_closed_form_example1(t)));
        const double corrected_inverse =
            -std::log(2.0) / std::log(example1_pair_corrected(t));
        worst_corrected = std::max(worst_corrected, std::abs(root - corrected_inverse));
    }
    add_row(rep, "max |alpha0 root-published| over 20 t", 0.0, worst_published, 1e-6);
    add_row(rep, "max |alpha0 root-corrected| over 20 t", 0.0, worst_corrected, 1e-6);

    // Entanglement threshold by bisection on the Wootters difference. The
    // published value 0.783612 solves 7t²+6t-9 = 0; the actual sign change
    // sits at the root of 19t²+6t-9 (PPT-confirmed).
    const double tstar = entanglement_threshold_t(w3);
    add_row(rep, "t* (published 0.783612)", 0.783612, tstar, 1e-5);
    add_row(rep, "t* (corrected (-3+6sqrt(5))/19)", 0.54823199289467047, tstar, 1e-5);
    add_row(rep, "19 t*^2 + 6 t* - 9", 0.0, 19.0 * tstar * tstar + 6.0 * tstar - 9.0, 1e-8);
    return rep;
}

ExampleReport example2() {
    ExampleReport rep;
    rep.which = 2;
    const PureState psi = four_qubit_w_class_state();
    const PartitionSpec part = PartitionSpec::default_for(4);
    const MeasureVector mv = measure_vector(psi, part, MeasureKind::Concurrence);

    add_row(rep, "C(rho_AB1) = sqrt(6)/15", std::sqrt(6.0) / 15.0, mv.pairs[0], 1e-10);
    add_row(rep, "C(rho_AB2) = 2sqrt(2)/15", 2.0 * std::sqrt(2.0) / 15.0, mv.pairs[1], 1e-10);
    add_row(rep, "C(rho_AB3) = 2/5", 0.4, mv.pairs[2], 1e-10);
    // The published global value uses 2|b1|√(1-|b1|²), which ignores the a·b1
    // coherence in ρ_A; with a ≠ 0 the cut value is 2|b1|√(1-a²-|b1|²) = √2/3,
    // which also equals √(Σ pairs²) (W-class states saturate CKW).
    add_row(rep, "C(|psi>) published 2sqrt(14)/15", 2.0 * std::sqrt(14.0) / 15.0, mv.global,
            1e-10);
    add_row(rep, "C(|psi>) corrected sqrt(2)/3", std::sqrt(2.0) / 3.0, mv.global, 1e-10);
    add_row(rep, "f(0.783586)", 1.0, f_of_alpha(mv, 0.783586), 1e-5);
    add_row(rep, "alpha0", 0.783586, find_alpha0(mv).threshold, 1e-5);
    return rep;
}

ExampleReport example3() {
    ExampleReport rep;
    rep.which = 3;
    const PureState w3 = w3_state();
    const PartitionSpec part = PartitionSpec::default_for(3);
    const MeasureVector mv = measure_vector(w3, part, MeasureKind::EoF);

    add_row(rep, "E_{A|BC}", 0.918296, mv.global, 1e-6);
    add_row(rep, "E_AB", 0.550048, mv.pairs[0], 1e-6);
    add_row(rep, "E_AC", 0.550048, mv.pairs[1], 1e-6);
    add_row(rep, "alpha0 (f(alpha0)=1)", 1.15959, find_alpha0(mv).threshold, 1e-4);

    const ThresholdResult a1 = find_alpha1(mv);
    add_row(rep, "alpha1 (g(alpha1)=0)", 1.35244, a1.threshold, 1e-4);
    add_row(rep, "sign changes of g on scan grid", 1.0,
            static_cast<double>(a1.grid_sign_changes), 0.0);
    return rep;
}

} // namespace

PureState w3_state() {
    const double b = 1.0 / std::sqrt(3.0);
    return w_class_state(0.0, {b, b, b});
}

PureState four_qubit_w_class_state() {
    return w_class_state(1.0 / std::sqrt(10.0),
                         {1.0 / std::sqrt(15.0), 1.0 / std::sqrt(10.0),
                          std::sqrt(2.0 / 15.0), std::sqrt(3.0 / 5.0)});
}

ExampleReport run_example(int which) {
    switch (which) {
        case 1: return example1();
        case 2: return example2();
        case 3: return example3();
        default: throw BadParameter("run_example: which must be 1, 2 or 3");
    }
}

} // namespace polyent
