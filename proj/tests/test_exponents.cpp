#include <doctest.h>

#include <cmath>

#include "polyent/exponents.hpp"
#include "polyent/reproduce.hpp"
#include "polyent/textio.hpp"

using namespace polyent;

namespace {

MeasureVector synthetic(MeasureKind kind, double global, std::vector<double> pairs) {
    MeasureVector mv;
    mv.kind = kind;
    mv.global = global;
    mv.pairs = std::move(pairs);
    return mv;
}

MeasureVector w3_concurrence() {
    return measure_vector(w3_state(), PartitionSpec::default_for(3),
                          MeasureKind::Concurrence);
}

MeasureVector w3_eof() {
    return measure_vector(w3_state(), PartitionSpec::default_for(3), MeasureKind::EoF);
}

MeasureVector example2_concurrence() {
    return measure_vector(four_qubit_w_class_state(), PartitionSpec::default_for(4),
                          MeasureKind::Concurrence);
}

} // namespace

TEST_CASE("f_of_alpha values") {
    const MeasureVector mv = w3_concurrence();
    CHECK(f_of_alpha(mv, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f_of_alpha(mv, 2.0) == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
    CHECK(f_of_alpha(example2_concurrence(), 0.783586) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(f_of_alpha(mv, -1.0), DomainError);

    // zero pairs are excluded, not raised to the zeroth power
    const MeasureVector sparse = synthetic(MeasureKind::Concurrence, 0.5, {0.5, 0.0, 0.25});
    CHECK(f_of_alpha(sparse, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("g_of_alpha values") {
    const MeasureVector mv_e = w3_eof();
    CHECK(std::abs(g_of_alpha(mv_e, 1.35244)) <= 1e-4);

    const MeasureVector mv_c = w3_concurrence();
    const double a0 = find_alpha0(mv_c).threshold;
    CHECK(g_of_alpha(mv_c, a0) >= -1e-10);  // 1 - global^alpha0 with global <= 1
    CHECK(std::abs(g_of_alpha(mv_c, 2.0)) <= 1e-9);  // W state saturates CKW

    CHECK_THROWS_AS(g_of_alpha(synthetic(MeasureKind::Concurrence, 0.0, {0.5, 0.5}), 1.0),
                    DegenerateGlobal);
}

TEST_CASE("classify cases") {
    CHECK(classify(w3_concurrence()).pair_case == PairCase::AllPairs);

    // Bell pair on {0,1} with a spectator qubit: only one entangled pair.
    CVector v = CVector::Zero(8);
    v[0] = v[6] = 1.0 / std::sqrt(2.0);
    const MeasureVector bell_mv = measure_vector(PureState(3, v),
                                                 PartitionSpec::default_for(3),
                                                 MeasureKind::Concurrence);
    CHECK(classify(bell_mv).pair_case == PairCase::OnePair);

    const MeasureVector vac = measure_vector(w_class_state(1.0, {0.0, 0.0, 0.0}),
                                             PartitionSpec::default_for(3),
                                             MeasureKind::Concurrence);
    CHECK(classify(vac).pair_case == PairCase::NoEntangledPair);

    CHECK(classify(synthetic(MeasureKind::Concurrence, 0.8, {0.5, 0.0, 0.5})).pair_case ==
          PairCase::TwoOrMorePairs);
    CHECK(classify(synthetic(MeasureKind::Concurrence, 0.8, {0.5, 0.4, 0.5})).pair_case ==
          PairCase::AllPairs);
}

TEST_CASE("find_alpha0 reference roots") {
    const ThresholdResult a0c = find_alpha0(w3_concurrence());
    CHECK(a0c.kind == ThresholdKind::Alpha0_C);
    CHECK(a0c.threshold == doctest::Approx(1.70951).epsilon(1e-4));
    CHECK(a0c.residual <= 1e-10);
    CHECK_FALSE(a0c.saturated);
    CHECK(a0c.bracket_lo <= a0c.threshold);
    CHECK(a0c.threshold <= a0c.bracket_hi);

    CHECK(find_alpha0(example2_concurrence()).threshold ==
          doctest::Approx(0.783586).epsilon(1e-5));

    const ThresholdResult a0e = find_alpha0(w3_eof());
    CHECK(a0e.kind == ThresholdKind::Alpha0_E);
    CHECK(a0e.threshold == doctest::Approx(1.15959).epsilon(1e-4));
    CHECK(a0e.threshold <= std::sqrt(2.0));

    CHECK(find_alpha0(synthetic(MeasureKind::Concurrence, 0.9, {0.5, 0.5})).threshold ==
          doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(find_alpha0(synthetic(MeasureKind::Concurrence, 0.5, {0.5})),
                    HypothesisNotMet);
    CHECK_THROWS_AS(
        find_alpha0(synthetic(MeasureKind::ConcurrenceOfAssistance, 0.9, {0.5, 0.5})),
        DomainError);
}

TEST_CASE("find_alpha0 saturated branch") {
    const ThresholdResult sat =
        find_alpha0(synthetic(MeasureKind::Concurrence, 1.0, {1.0, 0.5}));
    CHECK(sat.saturated);
    CHECK(sat.threshold == 2.0);
}

TEST_CASE("alpha0 closed form for the isotropic W mixture") {
    CHECK(std::abs(alpha0_closed_form_example1(1.0) - 1.7095112913514548) <= 1e-12);

    // At t = 1 the closed form meets the root finder exactly; away from t = 1
    // its pair-concurrence expression differs from the Wootters value (the
    // spectrum has √((3-2t-t²)/48) twice, not √((3-2t-t²)/3) once), so the
    // root finder is checked against the corrected inverse instead.
    const MeasureVector mv1 = w3_concurrence();
    CHECK(std::abs(find_alpha0(mv1).threshold - alpha0_closed_form_example1(1.0)) <= 1e-6);

    const double t = 0.9;
    const DensityMatrix mix = isotropic_mixture(t, w3_state());
    const MeasureVector mv = synthetic(
        MeasureKind::Concurrence, 1.0,
        {concurrence_mixed(partial_trace(mix, {0, 1})),
         concurrence_mixed(partial_trace(mix, {0, 2}))});
    const double pair_c = 2.0 * t / 3.0 - std::sqrt((3.0 - 2.0 * t - t * t) / 12.0);
    const double corrected_alpha0 = -std::log(2.0) / std::log(pair_c);
    CHECK(std::abs(find_alpha0(mv).threshold - corrected_alpha0) <= 1e-6);

    // alpha0 -> 0+ as the formula's pair concurrence vanishes.
    const double near = alpha0_closed_form_example1(0.7837);
    const double nearer = alpha0_closed_form_example1(0.783612);
    CHECK(near < 0.1);
    CHECK(nearer < near);
    CHECK(nearer > 0.0);

    CHECK_THROWS_AS(alpha0_closed_form_example1(0.5), DomainError);
    CHECK_THROWS_AS(alpha0_closed_form_example1(1.5), DomainError);
}

TEST_CASE("find_alpha1 crossings") {
    const ThresholdResult a1e = find_alpha1(w3_eof());
    CHECK(a1e.kind == ThresholdKind::Alpha1_E);
    CHECK(a1e.threshold == doctest::Approx(1.35244).epsilon(1e-4));
    CHECK(a1e.grid_sign_changes == 1);
    CHECK(a1e.residual <= 1e-8);
    CHECK(a1e.threshold >= find_alpha0(w3_eof()).threshold);

    const ThresholdResult a1c = find_alpha1(w3_concurrence());
    CHECK(a1c.threshold == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(a1c.grid_sign_changes >= 1);

    CHECK_THROWS_AS(find_alpha1(synthetic(MeasureKind::Concurrence, 0.5, {0.5})),
                    HypothesisNotMet);
}

TEST_CASE("find_beta0") {
    const MeasureVector mv_c = w3_concurrence();
    const MeasureVector mv_a = measure_vector(w3_state(), PartitionSpec::default_for(3),
                                              MeasureKind::ConcurrenceOfAssistance);
    const ThresholdResult b0 = find_beta0(mv_c, mv_a);
    CHECK(b0.kind == ThresholdKind::Beta0);
    CHECK(b0.threshold == doctest::Approx(1.70951).epsilon(1e-4));

    // EoF form: root of 2 E^beta = 1 (assist values only sanity-checked).
    MeasureVector assist_e = w3_eof();
    for (double &p : assist_e.pairs) p += 0.1;
    CHECK(find_beta0(w3_eof(), assist_e).threshold ==
          doctest::Approx(1.15959).epsilon(1e-4));

    CHECK(find_beta0(synthetic(MeasureKind::Concurrence, 0.9, {0.5, 0.5}),
                     synthetic(MeasureKind::ConcurrenceOfAssistance, 0.9, {0.6, 0.6}))
              .threshold == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(find_beta0(mv_c, synthetic(MeasureKind::ConcurrenceOfAssistance, 0.9,
                                               {0.7, 0.7, 0.7})),
                    BadIndex);
    CHECK_THROWS_AS(find_beta0(mv_c, synthetic(MeasureKind::ConcurrenceOfAssistance, 0.9,
                                               {0.1, 0.7})),
                    InvariantViolation);
}

TEST_CASE("verify_region on the worked regions") {
    const MeasureVector mv_c = w3_concurrence();
    const double a0 = find_alpha0(mv_c).threshold;
    CHECK(verify_region(mv_c, linspace(0.0, a0, 40), Relation::PolygamyLE).all_pass);

    const MeasureVector mv_e = w3_eof();
    CHECK(verify_region(mv_e, linspace(std::sqrt(2.0), 4.0, 40), Relation::MonogamyGE)
              .all_pass);

    // CKW at alpha = 2 over a random ensemble.
    for (int k = 0; k < 100; ++k) {
        const PureState psi = haar_random_pure(3, 23000 + static_cast<std::uint64_t>(k));
        const MeasureVector mv =
            measure_vector(psi, PartitionSpec::default_for(3), MeasureKind::Concurrence);
        CHECK(verify_region(mv, {2.0}, Relation::MonogamyGE).all_pass);
    }

    // A single entangled pair: global dominates that pair for alpha >= 0.
    CVector v = CVector::Zero(8);
    v[0] = v[6] = 1.0 / std::sqrt(2.0);
    const MeasureVector one_pair = measure_vector(PureState(3, v),
                                                  PartitionSpec::default_for(3),
                                                  MeasureKind::Concurrence);
    CHECK(verify_region(one_pair, linspace(0.0, 4.0, 20), Relation::MonogamyGE).all_pass);
}

TEST_CASE("f is monotone and sandwiches its root") {
    for (const MeasureVector &mv : {w3_concurrence(), w3_eof(), example2_concurrence()}) {
        const double cap = power_cap(mv.kind);
        double prev = f_of_alpha(mv, 0.0);
        for (double a = 0.01; a <= cap; a += 0.01) {
            const double cur = f_of_alpha(mv, a);
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
        const ThresholdResult a0 = find_alpha0(mv);
        CHECK(f_of_alpha(mv, a0.threshold) == doctest::Approx(1.0).epsilon(1e-10));
        for (double a : linspace(0.0, a0.threshold, 10)) CHECK(f_of_alpha(mv, a) >= 1.0 - 1e-10);
        for (double a : linspace(a0.threshold, cap, 10)) CHECK(f_of_alpha(mv, a) <= 1.0 + 1e-10);
    }
}

TEST_CASE("negative exponent reversal on the W state") {
    const MeasureVector mv = w3_concurrence();
    for (double alpha : {-2.0, -1.0, -0.5}) {
        double rhs = 0.0;
        for (double p : mv.pairs) rhs += std::pow(p, alpha);
        CHECK(std::pow(mv.global, alpha) < rhs - 1e-9);
    }
}

TEST_CASE("verify_coa_polygamy") {
    const CoaPolygamyReport rep =
        verify_coa_polygamy(w3_state(), PartitionSpec::default_for(3));
    CHECK(rep.squares_hold);
    CHECK(rep.lhs_squared == doctest::Approx(8.0 / 9.0).epsilon(1e-9));
    CHECK(rep.rhs_squared == doctest::Approx(8.0 / 9.0).epsilon(1e-9));  // saturation
    CHECK(rep.beta_grid_checked);
    CHECK(rep.beta0.threshold == doctest::Approx(1.70951).epsilon(1e-4));
    CHECK(rep.all_hold);

    const CoaPolygamyReport vac =
        verify_coa_polygamy(w_class_state(1.0, {0.0, 0.0, 0.0}), PartitionSpec::default_for(3));
    CHECK(vac.squares_hold);
    CHECK_FALSE(vac.beta_grid_checked);
    CHECK(vac.all_hold);

    for (int k = 0; k < 100; ++k) {
        const PureState psi = haar_random_pure(3, 29000 + static_cast<std::uint64_t>(k));
        CHECK(verify_coa_polygamy(psi, PartitionSpec::default_for(3)).all_hold);
    }
}

TEST_CASE("compare_weighted_polygamy at the worked betas") {
    const PartitionSpec part = PartitionSpec::default_for(3);

    const WeightedComparisonReport at11 = compare_weighted_polygamy(w3_state(), part, 1.1);
    CHECK(at11.sum_bound_holds);
    CHECK_FALSE(at11.weighted_in_proven_range);  // beta^i weights only shrink for beta <= 1

    const WeightedComparisonReport at1 = compare_weighted_polygamy(w3_state(), part, 1.0);
    CHECK(at1.rhs_sum == doctest::Approx(at1.rhs_weighted).epsilon(1e-12));
    CHECK(at1.sum_bound_holds);

    const WeightedComparisonReport at0 = compare_weighted_polygamy(w3_state(), part, 0.0);
    CHECK(at0.lhs == doctest::Approx(1.0));
    CHECK(at0.rhs_sum == doctest::Approx(2.0));  // counts entangled pairs
    CHECK(at0.sum_bound_holds);

    CHECK_THROWS_AS(compare_weighted_polygamy(w3_state(), part, -0.5), DomainError);
}

TEST_CASE("entanglement threshold of the isotropic W mixture") {
    const PureState w3 = w3_state();
    const double tstar = entanglement_threshold_t(w3);
    // Squaring the pair concurrence 2t/3 = √((3-2t-t²)/12) gives
    // 19t² + 6t − 9 = 0, i.e. t* = (−3 + 6√5)/19. PPT flips sign there too.
    CHECK(std::abs(tstar - 0.54823199289467047) <= 1e-5);
    CHECK(std::abs(19.0 * tstar * tstar + 6.0 * tstar - 9.0) <= 1e-8);

    const DensityMatrix above = isotropic_mixture(tstar + 1e-4, w3);
    CHECK(concurrence_mixed(partial_trace(above, {0, 1})) > 0.0);
    const DensityMatrix below = isotropic_mixture(tstar - 1e-4, w3);
    CHECK(concurrence_mixed(partial_trace(below, {0, 1})) == 0.0);

    CHECK_THROWS_AS(entanglement_threshold_t(w_class_state(1.0, {0.0, 0.0, 0.0})),
                    NoSignChange);
}
