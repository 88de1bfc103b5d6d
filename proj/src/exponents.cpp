#include "polyent/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polyent {

namespace {

constexpr int kMaxBisectIters = 200;
constexpr double kGridZeroTol = 1e-10;  // |g| below this at a grid point counts as a root

std::vector<double> entangled_pairs_of(const MeasureVector &mv, double entangled_tol) {
    std::vector<double> out;
    for (double p : mv.pairs)
        if (p > entangled_tol) out.push_back(p);
    return out;
}

double pair_power_sum(const std::vector<double> &pairs, double alpha) {
    double s = 0.0;
    for (double p : pairs) s += std::pow(p, alpha);
    return s;
}

ThresholdKind alpha0_kind_for(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Concurrence: return ThresholdKind::Alpha0_C;
        case MeasureKind::EoF: return ThresholdKind::Alpha0_E;
        default:
            throw DomainError("thresholds are defined on concurrence or EoF pair values");
    }
}

ThresholdResult bisect_pair_sum(const std::vector<double> &pairs, MeasureKind measure,
                                ThresholdKind kind, double residual_tol) {
    const double cap = power_cap(measure);
    ThresholdResult res;
    res.kind = kind;

    const double f_cap = pair_power_sum(pairs, cap) - 1.0;
    if (f_cap > 0.0) {
        // Only possible when some pair sits at 1; the polygamy inequality then
        // holds trivially on all of [0, cap].
        res.threshold = cap;
        res.bracket_lo = res.bracket_hi = cap;
        res.residual = f_cap;
        res.saturated = true;
        return res;
    }

    double lo = 0.0, hi = cap;  // F(lo) = count-1 > 0, F(hi) <= 0
    double mid = cap, fm = f_cap;
    for (int it = 0; it < kMaxBisectIters; ++it) {
        mid = 0.5 * (lo + hi);
        fm = pair_power_sum(pairs, mid) - 1.0;
        res.iterations = it + 1;
        if (std::abs(fm) <= residual_tol) break;
        if (fm > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    res.threshold = mid;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.residual = std::abs(fm);
    return res;
}

} // namespace

const char *to_string(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::Alpha0_C: return "alpha0_concurrence";
        case ThresholdKind::Alpha0_E: return "alpha0_eof";
        case ThresholdKind::Alpha1_C: return "alpha1_concurrence";
        case ThresholdKind::Alpha1_E: return "alpha1_eof";
        case ThresholdKind::Beta0: return "beta0";
    }
    return "?";
}

const char *to_string(PairCase c) {
    switch (c) {
        case PairCase::NoEntangledPair: return "no_entangled_pair";
        case PairCase::OnePair: return "one_pair";
        case PairCase::TwoOrMorePairs: return "two_or_more_pairs";
        case PairCase::AllPairs: return "all_pairs";
    }
    return "?";
}

double power_cap(MeasureKind kind) {
    return kind == MeasureKind::EoF ? std::sqrt(2.0) : 2.0;
}

double f_of_alpha(const MeasureVector &mv, double alpha, double entangled_tol) {
    if (alpha < 0.0)
        throw DomainError("f_of_alpha: alpha must be nonnegative");
    return pair_power_sum(entangled_pairs_of(mv, entangled_tol), alpha);
}

double g_of_alpha(const MeasureVector &mv, double alpha, double entangled_tol) {
    if (mv.global <= entangled_tol)
        throw DegenerateGlobal("g_of_alpha: global measure value vanishes");
    return f_of_alpha(mv, alpha, entangled_tol) - std::pow(mv.global, alpha);
}

CaseClassification classify(const MeasureVector &mv, double entangled_tol) {
    CaseClassification c;
    for (size_t i = 0; i < mv.pairs.size(); ++i)
        if (mv.pairs[i] > entangled_tol) c.entangled_pairs.push_back(static_cast<int>(i));
    const size_t k = c.entangled_pairs.size();
    if (k == 0)
        c.pair_case = PairCase::NoEntangledPair;
    else if (k == 1)
        c.pair_case = PairCase::OnePair;
    else if (k == mv.pairs.size())
        c.pair_case = PairCase::AllPairs;
    else
        c.pair_case = PairCase::TwoOrMorePairs;
    return c;
}

ThresholdResult find_alpha0(const MeasureVector &mv, double entangled_tol,
                            double residual_tol) {
    const std::vector<double> pairs = entangled_pairs_of(mv, entangled_tol);
    if (pairs.size() < 2)
        throw HypothesisNotMet("find_alpha0: fewer than two entangled pairs");
    return bisect_pair_sum(pairs, mv.kind, alpha0_kind_for(mv.kind), residual_tol);
}

double alpha0_closed_form_example1(double t) {
    const double disc = 9.0 - 6.0 * t - 3.0 * t * t;
    if (disc < 0.0)
        throw DomainError("alpha0_closed_form_example1: t above 1");
    const double pair_c = (2.0 * t - std::sqrt(disc)) / 3.0;
    if (pair_c <= 0.0)
        throw DomainError("alpha0_closed_form_example1: pair concurrence vanishes below the "
                          "entanglement threshold");
    return -std::log(2.0) / std::log(pair_c);
}

ThresholdResult find_alpha1(const MeasureVector &mv, double entangled_tol,
                            double residual_tol, double grid_step) {
    const ThresholdResult a0 = find_alpha0(mv, entangled_tol, residual_tol);
    if (mv.global <= entangled_tol)
        throw DegenerateGlobal("find_alpha1: global measure value vanishes");
    const double cap = power_cap(mv.kind);
    const ThresholdKind kind = mv.kind == MeasureKind::EoF ? ThresholdKind::Alpha1_E
                                                           : ThresholdKind::Alpha1_C;

    auto g = [&](double alpha) { return g_of_alpha(mv, alpha, entangled_tol); };

    // Scan grid over [alpha0, cap].
    std::vector<double> xs;
    for (double x = a0.threshold; x < cap; x += grid_step) xs.push_back(x);
    xs.push_back(cap);
    std::vector<double> gs(xs.size());
    for (size_t k = 0; k < xs.size(); ++k) gs[k] = g(xs[k]);

    // Count crossings: a maximal run of near-zeros is one event, as is a
    // direct +/− flip. The run containing a flip is still one event.
    int events = 0;
    int last_sign = 0;
    bool in_zero_run = false;
    size_t first_event_idx = xs.size();
    for (size_t k = 0; k < xs.size(); ++k) {
        const int s = gs[k] > kGridZeroTol ? 1 : (gs[k] < -kGridZeroTol ? -1 : 0);
        if (s == 0) {
            if (!in_zero_run) {
                ++events;
                if (first_event_idx == xs.size()) first_event_idx = k;
                in_zero_run = true;
            }
        } else {
            if (last_sign != 0 && s != last_sign && !in_zero_run) {
                ++events;
                if (first_event_idx == xs.size()) first_event_idx = k;
            }
            in_zero_run = false;
            last_sign = s;
        }
    }

    if (first_event_idx == xs.size())
        throw NoSignChange("find_alpha1: g has no sign change on the scan grid");

    ThresholdResult res;
    res.kind = kind;
    res.grid_sign_changes = events;

    const size_t k = first_event_idx;
    if (std::abs(gs[k]) <= kGridZeroTol) {
        // Root on a grid point.
        res.threshold = xs[k];
        res.residual = std::abs(gs[k]);
        res.bracket_lo = k > 0 ? xs[k - 1] : xs[k];
        res.bracket_hi = k + 1 < xs.size() ? xs[k + 1] : xs[k];
        return res;
    }

    double lo = xs[k - 1], hi = xs[k];  // g(lo) and g(hi) have opposite strict signs
    const double sign_lo = gs[k - 1] > 0.0 ? 1.0 : -1.0;
    double mid = lo, gm = gs[k - 1];
    for (int it = 0; it < kMaxBisectIters; ++it) {
        mid = 0.5 * (lo + hi);
        gm = g(mid);
        res.iterations = it + 1;
        if (std::abs(gm) <= residual_tol) break;
        if (gm * sign_lo > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    res.threshold = mid;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.residual = std::abs(gm);
    return res;
}

ThresholdResult find_beta0(const MeasureVector &mv_measure, const MeasureVector &mv_assist,
                           double entangled_tol, double residual_tol) {
    if (mv_assist.pairs.size() != mv_measure.pairs.size())
        throw BadIndex("find_beta0: assisted and non-assisted pair counts differ");
    for (size_t i = 0; i < mv_measure.pairs.size(); ++i)
        if (mv_assist.pairs[i] + 1e-6 < mv_measure.pairs[i])
            throw InvariantViolation(
                "find_beta0: assisted pair value below the non-assisted one");

    const std::vector<double> pairs = entangled_pairs_of(mv_measure, entangled_tol);
    if (pairs.size() < 2)
        throw HypothesisNotMet("find_beta0: fewer than two entangled pairs");
    alpha0_kind_for(mv_measure.kind);  // validates the measure kind
    return bisect_pair_sum(pairs, mv_measure.kind, ThresholdKind::Beta0, residual_tol);
}

RegionReport verify_region(const MeasureVector &mv, const std::vector<double> &alpha_grid,
                           Relation relation, double slack, double entangled_tol) {
    const std::vector<double> pairs = entangled_pairs_of(mv, entangled_tol);
    RegionReport rep;
    rep.relation = relation;
    for (double alpha : alpha_grid) {
        RegionPoint pt;
        pt.alpha = alpha;
        if (mv.global > entangled_tol)
            pt.lhs = std::pow(mv.global, alpha);
        else
            pt.lhs = alpha > 0.0 ? 0.0 : (alpha == 0.0 ? 1.0
                                                       : std::numeric_limits<double>::infinity());
        pt.rhs = pair_power_sum(pairs, alpha);
        pt.pass = relation == Relation::MonogamyGE ? pt.lhs >= pt.rhs - slack
                                                   : pt.lhs <= pt.rhs + slack;
        rep.all_pass = rep.all_pass && pt.pass;
        rep.points.push_back(pt);
    }
    return rep;
}

CoaPolygamyReport verify_coa_polygamy(const PureState &psi, const PartitionSpec &part) {
    const MeasureVector mv_c = measure_vector(psi, part, MeasureKind::Concurrence);
    const MeasureVector mv_a = measure_vector(psi, part, MeasureKind::ConcurrenceOfAssistance);

    CoaPolygamyReport rep;
    rep.lhs_squared = mv_c.global * mv_c.global;
    for (double a : mv_a.pairs) rep.rhs_squared += a * a;
    rep.squares_hold = rep.lhs_squared <= rep.rhs_squared + tol::region_slack;
    rep.all_hold = rep.squares_hold;

    if (classify(mv_c).entangled_pairs.size() >= 2) {
        rep.beta_grid_checked = true;
        rep.beta0 = find_beta0(mv_c, mv_a);
        // Corollary inequality C^β(global) ≤ Σ C_a^β on [0, β₀].
        MeasureVector hybrid = mv_c;
        hybrid.pairs = mv_a.pairs;
        std::vector<double> grid;
        for (int k = 0; k < 20; ++k)
            grid.push_back(rep.beta0.threshold * static_cast<double>(k) / 19.0);
        rep.beta_region = verify_region(hybrid, grid, Relation::PolygamyLE);
        rep.all_hold = rep.all_hold && rep.beta_region.all_pass;
    }
    return rep;
}

WeightedComparisonReport compare_weighted_polygamy(const PureState &psi,
                                                   const PartitionSpec &part, double beta,
                                                   const RestartBudget &budget) {
    if (beta < 0.0)
        throw DomainError("compare_weighted_polygamy: beta must be nonnegative");
    part.validate(psi.n_qubits());

    WeightedComparisonReport rep;
    rep.beta = beta;
    rep.lhs = std::pow(eof_pure(psi, part), beta);

    const DensityMatrix rho = density(psi);
    for (int partner : part.partners)
        rep.ea_pairs.push_back(eoa(partial_trace(rho, {part.focus, partner}), budget));

    const size_t np = rep.ea_pairs.size();
    double weight = 1.0;
    for (size_t i = 0; i < np; ++i) {
        weight *= beta;  // βⁱ with i starting at 1
        if (rep.ea_pairs[i] > tol::entangled) {
            const double term = std::pow(rep.ea_pairs[i], beta);
            rep.rhs_sum += term;
            rep.rhs_weighted += weight * term;
        }
    }

    rep.ordering_condition_met = true;
    for (size_t i = 0; i + 1 < np; ++i) {
        double tail = 0.0;
        for (size_t j = i + 1; j < np; ++j) tail += rep.ea_pairs[j];
        if (rep.ea_pairs[i] > tail + tol::region_slack) rep.ordering_condition_met = false;
    }

    rep.sum_bound_holds = rep.lhs <= rep.rhs_sum + tol::region_slack;
    rep.weighted_bound_holds = rep.lhs <= rep.rhs_weighted + tol::region_slack;
    rep.weighted_in_proven_range = beta <= 1.0;
    return rep;
}

double entanglement_threshold_t(const PureState &base) {
    if (base.n_qubits() != 3)
        throw BadParameter("entanglement_threshold_t: expected a 3-qubit state");
    auto pair_difference = [&](double t) {
        const DensityMatrix mix = isotropic_mixture(t, base);
        return wootters_difference(partial_trace(mix, {0, 1}));
    };
    double lo = 0.0, hi = 1.0;
    const double d_lo = pair_difference(lo);
    const double d_hi = pair_difference(hi);
    if (d_lo > 0.0 || d_hi <= 0.0)
        throw NoSignChange("entanglement_threshold_t: pair concurrence does not change sign "
                           "on t in [0,1]");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (pair_difference(mid) > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace polyent
