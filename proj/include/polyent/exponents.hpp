// exponents.hpp — polygamy/monogamy exponent thresholds and region checks.
//
// For a measure vector with pair values m_i and global value M, the defining
// functions are f(α) = Σ_i m_i^α over entangled pairs and g(α) = f(α) − M^α.
// α₀ solves f(α₀) = 1 on (0, cap] with cap = 2 (concurrence) or √2 (EoF);
// α₁ is the leftmost root of g on [α₀, cap]; β₀ solves the same equation as
// α₀ and certifies the assisted-measure polygamy inequalities. f is
// monotonically decreasing on pair values ≤ 1, so plain bisection locates
// every root.

#pragma once

#include "polyent/measures.hpp"
#include "polyent/roof.hpp"

namespace polyent {

enum class ThresholdKind { Alpha0_C, Alpha0_E, Alpha1_C, Alpha1_E, Beta0 };

const char *to_string(ThresholdKind kind);

struct ThresholdResult {
    ThresholdKind kind = ThresholdKind::Alpha0_C;
    double threshold = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;   // |defining function at threshold|
    int iterations = 0;
    bool saturated = false;      // f(cap) > 1 (some pair at 1): threshold pinned to cap
    int grid_sign_changes = 0;   // α₁ only: crossings of g seen on the scan grid
};

enum class PairCase { NoEntangledPair, OnePair, TwoOrMorePairs, AllPairs };

const char *to_string(PairCase c);

struct CaseClassification {
    std::vector<int> entangled_pairs;  // indices i with pairs[i] > tolerance
    PairCase pair_case = PairCase::NoEntangledPair;
};

/// Exponent cap of the threshold interval: 2 for concurrence, √2 for EoF.
double power_cap(MeasureKind kind);

/// Σ_i pairs[i]^α over entangled pairs (pairs ≤ tolerance excluded). α ≥ 0.
double f_of_alpha(const MeasureVector &mv, double alpha,
                  double entangled_tol = tol::entangled);

/// f(α) − global^α. Throws DegenerateGlobal when the global value vanishes.
double g_of_alpha(const MeasureVector &mv, double alpha,
                  double entangled_tol = tol::entangled);

CaseClassification classify(const MeasureVector &mv, double entangled_tol = tol::entangled);

/// Root of f(α) = 1. Requires at least two entangled pairs (HypothesisNotMet).
ThresholdResult find_alpha0(const MeasureVector &mv,
                            double entangled_tol = tol::entangled,
                            double residual_tol = tol::root_residual);

/// α₀(t) = [log₂(3/(2t−√(9−6t−3t²)))]⁻¹ for the isotropic W mixture;
/// DomainError below the entanglement threshold.
double alpha0_closed_form_example1(double t);

/// Leftmost root of g on [α₀, cap]: fine grid scan (step 1e-3) + bisection.
/// grid_sign_changes reports how many crossings the scan saw in total.
ThresholdResult find_alpha1(const MeasureVector &mv,
                            double entangled_tol = tol::entangled,
                            double residual_tol = tol::root_residual,
                            double grid_step = 1e-3);

/// Same root-finding as find_alpha0 on the NON-assisted pair values; the
/// assisted vector is validated against C ≤ C_a (resp. E ≤ E_a) entrywise.
ThresholdResult find_beta0(const MeasureVector &mv_measure,
                           const MeasureVector &mv_assist,
                           double entangled_tol = tol::entangled,
                           double residual_tol = tol::root_residual);

enum class Relation { MonogamyGE, PolygamyLE };

struct RegionPoint {
    double alpha = 0.0;
    double lhs = 0.0;  // global^α
    double rhs = 0.0;  // Σ pairs^α over entangled pairs
    bool pass = false;
};

struct RegionReport {
    Relation relation = Relation::PolygamyLE;
    std::vector<RegionPoint> points;
    bool all_pass = true;
};

RegionReport verify_region(const MeasureVector &mv, const std::vector<double> &alpha_grid,
                           Relation relation, double slack = tol::region_slack,
                           double entangled_tol = tol::entangled);

struct CoaPolygamyReport {
    double lhs_squared = 0.0;   // C²(|ψ⟩_{A|B₁…})
    double rhs_squared = 0.0;   // Σ C_a²(ρ_{AB_i})
    bool squares_hold = false;
    bool beta_grid_checked = false;  // requires ≥ 2 entangled pairs
    ThresholdResult beta0;
    RegionReport beta_region;  // C^β(global) ≤ Σ C_a^β on [0, β₀]
    bool all_hold = false;
};

CoaPolygamyReport verify_coa_polygamy(const PureState &psi, const PartitionSpec &part);

struct WeightedComparisonReport {
    double beta = 0.0;
    double lhs = 0.0;              // E_a^β of the global pure state (= E^β)
    double rhs_sum = 0.0;          // Σ E_a^β(ρ_{AB_i})
    double rhs_weighted = 0.0;     // Σ βⁱ E_a^β(ρ_{AB_i})
    bool sum_bound_holds = false;
    bool weighted_bound_holds = false;    // numeric comparison at this β
    bool ordering_condition_met = false;  // E_a(AB_i) ≤ Σ_{j>i} E_a(AB_j)
    bool weighted_in_proven_range = false;  // the weighted bound is only proven for β ∈ [0,1]
    std::vector<double> ea_pairs;  // roof lower bounds on E_a(ρ_{AB_i})
};

/// Compares the Σ E_a^β bound with the Hamming-weighted Σ βⁱ E_a^β bound at a
/// fixed β. The failed ordering hypothesis is reported, not thrown.
WeightedComparisonReport compare_weighted_polygamy(const PureState &psi,
                                                   const PartitionSpec &part, double beta,
                                                   const RestartBudget &budget = {});

/// Root of the pair concurrence C(ρ_{AB}(t)) in the isotropic mixture family,
/// located by bisection on the unclamped Wootters difference over t ∈ [0,1].
double entanglement_threshold_t(const PureState &base);

} // namespace polyent
