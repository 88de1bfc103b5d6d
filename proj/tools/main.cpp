// polyent — CLI for entanglement measures, polygamy/monogamy exponent
// thresholds, worked-example reproduction and ensemble verification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polyent/exponents.hpp"
#include "polyent/reproduce.hpp"
#include "polyent/state_io.hpp"
#include "polyent/textio.hpp"
#include "polyent/verify.hpp"

namespace {

using namespace polyent;

void write_output(const std::string &out_path, const std::string &text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open '" + out_path + "' for writing");
    out << text;
}

MeasureKind parse_kind(const std::string &name) {
    if (name == "concurrence") return MeasureKind::Concurrence;
    if (name == "coa") return MeasureKind::ConcurrenceOfAssistance;
    if (name == "eof") return MeasureKind::EoF;
    throw ParseError("unknown measure kind '" + name + "'");
}

GlobalEvaluator roof_fallback(const RestartBudget &budget) {
    return [budget](const DensityMatrix &rho, const PartitionSpec &part, MeasureKind kind) {
        const MeasureKind roof_kind =
            kind == MeasureKind::EoF ? MeasureKind::EoF : MeasureKind::Concurrence;
        const RoofDirection dir = kind == MeasureKind::ConcurrenceOfAssistance
                                      ? RoofDirection::Max
                                      : RoofDirection::Min;
        return roof_optimize(rho, part, roof_kind, dir, budget).value;
    };
}

MeasureVector load_measure_vector(const std::string &path, int focus, MeasureKind kind,
                                  const GlobalEvaluator &fallback) {
    const StateVariant state = load_state(path);
    return std::visit(
        [&](const auto &s) {
            const PartitionSpec part = PartitionSpec::default_for(s.n_qubits(), focus);
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PureState>)
                return measure_vector(s, part, kind);
            else
                return measure_vector(s, part, kind, fallback);
        },
        state);
}

// Pair values only; the placeholder global never reaches any output.
MeasureVector pairs_only_measure_vector(const std::string &path, int focus, MeasureKind kind) {
    const StateVariant state = load_state(path);
    const DensityMatrix rho = std::visit(
        [](const auto &s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PureState>)
                return density(s);
            else
                return s;
        },
        state);
    const PartitionSpec part = PartitionSpec::default_for(rho.n_qubits(), focus);
    MeasureVector mv;
    mv.kind = kind;
    mv.global = 1.0;
    for (int partner : part.partners) {
        const DensityMatrix pair = partial_trace(rho, {part.focus, partner});
        switch (kind) {
            case MeasureKind::Concurrence: mv.pairs.push_back(concurrence_mixed(pair)); break;
            case MeasureKind::ConcurrenceOfAssistance: mv.pairs.push_back(coa(pair)); break;
            case MeasureKind::EoF: mv.pairs.push_back(eof_two_qubit(pair)); break;
        }
    }
    return mv;
}

int cmd_measure(const std::string &state_path, int focus, const std::string &kind_name,
                const std::string &format, const std::string &out_path, bool no_roof,
                int restarts, std::uint64_t seed) {
    RestartBudget budget;
    budget.restarts = restarts;
    budget.seed_salt = seed;
    const MeasureKind kind = parse_kind(kind_name);
    const MeasureVector mv = load_measure_vector(state_path, focus, kind,
                                                 no_roof ? GlobalEvaluator{} : roof_fallback(budget));

    std::ostringstream out;
    if (format == "csv") {
        out << "global";
        for (size_t i = 0; i < mv.pairs.size(); ++i) out << ",pair_" << (i + 1);
        out << "\n" << fmt17(mv.global);
        for (double p : mv.pairs) out << "," << fmt17(p);
        out << "\n";
    } else {
        out << "{\n  \"measure\": \"" << to_string(mv.kind) << "\",\n  \"focus\": " << focus
            << ",\n  \"global\": " << fmt17(mv.global)
            << ",\n  \"global_approximate\": " << (mv.global_approximate ? "true" : "false")
            << ",\n  \"pairs\": [";
        for (size_t i = 0; i < mv.pairs.size(); ++i)
            out << (i ? ", " : "") << fmt17(mv.pairs[i]);
        out << "]\n}\n";
    }
    write_output(out_path, out.str());
    return 0;
}

int cmd_threshold(const std::string &state_path, int focus, const std::string &kind_name,
                  const std::string &which, const std::string &format,
                  const std::string &out_path, double tol_entangled, double tol_residual,
                  int restarts, std::uint64_t seed) {
    const MeasureKind kind = parse_kind(kind_name);
    if (kind == MeasureKind::ConcurrenceOfAssistance)
        throw ParseError("thresholds are defined for --kind concurrence or eof");
    RestartBudget budget;
    budget.restarts = restarts;
    budget.seed_salt = seed;

    ThresholdResult res;
    bool global_approximate = false;
    if (which == "alpha0") {
        const MeasureVector mv = pairs_only_measure_vector(state_path, focus, kind);
        res = find_alpha0(mv, tol_entangled, tol_residual);
    } else if (which == "alpha1") {
        const MeasureVector mv =
            load_measure_vector(state_path, focus, kind, roof_fallback(budget));
        global_approximate = mv.global_approximate;
        res = find_alpha1(mv, tol_entangled, tol_residual);
    } else if (which == "beta0") {
        const MeasureVector mv = pairs_only_measure_vector(state_path, focus, kind);
        MeasureVector assist;
        if (kind == MeasureKind::Concurrence) {
            assist = pairs_only_measure_vector(state_path, focus,
                                               MeasureKind::ConcurrenceOfAssistance);
        } else {
            // E_a pairs from the roof maximizer (lower bounds).
            const StateVariant state = load_state(state_path);
            const DensityMatrix rho = std::visit(
                [](const auto &s) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, PureState>)
                        return density(s);
                    else
                        return s;
                },
                state);
            const PartitionSpec part = PartitionSpec::default_for(rho.n_qubits(), focus);
            assist.kind = MeasureKind::EoF;
            assist.global = 1.0;
            for (int partner : part.partners)
                assist.pairs.push_back(eoa(partial_trace(rho, {part.focus, partner}), budget));
        }
        res = find_beta0(mv, assist, tol_entangled, tol_residual);
    } else {
        throw ParseError("--which must be alpha0, alpha1 or beta0");
    }

    std::ostringstream out;
    if (format == "csv") {
        out << "which,kind,threshold,bracket_lo,bracket_hi,residual,iterations,saturated,"
               "grid_sign_changes\n";
        out << which << "," << kind_name << "," << fmt17(res.threshold) << ","
            << fmt17(res.bracket_lo) << "," << fmt17(res.bracket_hi) << ","
            << fmt17(res.residual) << "," << res.iterations << "," << (res.saturated ? 1 : 0)
            << "," << res.grid_sign_changes << "\n";
    } else {
        out << "{\n  \"which\": \"" << which << "\",\n  \"kind\": \"" << to_string(res.kind)
            << "\",\n  \"threshold\": " << fmt17(res.threshold) << ",\n  \"bracket\": ["
            << fmt17(res.bracket_lo) << ", " << fmt17(res.bracket_hi)
            << "],\n  \"residual\": " << fmt17(res.residual)
            << ",\n  \"iterations\": " << res.iterations
            << ",\n  \"saturated\": " << (res.saturated ? "true" : "false")
            << ",\n  \"grid_sign_changes\": " << res.grid_sign_changes;
        if (global_approximate) out << ",\n  \"global_approximate\": true";
        out << "\n}\n";
    }
    write_output(out_path, out.str());
    return 0;
}

int cmd_example(int which) {
    const ExampleReport rep = run_example(which);
    std::printf("%-40s %14s %16s %10s %9s  %s\n", "quantity", "paper", "computed", "|diff|",
                "tol", "status");
    for (const ExampleRow &row : rep.rows) {
        std::printf("%-40s %14.8g %16.10g %10.2e %9.1e  %s\n", row.label.c_str(),
                    row.expected, row.computed, std::abs(row.expected - row.computed),
                    row.tolerance, row.pass ? "ok" : "FAIL");
    }
    std::printf("example %d: %s\n", which, rep.all_pass ? "all values reproduced" : "FAILED");
    return rep.all_pass ? 0 : 1;
}

std::string figure_csv(int which, const std::string &grid_text) {
    std::ostringstream out;
    if (which == 1) {
        GridSpec grid{0.783612, 1.0, 0.001};
        if (!grid_text.empty()) grid = parse_grid(grid_text);
        const PureState w3 = w3_state();
        out << "t,alpha0\n";
        for (double t : grid_points(grid)) {
            const DensityMatrix mix = isotropic_mixture(t, w3);
            MeasureVector mv;
            mv.kind = MeasureKind::Concurrence;
            mv.global = 1.0;
            mv.pairs = {concurrence_mixed(partial_trace(mix, {0, 1})),
                        concurrence_mixed(partial_trace(mix, {0, 2}))};
            out << fmt17(t) << "," << fmt17(find_alpha0(mv).threshold) << "\n";
        }
        return out.str();
    }

    GridSpec grid{0.0, 2.5, 0.005};
    if (!grid_text.empty()) grid = parse_grid(grid_text);
    MeasureVector mv;
    switch (which) {
        case 2:
            mv = measure_vector(w3_state(), PartitionSpec::default_for(3),
                                MeasureKind::Concurrence);
            break;
        case 3:
            mv = measure_vector(four_qubit_w_class_state(), PartitionSpec::default_for(4),
                                MeasureKind::Concurrence);
            break;
        case 4:
            mv = measure_vector(w3_state(), PartitionSpec::default_for(3), MeasureKind::EoF);
            break;
        default: throw ParseError("figure: which must be 1, 2, 3 or 4");
    }
    out << "alpha,lhs,rhs\n";
    for (double alpha : grid_points(grid)) {
        out << fmt17(alpha) << "," << fmt17(std::pow(mv.global, alpha)) << ","
            << fmt17(f_of_alpha(mv, alpha)) << "\n";
    }
    return out.str();
}

int cmd_figure(int which, const std::string &grid_text, const std::string &out_path) {
    write_output(out_path, figure_csv(which, grid_text));
    return 0;
}

int cmd_sweep(const std::string &state_path, int focus, const std::string &kind_name,
              const std::string &grid_text, const std::string &format,
              const std::string &out_path, int restarts, std::uint64_t seed) {
    RestartBudget budget;
    budget.restarts = restarts;
    budget.seed_salt = seed;
    const MeasureKind kind = parse_kind(kind_name);
    const MeasureVector mv =
        load_measure_vector(state_path, focus, kind, roof_fallback(budget));
    const GridSpec grid = parse_grid(grid_text);
    const RegionReport region =
        verify_region(mv, grid_points(grid), Relation::PolygamyLE);

    std::ostringstream out;
    if (format == "json") {
        out << "{\n  \"measure\": \"" << to_string(kind) << "\",\n  \"rows\": [\n";
        for (size_t i = 0; i < region.points.size(); ++i) {
            const RegionPoint &pt = region.points[i];
            out << "    [" << fmt17(pt.alpha) << ", " << fmt17(pt.lhs) << ", "
                << fmt17(pt.rhs) << "]" << (i + 1 < region.points.size() ? "," : "") << "\n";
        }
        out << "  ]\n}\n";
    } else {
        out << "alpha,lhs,rhs\n";
        for (const RegionPoint &pt : region.points)
            out << fmt17(pt.alpha) << "," << fmt17(pt.lhs) << "," << fmt17(pt.rhs) << "\n";
    }
    write_output(out_path, out.str());
    return 0;
}

int cmd_verify(int ensemble, int ensemble_4q, std::uint64_t seed, int grid_pts, bool oracle,
               int oracle_ensemble, int eq12_ensemble, int restarts, double tol_slack,
               double tol_entangled, const std::string &out_path) {
    EnsembleConfig cfg;
    cfg.n_states_3q = ensemble;
    cfg.n_states_4q = ensemble_4q >= 0 ? ensemble_4q : (2 * ensemble) / 5;
    cfg.seed = seed;
    cfg.grid_points = grid_pts;
    cfg.slack = tol_slack;
    cfg.entangled_tol = tol_entangled;

    VerifyReport rep = run_theorem_suite(cfg);
    if (oracle) {
        OracleConfig ocfg;
        ocfg.n_states = oracle_ensemble;
        ocfg.n_eq12_states = eq12_ensemble;
        ocfg.seed = seed;
        ocfg.budget.restarts = restarts;
        const VerifyReport orep = run_oracle_suite(ocfg);
        for (const SuiteCheck &c : orep.checks) {
            SuiteCheck &dst = rep.check(c.name);
            dst.total += c.total;
            dst.failures += c.failures;
        }
    }

    std::ostringstream out;
    out << "{\n  \"seed\": " << seed << ",\n  \"ensemble_3q\": " << cfg.n_states_3q
        << ",\n  \"ensemble_4q\": " << cfg.n_states_4q
        << ",\n  \"oracle\": " << (oracle ? "true" : "false") << ",\n  \"checks\": [\n";
    for (size_t i = 0; i < rep.checks.size(); ++i) {
        const SuiteCheck &c = rep.checks[i];
        out << "    {\"name\": \"" << c.name << "\", \"total\": " << c.total
            << ", \"failures\": " << c.failures << "}"
            << (i + 1 < rep.checks.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"total_checks\": " << rep.total_checks()
        << ",\n  \"total_failures\": " << rep.total_failures()
        << ",\n  \"all_pass\": " << (rep.all_pass() ? "true" : "false") << "\n}\n";
    write_output(out_path, out.str());
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"entanglement measures and polygamy/monogamy exponent thresholds for "
                 "n-qubit states"};
    app.require_subcommand(1);

    std::string state_path, out_path, grid_text;
    std::string kind_name = "concurrence";
    std::string format = "json";
    std::string which = "alpha0";
    int focus = 0;
    int example_which = 1, figure_which = 1;
    int restarts = 20;
    int ensemble = 500, ensemble_4q = -1, grid_pts = 20;
    int oracle_ensemble = 200, eq12_ensemble = 100;
    bool no_roof = false, oracle = false;
    std::uint64_t seed = 42;
    double tol_entangled = tol::entangled;
    double tol_residual = tol::root_residual;
    double tol_slack = tol::region_slack;

    CLI::App *measure = app.add_subcommand("measure", "per-pair and global measure values");
    measure->add_option("--state", state_path, "state file")->required();
    measure->add_option("--focus", focus, "focus qubit A");
    measure->add_option("--kind", kind_name, "concurrence|coa|eof");
    measure->add_option("--format", format, "json|csv");
    measure->add_option("--out", out_path, "output path (default stdout)");
    measure->add_flag("--no-roof", no_roof, "fail on mixed-state global values");
    measure->add_option("--restarts", restarts, "roof optimizer restarts");
    measure->add_option("--seed", seed, "roof optimizer seed salt");

    CLI::App *threshold = app.add_subcommand("threshold", "locate alpha0 / alpha1 / beta0");
    threshold->add_option("--state", state_path, "state file")->required();
    threshold->add_option("--focus", focus, "focus qubit A");
    threshold->add_option("--kind", kind_name, "concurrence|eof");
    threshold->add_option("--which", which, "alpha0|alpha1|beta0");
    threshold->add_option("--format", format, "json|csv");
    threshold->add_option("--out", out_path, "output path (default stdout)");
    threshold->add_option("--tol-entangled", tol_entangled, "entanglement tolerance");
    threshold->add_option("--tol-residual", tol_residual, "root residual target");
    threshold->add_option("--restarts", restarts, "roof optimizer restarts");
    threshold->add_option("--seed", seed, "roof optimizer seed salt");

    CLI::App *example = app.add_subcommand("example", "reproduce a worked example");
    example->add_option("which", example_which, "1|2|3")->required();

    CLI::App *figure = app.add_subcommand("figure", "emit figure data as CSV");
    figure->add_option("which", figure_which, "1|2|3|4")->required();
    figure->add_option("--out", out_path, "output path (default stdout)");
    figure->add_option("--grid", grid_text, "grid a:b:step overriding the default");

    CLI::App *verify = app.add_subcommand("verify", "seeded ensemble property suites");
    verify->add_option("--ensemble", ensemble, "number of 3-qubit states");
    verify->add_option("--ensemble-4q", ensemble_4q,
                       "number of 4-qubit states (default: 2/5 of --ensemble)");
    verify->add_option("--seed", seed, "ensemble seed");
    verify->add_option("--grid-points", grid_pts, "points per inequality grid");
    verify->add_flag("--oracle", oracle, "add roof-vs-closed-form agreement checks");
    verify->add_option("--oracle-ensemble", oracle_ensemble, "rank-2 states for --oracle");
    verify->add_option("--eq12-ensemble", eq12_ensemble,
                       "3-qubit states for the assisted-EoF sum bound");
    verify->add_option("--restarts", restarts, "roof optimizer restarts");
    verify->add_option("--tol-slack", tol_slack, "inequality slack");
    verify->add_option("--tol-entangled", tol_entangled, "entanglement tolerance");
    verify->add_option("--out", out_path, "report path (default stdout)");

    CLI::App *sweep = app.add_subcommand("sweep", "tabulate global^alpha vs pair-power sum");
    sweep->add_option("--state", state_path, "state file")->required();
    sweep->add_option("--focus", focus, "focus qubit A");
    sweep->add_option("--kind", kind_name, "concurrence|coa|eof");
    sweep->add_option("--grid", grid_text, "grid a:b:step")->required();
    sweep->add_option("--format", format, "csv|json");
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--restarts", restarts, "roof optimizer restarts");
    sweep->add_option("--seed", seed, "roof optimizer seed salt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (measure->parsed())
            return cmd_measure(state_path, focus, kind_name, format, out_path, no_roof,
                               restarts, seed);
        if (threshold->parsed())
            return cmd_threshold(state_path, focus, kind_name, which, format, out_path,
                                 tol_entangled, tol_residual, restarts, seed);
        if (example->parsed()) return cmd_example(example_which);
        if (figure->parsed()) return cmd_figure(figure_which, grid_text, out_path);
        if (verify->parsed())
            return cmd_verify(ensemble, ensemble_4q, seed, grid_pts, oracle, oracle_ensemble,
                              eq12_ensemble, restarts, tol_slack, tol_entangled, out_path);
        if (sweep->parsed())
            return cmd_sweep(state_path, focus, kind_name, grid_text, format, out_path,
                             restarts, seed);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
