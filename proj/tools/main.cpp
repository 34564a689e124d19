// Command-line front end: closed-form constants, regime classification,
// parameter sweeps, and the numerical verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hr/constants.hpp"
#include "hr/prior.hpp"
#include "hr/spectral.hpp"
#include "hr/sweep.hpp"
#include "hr/verification.hpp"

namespace {

constexpr int kSchemaVersion = 1;

using ordered_json = nlohmann::ordered_json;

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return 2;
    }
    file << text;
    return 0;
}

ordered_json report_to_json(const hr::Parameters& p, const hr::ConstantReport& report) {
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["N"] = p.dimension;
    j["m"] = p.exponent;
    j["regime"] = hr::to_string(report.regime.branch);
    j["proof_case"] = hr::to_string(report.regime.proof_case);
    j["value"] = report.value;
    j["l_min"] = report.l_min;
    if (report.k_m) j["k_m"] = *report.k_m;
    if (!report.branch_values.empty()) {
        ordered_json branches = ordered_json::array();
        for (const auto& [degree, value] : report.branch_values)
            branches.push_back({{"degree", degree}, {"value", value}});
        j["branch_values"] = branches;
    }
    j["upper_bound"] = std::pow((p.dimension - p.exponent) / 2.0, 2);
    j["degenerate"] = report.degenerate;
    return j;
}

void print_constant_text(const hr::Parameters& p, const hr::ConstantReport& report) {
    std::printf("C(N=%d, m=%.12g) = %.12g\n", p.dimension, p.exponent, report.value);
    std::printf("  regime      %s (case %s)\n", hr::to_string(report.regime.branch),
                hr::to_string(report.regime.proof_case));
    std::printf("  l_min       %d\n", report.l_min);
    if (report.k_m) std::printf("  k(m)        %d\n", *report.k_m);
    if (!report.branch_values.empty()) {
        std::printf("  per-degree constants:\n");
        for (const auto& [degree, value] : report.branch_values)
            std::printf("    l=%d  %.12g%s\n", degree, value,
                        degree == report.l_min ? "  (min)" : "");
    }
    if (report.degenerate)
        std::printf("  note: the constant vanishes; the inequality degenerates here\n");
}

int run_verify(const std::string& suite, const std::vector<double>& eps,
               std::optional<double> grid_t, std::optional<int> grid_points,
               std::optional<double> tol) {
    hr::verify::SuiteReport report;
    if (suite == "trial") {
        hr::verify::TrialOptions opt;
        if (!eps.empty()) opt.eps_list = eps;
        if (tol) opt.quad_tol = *tol;
        report = hr::verify::run_trial_suite(opt);
    } else if (suite == "oracle") {
        hr::verify::OracleOptions opt;
        if (grid_t) opt.grid = {-*grid_t, *grid_t, opt.grid.points};
        if (grid_points) opt.grid.points = *grid_points;
        if (tol) opt.rel_tol = *tol;
        report = hr::verify::run_oracle_suite(opt);
    } else if (suite == "identities") {
        report = hr::verify::run_identity_suite({});
    } else if (suite == "fulldim") {
        report = hr::verify::run_fulldim_suite({});
    } else {
        std::cerr << "error: unknown suite '" << suite
                  << "' (expected trial|oracle|identities|fulldim)\n";
        return 2;
    }

    for (const auto& c : report.cases)
        std::printf("[%s] %s: %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    const bool ok = report.all_pass();
    std::printf("%s suite: %s\n", report.suite.c_str(), ok ? "all passed" : "FAILURES");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp constants of the weighted Hardy-Rellich inequality with radial derivative"};
    app.require_subcommand(1);

    int dim = 0;
    double m = 0.0;
    bool as_json = false;
    std::string out_path;

    auto* cmd_constant = app.add_subcommand("constant", "sharp constant at one (N, m)");
    cmd_constant->add_option("--N", dim, "dimension")->required();
    cmd_constant->add_option("--m", m, "weight exponent")->required();
    cmd_constant->add_flag("--json", as_json, "machine-readable output");
    cmd_constant->add_option("--out", out_path, "write to file instead of stdout");

    auto* cmd_classify = app.add_subcommand("classify", "regime and proof case at one (N, m)");
    cmd_classify->add_option("--N", dim, "dimension")->required();
    cmd_classify->add_option("--m", m, "weight exponent")->required();
    cmd_classify->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_boundaries = app.add_subcommand("boundaries", "regime boundaries for a dimension");
    cmd_boundaries->add_option("--N", dim, "dimension")->required();
    cmd_boundaries->add_flag("--json", as_json, "machine-readable output");

    auto* cmd_compare = app.add_subcommand("compare", "radial-derivative vs full-gradient constant");
    cmd_compare->add_option("--N", dim, "dimension")->required();
    cmd_compare->add_option("--m", m, "weight exponent")->required();
    cmd_compare->add_flag("--json", as_json, "machine-readable output");

    double m_min = 0.0, m_max = 0.0, grid_t_value = 15.0;
    int steps = 0, grid_points_value = hr::reference_grid.points;
    bool csv = false, json_sweep = false, with_oracle = false;
    std::optional<int> kmax;
    auto* cmd_sweep = app.add_subcommand("sweep", "uniform sweep over m at fixed N");
    cmd_sweep->add_option("--N", dim, "dimension")->required();
    cmd_sweep->add_option("--m-min", m_min, "lower end of the m range")->required();
    cmd_sweep->add_option("--m-max", m_max, "upper end of the m range")->required();
    cmd_sweep->add_option("--steps", steps, "number of rows (endpoints included)")->required();
    cmd_sweep->add_flag("--csv", csv, "CSV output (default)");
    cmd_sweep->add_flag("--json", json_sweep, "JSON output");
    cmd_sweep->add_flag("--oracle", with_oracle, "add the spectral cross-check per row");
    cmd_sweep->add_option("--grid-T", grid_t_value, "oracle half-window in log radius");
    cmd_sweep->add_option("--grid-points", grid_points_value, "oracle grid points");
    cmd_sweep->add_option("--kmax", kmax, "oracle mode cap");
    cmd_sweep->add_option("--out", out_path, "write to file instead of stdout");

    std::string suite;
    std::vector<double> eps_list;
    std::optional<double> verify_grid_t, verify_tol;
    std::optional<int> verify_grid_points;
    auto* cmd_verify = app.add_subcommand("verify", "run a built-in verification suite");
    cmd_verify->add_option("suite", suite, "trial|oracle|identities|fulldim")->required();
    cmd_verify->add_option("--eps", eps_list, "trial eps list (decreasing)");
    cmd_verify->add_option("--grid-T", verify_grid_t, "oracle half-window in log radius");
    cmd_verify->add_option("--grid-points", verify_grid_points, "oracle grid points");
    cmd_verify->add_option("--tol", verify_tol, "suite tolerance override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_constant->parsed()) {
            const hr::Parameters p = hr::validate_parameters(dim, m);
            const hr::ConstantReport report = hr::sharp_constant(p);
            if (as_json) return write_output(report_to_json(p, report).dump(2) + "\n", out_path);
            print_constant_text(p, report);
            return 0;
        }

        if (cmd_classify->parsed()) {
            const hr::Parameters p = hr::validate_parameters(dim, m);
            const hr::Regime regime = hr::classify_regime(p);
            const hr::RegimeBoundaries b = hr::regime_boundaries(dim);
            if (as_json) {
                ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["N"] = dim;
                j["m"] = m;
                j["regime"] = hr::to_string(regime.branch);
                j["proof_case"] = hr::to_string(regime.proof_case);
                j["middle_lower"] = b.middle_lower;
                j["middle_upper"] = b.middle_upper;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            std::printf("N=%d m=%.12g: regime %s (case %s)\n", dim, m,
                        hr::to_string(regime.branch), hr::to_string(regime.proof_case));
            std::printf("  middle interval [%.12g, %.12g]\n", b.middle_lower, b.middle_upper);
            return 0;
        }

        if (cmd_boundaries->parsed()) {
            const hr::RegimeBoundaries b = hr::regime_boundaries(dim);
            if (as_json) {
                ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["N"] = dim;
                j["integrability_limit"] = b.integrability_limit;
                j["degenerate_exponent"] = b.degenerate_exponent;
                j["middle_lower"] = b.middle_lower;
                j["middle_upper"] = b.middle_upper;
                j["prior_threshold"] = b.prior_threshold;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            std::printf("N = %d\n", dim);
            std::printf("  integrability limit (2-N)      %.12g\n", b.integrability_limit);
            std::printf("  degenerate exponent (4-N)      %.12g\n", b.degenerate_exponent);
            std::printf("  middle regime lower edge       %.12g\n", b.middle_lower);
            std::printf("  middle regime upper edge       %.12g\n", b.middle_upper);
            std::printf("  prior-work equality threshold  %.12g\n", b.prior_threshold);
            return 0;
        }

        if (cmd_compare->parsed()) {
            const hr::Parameters p = hr::validate_parameters(dim, m);
            const hr::ImprovementReport rep = hr::improvement_report(p);
            if (as_json) {
                ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["N"] = dim;
                j["m"] = m;
                j["tilde_constant"] = rep.tilde_constant;
                if (rep.prior_constant) j["prior_constant"] = *rep.prior_constant;
                if (rep.strict_improvement) j["strict_improvement"] = *rep.strict_improvement;
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            std::printf("radial-derivative constant  %.12g\n", rep.tilde_constant);
            if (rep.prior_constant) {
                std::printf("full-gradient constant      %.12g\n", *rep.prior_constant);
                std::printf("strict improvement          %s\n",
                            *rep.strict_improvement ? "yes" : "no");
            } else {
                std::printf("full-gradient constant      not explicitly known here\n");
            }
            return 0;
        }

        if (cmd_sweep->parsed()) {
            hr::SweepRequest req;
            req.dimension = dim;
            req.m_min = m_min;
            req.m_max = m_max;
            req.steps = steps;
            req.with_oracle = with_oracle;
            req.grid = hr::GridSpec{-grid_t_value, grid_t_value, grid_points_value};
            req.mode_cap = kmax;
            const std::vector<hr::SweepRow> rows = hr::run_sweep(req);
            if (json_sweep && !csv) {
                ordered_json j;
                j["schema_version"] = kSchemaVersion;
                ordered_json arr = ordered_json::array();
                for (const auto& row : rows) {
                    ordered_json r;
                    r["N"] = row.dimension;
                    r["m"] = row.exponent;
                    r["regime"] = hr::to_string(row.regime);
                    if (row.k_m) r["k_m"] = *row.k_m;
                    r["l_min"] = row.l_min;
                    r["tilde_constant"] = row.tilde_constant;
                    r["upper_bound"] = row.upper_bound;
                    if (row.prior_constant) r["prior_constant"] = *row.prior_constant;
                    if (row.strict_improvement) r["strict_improvement"] = *row.strict_improvement;
                    if (row.oracle_value) r["oracle_value"] = *row.oracle_value;
                    if (row.oracle_gap) r["oracle_gap"] = *row.oracle_gap;
                    arr.push_back(std::move(r));
                }
                j["rows"] = std::move(arr);
                return write_output(j.dump(2) + "\n", out_path);
            }
            return write_output(hr::sweep_to_csv(rows), out_path);
        }

        if (cmd_verify->parsed())
            return run_verify(suite, eps_list, verify_grid_t, verify_grid_points, verify_tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
