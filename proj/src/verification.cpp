#include "hr/verification.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "hr/constants.hpp"
#include "hr/fulldim.hpp"
#include "hr/identities.hpp"
#include "hr/trial.hpp"

namespace hr::verify {

namespace {

std::string case_name(const PanelCase& c) {
    std::ostringstream os;
    os << "N=" << c.dimension << " m=" << c.exponent << " l=" << c.degree;
    return os.str();
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

const std::vector<PanelCase>& builtin_panel() {
    static const std::vector<PanelCase> panel = {
        {5, 0.0, 0}, {3, 0.0, 0}, {5, -2.5, 1}, {5, 8.0, 1}, {2, 4.0, 1}, {1, 2.0, 0},
    };
    return panel;
}

bool SuiteReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.pass; });
}

SuiteReport run_trial_suite(const TrialOptions& opt) {
    SuiteReport report{"trial", {}};
    for (const PanelCase& c : builtin_panel()) {
        const Parameters p = validate_parameters(c.dimension, c.exponent);
        const double target = branch_constant(p, c.degree);
        const double sharp = sharp_constant(p).value;

        CaseResult result;
        result.name = case_name(c);
        try {
            const double limit = limit_extrapolate(p, c.degree, opt.eps_list, opt.quad_tol);
            const double gap = std::abs(limit - target);
            const bool limit_ok = target != 0.0 ? gap <= opt.rel_tol * std::abs(target)
                                                : gap <= opt.abs_tol;

            // Every finite-eps quotient must sit above the sharp constant.
            double worst_margin = 0.0;
            bool inequality_ok = true;
            for (double eps : opt.eps_list) {
                const auto q = rayleigh_quotient(make_trial_spec(p, c.degree, eps), opt.quad_tol);
                const double margin = q.quotient - sharp;
                worst_margin = std::min(worst_margin, margin);
                if (margin < -1e-9) inequality_ok = false;
            }

            result.pass = limit_ok && inequality_ok;
            result.measured = limit;
            result.bound = target;
            result.detail = "limit " + fmt(limit) + " target " + fmt(target) +
                            " |gap| " + fmt(gap) + " min-margin " + fmt(worst_margin);
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("error: ") + e.what();
        }
        report.cases.push_back(std::move(result));
    }
    return report;
}

SuiteReport run_oracle_suite(const OracleOptions& opt) {
    SuiteReport report{"oracle", {}};
    for (const PanelCase& c : builtin_panel()) {
        const Parameters p = validate_parameters(c.dimension, c.exponent);
        const ConstantReport closed = sharp_constant(p);
        // The natural scale for the gap: the constant itself, or the mode-0
        // value when the constant degenerates to zero.
        const double scale =
            closed.value > 0.0 ? closed.value
                               : branch_constant(p, 0);

        CaseResult result;
        result.name = case_name(c);
        try {
            const SpectralResult r = oracle_constant(p, default_mode_cap(p), opt.grid);
            const double gap = r.overall_min - closed.value;
            const bool one_sided = gap >= -1e-9 * std::max(1.0, scale);
            const bool tight = gap <= opt.rel_tol * scale;
            const bool mode_ok = r.argmin_mode == closed.l_min;
            result.pass = one_sided && tight && mode_ok;
            result.measured = r.overall_min;
            result.bound = closed.value;
            result.detail = "min " + fmt(r.overall_min) + " closed " + fmt(closed.value) +
                            " gap/scale " + fmt(gap / scale) + " argmin l=" +
                            std::to_string(r.argmin_mode) + " (want " +
                            std::to_string(closed.l_min) + ")";
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("error: ") + e.what();
        }
        report.cases.push_back(std::move(result));
    }
    return report;
}

SuiteReport run_identity_suite(const IdentityOptions& opt) {
    SuiteReport report{"identities", {}};
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> coeff(-1.0, 2.0);
    std::uniform_real_distribution<double> support_lo(0.3, 1.2);
    std::uniform_real_distribution<double> width(0.8, 3.0);

    const std::vector<Parameters> grid = {
        validate_parameters(5, 0.0),  validate_parameters(3, 0.0),
        validate_parameters(5, -2.5), validate_parameters(5, 8.0),
        validate_parameters(2, 4.0),  validate_parameters(2, 0.3),
        validate_parameters(3, -0.7), validate_parameters(1, 2.0),
    };

    double worst_ibp = 0.0;
    bool ratios_ok = true;
    double worst_ratio_margin = 0.0;
    for (int b = 0; b < opt.random_bumps; ++b) {
        const double lo = support_lo(rng);
        const double hi = lo + width(rng);
        const double poly[4] = {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        const RadialProfile u = bump_profile(lo, hi, poly);
        const Parameters& p = grid[b % grid.size()];

        const IbpResiduals res = ibp_identity_check(p, u);
        worst_ibp = std::max({worst_ibp, res.laplacian_identity, res.mixed_identity});

        const HardyRatios ratios = onedim_hardy_check(p, u);
        const double n = p.dimension, m = p.exponent;
        const double bound1 = std::pow((n + m - 2.0) / 2.0, 2);
        const double bound2 = std::pow((n + m - 4.0) / 2.0, 2);
        const double margin = std::min(ratios.ratio1 - bound1, ratios.ratio2 - bound2);
        worst_ratio_margin = std::min(worst_ratio_margin, margin);
        if (ratios.ratio1 < bound1 * (1.0 - 1e-10) - 1e-12 ||
            ratios.ratio2 < bound2 * (1.0 - 1e-10) - 1e-12)
            ratios_ok = false;
    }

    report.cases.push_back({"integration-by-parts residuals (" +
                                std::to_string(opt.random_bumps) + " random bumps)",
                            worst_ibp <= opt.ibp_tol, worst_ibp, opt.ibp_tol,
                            "worst relative residual " + fmt(worst_ibp)});
    report.cases.push_back({"weighted Hardy quotient bounds", ratios_ok, worst_ratio_margin,
                            0.0, "worst margin above bound " + fmt(worst_ratio_margin)});

    // Discrete Hardy pencil: int (v')^2 r^{N+m-3} against int v^2 r^{N+m-5}
    // converges to ((N+m-4)/2)^2 from above as the window grows.
    for (const Parameters& p : {validate_parameters(5, 0.0), validate_parameters(3, 0.0)}) {
        const double target = std::pow((p.dimension + p.exponent - 4.0) / 2.0, 2);
        std::vector<double> values;
        bool above = true;
        for (double half_window : {4.0, 8.0, 16.0}) {
            const int points = std::max(50, static_cast<int>(2 * half_window *
                                                             opt.pencil_points_per_unit));
            const GridSpec grid_spec{-half_window, half_window, points};
            const BandedSymmetric a =
                assemble_radial_form(grid_spec, p, FormCoefficients{0.0, 1.0, 0.0});
            const BandedSymmetric b =
                assemble_radial_form(grid_spec, p, FormCoefficients{0.0, 0.0, 1.0});
            const double value = min_generalized_eigenvalue(a, b);
            if (value < target - 1e-6) above = false;
            values.push_back(value);
        }
        const bool decreasing = values[0] > values[1] && values[1] > values[2];
        std::ostringstream os;
        os << "values";
        for (double v : values) os << " " << fmt(v);
        os << " -> " << fmt(target);
        report.cases.push_back({"1-d Hardy pencil window convergence N=" +
                                    std::to_string(p.dimension),
                                above && decreasing, values.back(), target, os.str()});
    }
    return report;
}

SuiteReport run_fulldim_suite(const FulldimOptions& opt) {
    SuiteReport report{"fulldim", {}};
    // Three exponents per dimension, one in each regime.
    const std::vector<std::pair<int, std::vector<double>>> cases = {
        {2, {0.3, 1.5, 4.5}},
        {3, {-0.7, 1.0, 5.0}},
    };
    const double poly[3] = {1.0, -0.5, 0.8};
    for (const auto& [dim, exps] : cases) {
        for (double m : exps) {
            double worst = 0.0;
            for (int l = 0; l <= opt.max_degree; ++l) {
                const RadialProfile u = bump_profile(0.7, 3.1, poly);
                const FulldimComparison cmp = fulldim_compare(dim, m, l, u);
                worst = std::max({worst, cmp.lhs_gap, cmp.rhs_gap});
            }
            std::ostringstream name;
            name << "N=" << dim << " m=" << m << " l<=" << opt.max_degree;
            report.cases.push_back({name.str(), worst <= opt.gap_tol, worst, opt.gap_tol,
                                    "worst relative gap " + fmt(worst)});
        }
    }
    return report;
}

}  // namespace hr::verify
