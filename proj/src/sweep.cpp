#include "hr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hr/constants.hpp"
#include "hr/prior.hpp"

namespace hr {

std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

std::vector<SweepRow> run_sweep(const SweepRequest& req) {
    if (req.steps < 2)
        throw std::invalid_argument("sweep needs at least 2 steps");
    if (!(req.m_max >= req.m_min))
        throw std::invalid_argument("sweep range is empty (m_max < m_min)");
    validate_parameters(req.dimension, req.m_min);  // rejects m_min <= 2 - N

    std::vector<SweepRow> rows;
    rows.reserve(req.steps);
    for (int i = 0; i < req.steps; ++i) {
        const double m = req.m_min + i * (req.m_max - req.m_min) / (req.steps - 1);
        const Parameters p = validate_parameters(req.dimension, m);
        const ConstantReport report = sharp_constant(p);
        const ImprovementReport improvement = improvement_report(p);

        SweepRow row;
        row.dimension = req.dimension;
        row.exponent = m;
        row.regime = report.regime.branch;
        row.k_m = report.k_m;
        row.l_min = report.l_min;
        row.tilde_constant = report.value;
        row.upper_bound = std::pow((req.dimension - m) / 2.0, 2);
        row.prior_constant = improvement.prior_constant;
        row.strict_improvement = improvement.strict_improvement;

        if (req.with_oracle) {
            const int cap = req.mode_cap.value_or(default_mode_cap(p));
            const SpectralResult oracle = oracle_constant(p, cap, req.grid);
            row.oracle_value = oracle.overall_min;
            row.oracle_gap = oracle.overall_min - report.value;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "N,m,regime,k_m,l_min,tilde_constant,upper_bound,prior_constant,"
        "strict_improvement,oracle_value,oracle_gap\n";
    for (const SweepRow& row : rows) {
        out += std::to_string(row.dimension);
        out += ',';
        out += format_significant(row.exponent, 15);
        out += ',';
        out += to_string(row.regime);
        out += ',';
        if (row.k_m) out += std::to_string(*row.k_m);
        out += ',';
        out += std::to_string(row.l_min);
        out += ',';
        out += format_significant(row.tilde_constant, 15);
        out += ',';
        out += format_significant(row.upper_bound, 15);
        out += ',';
        if (row.prior_constant) out += format_significant(*row.prior_constant, 15);
        out += ',';
        if (row.strict_improvement) out += *row.strict_improvement ? "true" : "false";
        out += ',';
        if (row.oracle_value) out += format_significant(*row.oracle_value, 15);
        out += ',';
        if (row.oracle_gap) out += format_significant(*row.oracle_gap, 15);
        out += '\n';
    }
    return out;
}

}  // namespace hr
