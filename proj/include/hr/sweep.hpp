#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hr/spectral.hpp"
#include "hr/types.hpp"

namespace hr {

struct SweepRow {
    int dimension = 0;
    double exponent = 0;
    Branch regime = Branch::middle;
    std::optional<int> k_m;
    int l_min = 0;
    double tilde_constant = 0;
    double upper_bound = 0;
    std::optional<double> prior_constant;
    std::optional<bool> strict_improvement;
    std::optional<double> oracle_value;
    std::optional<double> oracle_gap;
};

struct SweepRequest {
    int dimension = 0;
    double m_min = 0;
    double m_max = 0;
    int steps = 0;  // >= 2, endpoints included
    bool with_oracle = false;
    GridSpec grid = reference_grid;
    std::optional<int> mode_cap;  // oracle modes; defaults per regime
};

std::vector<SweepRow> run_sweep(const SweepRequest& req);

/// Deterministic CSV: fixed header, 15 significant digits, '.' decimal
/// separator, ',' delimiter, LF line endings. Absent optionals are empty
/// fields.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

std::string format_significant(double value, int digits);

}  // namespace hr
