#pragma once

#include <string>
#include <vector>

#include "hr/spectral.hpp"
#include "hr/types.hpp"

namespace hr::verify {

/// Built-in panel: one case per regime plus the degenerate zero-constant
/// point, each with the achieving degree.
struct PanelCase {
    int dimension;
    double exponent;
    int degree;
};

const std::vector<PanelCase>& builtin_panel();

struct CaseResult {
    std::string name;
    bool pass = false;
    double measured = 0;
    double bound = 0;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;
    bool all_pass() const;
};

struct TrialOptions {
    std::vector<double> eps_list{0.02, 0.01, 0.005};
    double quad_tol = 1e-12;
    double rel_tol = 1e-4;   // extrapolated vs closed form
    double abs_tol = 1e-6;   // where the closed form is zero
};

struct OracleOptions {
    // Wider than the reference window: the essential truncation bias on
    // [-T, T] scales like 1/T^2 with case-dependent constants that reach a
    // few percent at T = 15 (see tests for the exact window limits).
    GridSpec grid{-50.0, 50.0, 12000};
    double rel_tol = 0.02;
};

struct IdentityOptions {
    int random_bumps = 20;
    unsigned seed = 20240817;
    double ibp_tol = 1e-8;
    double pencil_points_per_unit = 100.0;  // grid density for the Hardy pencils
};

struct FulldimOptions {
    double gap_tol = 1e-6;
    int max_degree = 4;
};

SuiteReport run_trial_suite(const TrialOptions& opt = {});
SuiteReport run_oracle_suite(const OracleOptions& opt = {});
SuiteReport run_identity_suite(const IdentityOptions& opt = {});
SuiteReport run_fulldim_suite(const FulldimOptions& opt = {});

}  // namespace hr::verify
