#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace hr {

/// Validated parameter pair for the weighted inequality: dimension N >= 1 and
/// weight exponent m > 2 - N (local integrability of the singular weight).
struct Parameters {
    int dimension = 0;
    double exponent = 0.0;
};

/// Branch of the sharp-constant formula.
enum class Branch { one_dim, middle, low_bad, high_bad };

/// Diagnostic case split used to derive the lower bounds. "good"/"bad" refers
/// to the sign of the degree-1 index term (bad = negative, symmetry breaking
/// possible).
enum class ProofCase { a, b1_good, b1_bad, b2_good, b2_bad, n1 };

struct Regime {
    Branch branch = Branch::middle;
    ProofCase proof_case = ProofCase::a;
};

const char* to_string(Branch b);
const char* to_string(ProofCase c);

/// The m-values where the regime classification and the prior-work catalog
/// change shape, for a fixed dimension.
struct RegimeBoundaries {
    double integrability_limit = 0;  // 2 - N
    double degenerate_exponent = 0;  // 4 - N (branch-constant denominator root)
    double middle_lower = 0;         // 2 - sqrt((N-1)^2 + 1)
    double middle_upper = 0;         // 2 + sqrt((N-1)^2 + 1)
    double prior_threshold = 0;      // (N + 4 - 2 sqrt(N^2 - N + 1)) / 3
};

/// Full description of the sharp constant at one parameter pair.
struct ConstantReport {
    double value = 0.0;
    Regime regime{};
    int l_min = 0;                   // achieving spherical-harmonic degree
    std::optional<int> k_m;          // threshold index (high_bad only)
    std::vector<std::pair<int, double>> branch_values;  // degrees 0..k_m (high_bad only)
    bool degenerate = false;         // value == 0: the inequality collapses
};

/// Value with first and second derivative at a point.
struct Derivatives2 {
    double value = 0;
    double first = 0;
    double second = 0;
};

}  // namespace hr
