#include "hr/constants.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hr {

namespace {

double sq(double x) { return x * x; }

// Relative tolerance used for boundary membership: exact-boundary inputs
// route to the closed middle interval.
bool near(double m, double boundary) {
    return std::abs(m - boundary) <= 1e-12 * std::max(1.0, std::abs(boundary));
}

}  // namespace

const char* to_string(Branch b) {
    switch (b) {
        case Branch::one_dim: return "OneDim";
        case Branch::middle: return "Middle";
        case Branch::low_bad: return "LowBad";
        case Branch::high_bad: return "HighBad";
    }
    return "?";
}

const char* to_string(ProofCase c) {
    switch (c) {
        case ProofCase::a: return "A";
        case ProofCase::b1_good: return "B1-good";
        case ProofCase::b1_bad: return "B1-bad";
        case ProofCase::b2_good: return "B2-good";
        case ProofCase::b2_bad: return "B2-bad";
        case ProofCase::n1: return "N1";
    }
    return "?";
}

Parameters validate_parameters(int dimension, double exponent) {
    if (dimension < 1)
        throw std::invalid_argument("dimension must satisfy N >= 1");
    if (!(exponent > 2.0 - dimension))
        throw std::invalid_argument(
            "weight exponent must satisfy m > 2 - N (the singular weight is not "
            "locally integrable otherwise); got m = " + std::to_string(exponent) +
            ", N = " + std::to_string(dimension));
    return Parameters{dimension, exponent};
}

RegimeBoundaries regime_boundaries(int dimension) {
    if (dimension < 1)
        throw std::invalid_argument("dimension must satisfy N >= 1");
    const double n = dimension;
    const double s = std::sqrt(sq(n - 1) + 1.0);
    RegimeBoundaries b;
    b.integrability_limit = 2.0 - n;
    b.degenerate_exponent = 4.0 - n;
    b.middle_lower = 2.0 - s;
    b.middle_upper = 2.0 + s;
    b.prior_threshold = (n + 4.0 - 2.0 * std::sqrt(n * n - n + 1.0)) / 3.0;
    return b;
}

double sphere_eigenvalue(int dimension, int degree) {
    if (dimension < 2)
        throw std::invalid_argument("sphere eigenvalues need N >= 2");
    if (degree < 0)
        throw std::invalid_argument("degree must be nonnegative");
    return static_cast<double>(degree) * (degree + dimension - 2);
}

double index_term(const Parameters& p, int degree) {
    const double h = p.dimension + p.exponent - 4.0;
    return 0.5 * h * h + sphere_eigenvalue(p.dimension, degree) - (p.exponent - 2.0) * h;
}

int threshold_index(const Parameters& p) {
    if (classify_regime(p).branch != Branch::high_bad)
        throw std::domain_error(
            "threshold index is defined only for m > 2 + sqrt((N-1)^2 + 1)");
    const double n = p.dimension;
    const double h = n + p.exponent - 4.0;
    // I_k >= 0  <=>  k^2 + (N-2) k >= q
    const double q = (p.exponent - 2.0) * h - 0.5 * h * h;
    const double root = 0.5 * (-(n - 2.0) + std::sqrt(sq(n - 2.0) + 4.0 * q));
    int k = std::max(1, static_cast<int>(std::ceil(root - 1e-9)));
    while (index_term(p, k) < 0.0) ++k;
    while (k > 1 && index_term(p, k - 1) >= 0.0) --k;
    return k;
}

double branch_constant(const Parameters& p, int degree) {
    const double n = p.dimension;
    const double m = p.exponent;
    const double den = m + n - 4.0;
    if (den == 0.0)
        throw std::domain_error("branch constant undefined at m = 4 - N");
    const double l2 = 2.0 * degree;
    return sq(-n + m - l2) * sq(l2 + m + n - 4.0) / (4.0 * sq(den));
}

double branch_correction(const Parameters& p, int degree) {
    const double den = p.dimension + p.exponent - 4.0;
    if (den == 0.0)
        throw std::domain_error("branch correction undefined at m = 4 - N");
    return -4.0 * sphere_eigenvalue(p.dimension, degree) * index_term(p, degree) / sq(den);
}

Regime classify_regime(const Parameters& p) {
    if (p.dimension == 1) return {Branch::one_dim, ProofCase::n1};

    const RegimeBoundaries b = regime_boundaries(p.dimension);
    const double m = p.exponent;

    Branch branch;
    if (near(m, b.middle_lower) || near(m, b.middle_upper))
        branch = Branch::middle;
    else if (m < b.middle_lower)
        branch = Branch::low_bad;
    else if (m > b.middle_upper)
        branch = Branch::high_bad;
    else
        branch = Branch::middle;

    ProofCase pc;
    if (m >= b.degenerate_exponent && m <= 2.0)
        pc = ProofCase::a;
    else if (m < b.degenerate_exponent)
        pc = branch == Branch::low_bad ? ProofCase::b1_bad : ProofCase::b1_good;
    else
        pc = branch == Branch::high_bad ? ProofCase::b2_bad : ProofCase::b2_good;

    return {branch, pc};
}

ConstantReport sharp_constant(const Parameters& p) {
    const double n = p.dimension;
    const double m = p.exponent;
    ConstantReport report;
    report.regime = classify_regime(p);

    switch (report.regime.branch) {
        case Branch::one_dim:
        case Branch::middle:
            report.value = sq(0.5 * (n - m));
            report.l_min = 0;
            break;
        case Branch::low_bad:
            report.value = sq(sq(m - 2.0) - n * n) / (4.0 * sq(n + m - 4.0));
            report.l_min = 1;
            break;
        case Branch::high_bad: {
            const int k = threshold_index(p);
            report.k_m = k;
            double best = std::numeric_limits<double>::infinity();
            int best_degree = 0;
            for (int l = 0; l <= k; ++l) {
                const double value = branch_constant(p, l);
                report.branch_values.emplace_back(l, value);
                if (value < best) {
                    best = value;
                    best_degree = l;
                }
            }
            report.value = best;
            report.l_min = best_degree;
            break;
        }
    }
    report.degenerate = report.value == 0.0;
    return report;
}

}  // namespace hr
