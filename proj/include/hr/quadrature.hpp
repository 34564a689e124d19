#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hr {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Cached per order.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const QuadratureRule& gauss_legendre(int order);

struct IntegralEstimate {
    double value = 0;
    double error = 0;  // difference between the last two refinement levels
    int panels = 0;
};

template <typename F>
double panel_sum(F&& f, double a, double b, int panels, const QuadratureRule& rule) {
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        total += 0.5 * h * s;
    }
    return total;
}

/// Fixed-order Gauss-Legendre with dyadic panel refinement. Converged when
/// the difference between successive levels is <= tol * max(1, |value|).
/// Throws QuadratureError if the level cap is reached first.
template <typename F>
IntegralEstimate integrate_refined(F&& f, double a, double b, double tol,
                                   int max_levels = 14, int order = 16) {
    const QuadratureRule& rule = gauss_legendre(order);
    double prev = panel_sum(f, a, b, 1, rule);
    for (int level = 1; level <= max_levels; ++level) {
        const int panels = 1 << level;
        const double cur = panel_sum(f, a, b, panels, rule);
        const double err = std::abs(cur - prev);
        if (err <= tol * std::max(1.0, std::abs(cur)))
            return {cur, err, panels};
        prev = cur;
    }
    throw QuadratureError("quadrature did not converge within the refinement depth cap");
}

}  // namespace hr
