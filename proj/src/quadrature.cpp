#include "hr/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hr {

namespace {

QuadratureRule build_rule(int order) {
    QuadratureRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_n(x) and P'_n(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[order - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
    if (order < 1 || order > 128)
        throw std::invalid_argument("Gauss-Legendre order out of range");
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, build_rule(order)).first;
    return it->second;
}

}  // namespace hr
