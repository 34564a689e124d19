#include "hr/trial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hr/constants.hpp"
#include "hr/quadrature.hpp"

namespace hr {

namespace {

double sq(double x) { return x * x; }

double power_exponent(const TrialSpec& spec) {
    return -(spec.params.dimension + spec.params.exponent - 4.0) / 2.0 + spec.eps;
}

}  // namespace

Derivatives2 cutoff_eval(double r) {
    if (r < 0.0)
        throw std::invalid_argument("cutoff argument must be nonnegative");
    if (r <= 1.0) return {1.0, 0.0, 0.0};
    if (r >= 2.0) return {0.0, 0.0, 0.0};
    // Quintic smoothstep S(t) = 6t^5 - 15t^4 + 10t^3 on t = r - 1 in (0,1);
    // S and its first two derivatives vanish-match at both ends.
    const double t = r - 1.0;
    const double s = t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
    const double s1 = 30.0 * t * t * sq(t - 1.0);
    const double s2 = 60.0 * t * (2.0 * t - 1.0) * (t - 1.0);
    return {1.0 - s, -s1, -s2};
}

TrialSpec make_trial_spec(const Parameters& p, int degree, double eps) {
    if (degree < 0)
        throw std::invalid_argument("trial degree must be nonnegative");
    if (p.dimension == 1 && degree != 0)
        throw std::invalid_argument("N = 1 admits only the radial trial (degree 0)");
    if (!(eps > 0.0))
        throw std::invalid_argument("trial eps must be positive (integrability)");
    return TrialSpec{p, degree, eps};
}

Derivatives2 trial_eval(const TrialSpec& spec, double r) {
    if (!(r > 0.0))
        throw std::invalid_argument("trial profile is evaluated at r > 0");
    if (r >= 2.0) return {0.0, 0.0, 0.0};
    const double a = power_exponent(spec);
    const Derivatives2 g = cutoff_eval(r);
    const double pw = std::pow(r, a);
    const double pw1 = a * std::pow(r, a - 1.0);
    const double pw2 = a * (a - 1.0) * std::pow(r, a - 2.0);
    return {pw * g.value,
            pw1 * g.value + pw * g.first,
            pw2 * g.value + 2.0 * pw1 * g.first + pw * g.second};
}

AsymptoticLeads asymptotic_leading(const TrialSpec& spec) {
    const double a = power_exponent(spec);
    const double inv = 1.0 / (2.0 * spec.eps);
    return {inv, a * a * inv, a * a * sq(a - 1.0) * inv};
}

RadialIntegrals radial_integrals(const TrialSpec& spec, double tol) {
    if (!(spec.eps > 0.0))
        throw std::invalid_argument("trial eps must be positive");
    const double n = spec.params.dimension;
    const double m = spec.params.exponent;

    // Exact closed forms on (0,1] where the cutoff is identically 1: every
    // integrand is r^{2 eps - 1}.
    const AsymptoticLeads inner = asymptotic_leading(spec);

    const auto outer0 = integrate_refined(
        [&](double r) { return sq(trial_eval(spec, r).value) * std::pow(r, n + m - 5.0); },
        1.0, 2.0, tol);
    const auto outer1 = integrate_refined(
        [&](double r) { return sq(trial_eval(spec, r).first) * std::pow(r, n + m - 3.0); },
        1.0, 2.0, tol);
    const auto outer2 = integrate_refined(
        [&](double r) { return sq(trial_eval(spec, r).second) * std::pow(r, n + m - 1.0); },
        1.0, 2.0, tol);

    RadialIntegrals result;
    result.j0 = inner.j0_lead + outer0.value;
    result.j1 = inner.j1_lead + outer1.value;
    result.j2 = inner.j2_lead + outer2.value;
    result.err0 = outer0.error;
    result.err1 = outer1.error;
    result.err2 = outer2.error;
    return result;
}

QuadratureResult rayleigh_quotient(const TrialSpec& spec, double tol) {
    const double n = spec.params.dimension;
    const double m = spec.params.exponent;
    const double c = spec.params.dimension >= 2
                         ? sphere_eigenvalue(spec.params.dimension, spec.degree)
                         : 0.0;
    const double coef1 = 2.0 * c + (n - 1.0) * (1.0 - m);
    const double coef0 = c * c - c * (m - 2.0) * (n + m - 4.0);

    const RadialIntegrals ji = radial_integrals(spec, tol);

    QuadratureResult out;
    out.numerator = ji.j2 + coef1 * ji.j1 + coef0 * ji.j0;
    out.denominator = ji.j1;
    out.quotient = out.numerator / out.denominator;
    const double err_num = ji.err2 + std::abs(coef1) * ji.err1 + std::abs(coef0) * ji.err0;
    out.error = (err_num + std::abs(out.quotient) * ji.err1) / out.denominator;
    return out;
}

Extrapolation richardson_extrapolate(std::span<const double> eps,
                                     std::span<const double> values,
                                     std::span<const double> slack) {
    const std::size_t k = eps.size();
    if (k < 2 || values.size() != k)
        throw std::invalid_argument("extrapolation needs at least two (eps, value) pairs");
    for (std::size_t i = 0; i < k; ++i) {
        if (!(eps[i] > 0.0))
            throw std::invalid_argument("extrapolation eps values must be positive");
        if (i + 1 < k && !(eps[i + 1] < eps[i]))
            throw std::invalid_argument("extrapolation eps values must be strictly decreasing");
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        const double allowed = i < slack.size() ? slack[i] : 0.0;
        if (values[i + 1] > values[i] + allowed)
            throw ExtrapolationError(
                "non-monotone quotient sequence; quadrature tolerance too loose");
    }

    // Neville table for the polynomial model C + a1 eps + a2 eps^2 + ...,
    // evaluated at eps = 0. The first column reproduces pairwise two-point
    // Richardson; higher columns remove the higher orders, and the change
    // between the last two corners is the consistency estimate.
    std::vector<double> row(values.begin(), values.end());
    double prev_corner = row[1];  // two-point result of the coarsest pair
    for (std::size_t j = 1; j < k; ++j) {
        for (std::size_t i = k - 1; i >= j; --i) {
            row[i] = (eps[i - j] * row[i] - eps[i] * row[i - 1]) / (eps[i - j] - eps[i]);
            if (i == j) break;  // unsigned loop guard
        }
        if (j + 1 < k) prev_corner = row[k - 1];
    }
    return {row[k - 1], std::abs(row[k - 1] - prev_corner)};
}

double limit_extrapolate(const Parameters& p, int degree,
                         std::span<const double> eps_list, double quad_tol) {
    if (eps_list.size() < 2)
        throw std::invalid_argument("limit extrapolation needs at least two eps values");
    std::vector<double> values;
    std::vector<double> errors;
    values.reserve(eps_list.size());
    for (double eps : eps_list) {
        const auto q = rayleigh_quotient(make_trial_spec(p, degree, eps), quad_tol);
        values.push_back(q.quotient);
        errors.push_back(q.error);
    }
    std::vector<double> slack(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        slack[i] = 10.0 * (errors[i] + errors[i + 1]) +
                   1e-9 * std::max(1.0, std::abs(values[i]));
    return richardson_extrapolate(eps_list, values, slack).limit;
}

}  // namespace hr
