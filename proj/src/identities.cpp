#include "hr/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hr/quadrature.hpp"

namespace hr {

namespace {

double sq(double x) { return x * x; }

double relative_residual(double lhs, double rhs_a, double rhs_b) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs_a), std::abs(rhs_b)});
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs_a - rhs_b) / scale;
}

}  // namespace

RadialProfile bump_profile(double lo, double hi, std::span<const double> poly) {
    if (!(0.0 < lo && lo < hi))
        throw std::invalid_argument("bump support must satisfy 0 < lo < hi");
    if (poly.empty())
        throw std::invalid_argument("bump needs at least one polynomial coefficient");

    // Expand s^3 (1-s)^3 q(s) into monomials once; derivatives by power rule.
    static const double base[7] = {0, 0, 0, 1, -3, 3, -1};
    std::vector<double> coeff(7 + poly.size() - 1, 0.0);
    for (std::size_t j = 0; j < poly.size(); ++j)
        for (int i = 3; i <= 6; ++i)
            coeff[i + j] += base[i] * poly[j];

    const double inv_width = 1.0 / (hi - lo);
    RadialProfile profile;
    profile.lo = lo;
    profile.hi = hi;
    profile.eval = [lo, hi, inv_width, coeff = std::move(coeff)](double r) -> Derivatives2 {
        if (r <= lo || r >= hi) return {0.0, 0.0, 0.0};
        const double s = (r - lo) * inv_width;
        double v = 0.0, d1 = 0.0, d2 = 0.0;
        for (std::size_t k = coeff.size(); k-- > 0;) {
            // Horner pass carrying the first two derivatives along.
            d2 = d2 * s + 2.0 * d1;
            d1 = d1 * s + v;
            v = v * s + coeff[k];
        }
        return {v, d1 * inv_width, d2 * inv_width * inv_width};
    };
    return profile;
}

IbpResiduals ibp_identity_check(const Parameters& p, const RadialProfile& u, double tol) {
    if (!(u.lo > 0.0) || !(u.hi > u.lo))
        throw std::invalid_argument("profile must be supported in (0, inf)");
    const double n = p.dimension;
    const double m = p.exponent;

    auto weighted = [&](auto&& integrand) {
        return integrate_refined(integrand, u.lo, u.hi, tol).value;
    };

    const double radial_lap = weighted([&](double r) {
        const Derivatives2 d = u.eval(r);
        return sq(d.second + (n - 1.0) / r * d.first) * std::pow(r, n + m - 1.0);
    });
    const double second_term = weighted([&](double r) {
        return sq(u.eval(r).second) * std::pow(r, n + m - 1.0);
    });
    const double first_term = weighted([&](double r) {
        return sq(u.eval(r).first) * std::pow(r, n + m - 3.0);
    });
    const double zero_term = weighted([&](double r) {
        return sq(u.eval(r).value) * std::pow(r, n + m - 5.0);
    });
    const double mixed = weighted([&](double r) {
        const Derivatives2 d = u.eval(r);
        return (d.second + (n - 1.0) / r * d.first) * d.value * std::pow(r, n + m - 3.0);
    });

    IbpResiduals res;
    res.laplacian_identity =
        relative_residual(radial_lap, second_term, (n - 1.0) * (1.0 - m) * first_term);
    res.mixed_identity = relative_residual(
        mixed, -first_term, 0.5 * (m - 2.0) * (n + m - 4.0) * zero_term);
    return res;
}

HardyRatios onedim_hardy_check(const Parameters& p, const RadialProfile& u, double tol) {
    if (!(u.lo >= 0.0) || !(u.hi > u.lo))
        throw std::invalid_argument("profile support is malformed");
    const double n = p.dimension;
    const double m = p.exponent;
    const double lo = std::max(u.lo, 0.0);

    const double second_term = integrate_refined(
        [&](double r) { return sq(u.eval(r).second) * std::pow(r, n + m - 1.0); },
        lo, u.hi, tol).value;
    const double first_term = integrate_refined(
        [&](double r) { return sq(u.eval(r).first) * std::pow(r, n + m - 3.0); },
        lo, u.hi, tol).value;
    const double zero_term = integrate_refined(
        [&](double r) { return sq(u.eval(r).value) * std::pow(r, n + m - 5.0); },
        lo, u.hi, tol).value;

    if (first_term <= 0.0 || zero_term <= 0.0)
        throw std::invalid_argument("degenerate profile: a denominator vanishes");
    return {second_term / first_term, first_term / zero_term};
}

HardyRatios onedim_hardy_check(const TrialSpec& spec, double tol) {
    const RadialIntegrals ji = radial_integrals(spec, tol);
    return {ji.j2 / ji.j1, ji.j1 / ji.j0};
}

}  // namespace hr
