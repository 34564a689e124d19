#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hr/fulldim.hpp"
#include "hr/identities.hpp"
#include "hr/quadrature.hpp"
#include "hr/zonal.hpp"

using namespace hr;

namespace {

// Angular quadrature of zonal_a * zonal_b over the sphere.
double angular_product(int dim, int la, int lb) {
    if (dim == 2) {
        const int points = 256;
        double total = 0.0;
        for (int j = 0; j < points; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / points;
            total += zonal_eval(2, la, theta) * zonal_eval(2, lb, theta);
        }
        return total * 2.0 * std::numbers::pi / points;
    }
    const QuadratureRule& rule = gauss_legendre(32);
    double total = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double theta = std::acos(rule.nodes[j]);
        total += rule.weights[j] * zonal_eval(3, la, theta) * zonal_eval(3, lb, theta);
    }
    return total * 2.0 * std::numbers::pi;
}

}  // namespace

TEST_CASE("zonal harmonics: fixed values") {
    CHECK(zonal_eval(2, 0, 0.7) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)));
    CHECK(zonal_eval(3, 1, 0.0) == doctest::Approx(std::sqrt(3.0 / (4.0 * std::numbers::pi))));
    CHECK(zonal_eval(2, 3, 0.0) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK_THROWS_AS(zonal_eval(4, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(zonal_eval(2, -1, 0.0), std::invalid_argument);

    CHECK(legendre_p(0, 0.3) == 1.0);
    CHECK(legendre_p(1, 0.3) == 0.3);
    CHECK(legendre_p(2, 0.5) == doctest::Approx(0.5 * (3 * 0.25 - 1)));
    CHECK(legendre_p(5, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("zonal harmonics: orthonormality on the sphere") {
    for (int dim : {2, 3})
        for (int la = 0; la <= 6; ++la)
            for (int lb = 0; lb <= 6; ++lb) {
                const double want = la == lb ? 1.0 : 0.0;
                CHECK(std::abs(angular_product(dim, la, lb) - want) <= 1e-10);
            }
}

TEST_CASE("zonal harmonics: discrete sphere Laplacian eigenrelation") {
    const double h = 1e-4;
    for (int dim : {2, 3})
        for (int l = 0; l <= 6; ++l) {
            const double c = l * (l + dim - 2.0);
            double worst_num = 0.0;
            double worst_den = 0.0;
            for (int j = 1; j < 40; ++j) {
                const double theta = 0.25 + (std::numbers::pi - 0.5) * j / 40.0;
                const double f0 = zonal_eval(dim, l, theta);
                const double fp = zonal_eval(dim, l, theta + h);
                const double fm = zonal_eval(dim, l, theta - h);
                const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
                const double d1 = (fp - fm) / (2.0 * h);
                // Laplace-Beltrami of a zonal function
                const double lap = dim == 2 ? d2 : d2 + std::cos(theta) / std::sin(theta) * d1;
                worst_num = std::max(worst_num, std::abs(lap + c * f0));
                worst_den = std::max(worst_den, std::abs(c * f0));
            }
            if (l == 0)
                CHECK(worst_num <= 1e-6);
            else
                CHECK(worst_num / worst_den <= 1e-6);
        }
}

TEST_CASE("full-dimensional integrals match the per-mode reduction") {
    {
        const double poly[1] = {1.0};
        const RadialProfile u = bump_profile(1.0, 3.0, poly);
        const FulldimComparison cmp = fulldim_compare(3, 0.0, 0, u);
        CHECK(cmp.lhs_gap <= 1e-8);
        CHECK(cmp.rhs_gap <= 1e-8);
    }
    {
        const double poly[2] = {1.0, 0.5};
        const RadialProfile u = bump_profile(0.5, 4.0, poly);
        const FulldimComparison cmp = fulldim_compare(2, 1.0, 2, u);
        CHECK(cmp.lhs_gap <= 1e-8);
        CHECK(cmp.rhs_gap <= 1e-8);
    }
    {
        // zero profile: all four integrals vanish
        RadialProfile zero;
        zero.lo = 1.0;
        zero.hi = 2.0;
        zero.eval = [](double) { return Derivatives2{0.0, 0.0, 0.0}; };
        const FulldimComparison cmp = fulldim_compare(3, 1.0, 1, zero);
        CHECK(cmp.lhs_full == 0.0);
        CHECK(cmp.lhs_decomposed == 0.0);
        CHECK(cmp.rhs_full == 0.0);
        CHECK(cmp.rhs_decomposed == 0.0);
        CHECK(cmp.lhs_gap == 0.0);
    }

    // degrees up to 4, three exponents per regime, both dimensions
    const std::vector<std::pair<int, std::vector<double>>> cases = {
        {2, {0.3, 1.5, 4.5}},
        {3, {-0.7, 1.0, 5.0}},
    };
    const double poly[3] = {1.0, -0.7, 0.4};
    for (const auto& [dim, exps] : cases)
        for (double m : exps)
            for (int l = 0; l <= 4; ++l) {
                CAPTURE(dim);
                CAPTURE(m);
                CAPTURE(l);
                const RadialProfile u = bump_profile(0.8, 2.9, poly);
                const FulldimComparison cmp = fulldim_compare(dim, m, l, u);
                CHECK(cmp.lhs_gap <= 1e-6);
                CHECK(cmp.rhs_gap <= 1e-6);
            }

    CHECK_THROWS_AS(fulldim_compare(4, 0.0, 0, bump_profile(1.0, 2.0, std::vector<double>{1.0})),
                    std::invalid_argument);
}
