#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hr/constants.hpp"
#include "hr/identities.hpp"
#include "hr/trial.hpp"

using namespace hr;

namespace {

double sq(double x) { return x * x; }

RadialProfile random_bump(std::mt19937& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 2.0);
    std::uniform_real_distribution<double> lo_dist(0.3, 1.5);
    std::uniform_real_distribution<double> width(0.5, 3.5);
    const double lo = lo_dist(rng);
    const double poly[4] = {coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
    return bump_profile(lo, lo + width(rng), poly);
}

}  // namespace

TEST_CASE("bump profiles are C^2 with correct derivatives") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const RadialProfile u = random_bump(rng);
        // vanishing value and derivatives at the support edges
        for (double r : {u.lo, u.hi}) {
            const Derivatives2 d = u.eval(r + (r == u.lo ? 1e-9 : -1e-9));
            CHECK(std::abs(d.value) <= 1e-20);
            CHECK(std::abs(d.first) <= 1e-10);
            CHECK(std::abs(d.second) <= 1e-4);
        }
        // finite-difference agreement inside the support
        for (double frac : {0.2, 0.5, 0.8}) {
            const double r = u.lo + frac * (u.hi - u.lo);
            const double h = 1e-6 * (u.hi - u.lo);
            const double d1 = (u.eval(r + h).value - u.eval(r - h).value) / (2 * h);
            const double d2 = (u.eval(r + h).first - u.eval(r - h).first) / (2 * h);
            CHECK(u.eval(r).first == doctest::Approx(d1).epsilon(1e-6));
            CHECK(u.eval(r).second == doctest::Approx(d2).epsilon(1e-6));
        }
    }
}

TEST_CASE("integration-by-parts identities") {
    {
        const double poly[1] = {1.0};
        const RadialProfile u = bump_profile(1.0, 3.0, poly);
        const IbpResiduals res = ibp_identity_check(validate_parameters(5, 0.0), u);
        CHECK(res.laplacian_identity <= 1e-10);
        CHECK(res.mixed_identity <= 1e-10);
    }
    {
        // zero profile: residuals are zero by convention
        RadialProfile zero;
        zero.lo = 1.0;
        zero.hi = 2.0;
        zero.eval = [](double) { return Derivatives2{0.0, 0.0, 0.0}; };
        const IbpResiduals res = ibp_identity_check(validate_parameters(3, 1.0), zero);
        CHECK(res.laplacian_identity == 0.0);
        CHECK(res.mixed_identity == 0.0);
    }

    std::mt19937 rng(5);
    const Parameters grid[] = {
        validate_parameters(5, 0.0),  validate_parameters(3, 0.0),
        validate_parameters(5, -2.5), validate_parameters(5, 8.0),
        validate_parameters(2, 4.0),  validate_parameters(2, 0.3),
        validate_parameters(3, -0.7), validate_parameters(1, 2.0),
        validate_parameters(7, 2.5),  validate_parameters(4, -1.9),
    };
    for (int trial = 0; trial < 20; ++trial) {
        const RadialProfile u = random_bump(rng);
        const Parameters& p = grid[trial % std::size(grid)];
        const IbpResiduals res = ibp_identity_check(p, u);
        CHECK(res.laplacian_identity <= 1e-8);
        CHECK(res.mixed_identity <= 1e-8);
    }
}

TEST_CASE("1-d weighted Hardy inequalities on random bumps") {
    std::mt19937 rng(9);
    const Parameters p50 = validate_parameters(5, 0.0);
    for (int trial = 0; trial < 25; ++trial) {
        const RadialProfile u = random_bump(rng);
        const HardyRatios ratios = onedim_hardy_check(p50, u);
        CHECK(ratios.ratio1 >= 2.25 * (1.0 - 1e-12));
        CHECK(ratios.ratio2 >= 0.25 * (1.0 - 1e-12));
    }
    // the constants scale with N + m
    for (const auto& [n, m] : std::vector<std::pair<int, double>>{
             {3, 0.0}, {2, 4.0}, {5, 8.0}, {4, -1.5}}) {
        const Parameters p = validate_parameters(n, m);
        const double bound1 = sq((n + m - 2.0) / 2.0);
        const double bound2 = sq((n + m - 4.0) / 2.0);
        for (int trial = 0; trial < 5; ++trial) {
            const RadialProfile u = random_bump(rng);
            const HardyRatios ratios = onedim_hardy_check(p, u);
            CHECK(ratios.ratio1 >= bound1 * (1.0 - 1e-12) - 1e-12);
            CHECK(ratios.ratio2 >= bound2 * (1.0 - 1e-12) - 1e-12);
        }
    }
}

TEST_CASE("trial family approaches 1-d Hardy sharpness") {
    // support reaches the origin; the singular parts are exact power integrals
    const TrialSpec spec = make_trial_spec(validate_parameters(5, 0.0), 0, 0.01);
    const HardyRatios ratios = onedim_hardy_check(spec);
    CHECK(ratios.ratio2 >= 0.25 * (1.0 - 1e-12));
    CHECK(std::abs(ratios.ratio2 - 0.25) < 0.05);
}

TEST_CASE("degenerate profiles are rejected") {
    RadialProfile zero;
    zero.lo = 1.0;
    zero.hi = 2.0;
    zero.eval = [](double) { return Derivatives2{0.0, 0.0, 0.0}; };
    CHECK_THROWS_AS(onedim_hardy_check(validate_parameters(5, 0.0), zero),
                    std::invalid_argument);
}
