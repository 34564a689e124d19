#include "hr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hr/constants.hpp"

namespace hr {

namespace {

void check_grid(const GridSpec& grid) {
    if (!(grid.t_min < grid.t_max))
        throw std::invalid_argument("grid window is empty");
    if (grid.points < 50)
        throw std::invalid_argument(
            "grid too coarse: at least 50 points are needed for the second differences");
}

}  // namespace

BandedSymmetric assemble_radial_form(const GridSpec& grid, const Parameters& p,
                                     const FormCoefficients& c) {
    check_grid(grid);
    const int n = grid.points;
    const double dt = (grid.t_max - grid.t_min) / (n - 1);
    const double growth = p.dimension + p.exponent - 4.0;  // common grading exponent

    // Unknowns are nodes 2 .. n-3; the two outermost nodes per side carry the
    // essential conditions v = v' = 0 and are eliminated.
    const int reduced = n - 4;
    if (reduced < 3)
        throw std::invalid_argument("grid too coarse after boundary elimination");
    BandedSymmetric a(reduced, 2);

    const double inv_dt = 1.0 / dt;
    const double inv_dt2 = inv_dt * inv_dt;

    // Second-order centered differences in r via the chain rule on t = log r:
    //   v'  = e^{-t} dv/dt
    //   v'' = e^{-2t} (d2v/dt2 - dv/dt)
    // After multiplying by the weights r^{N+m-1,3,5} and the measure dr = r dt,
    // every contribution carries the single grading factor e^{growth * t}. The
    // symmetric row/column scaling by e^{-growth t / 2} (a congruence applied
    // to both pencil matrices) cancels it up to O(dt) node offsets, keeping
    // entries of uniform size for any exponent.
    const double s2_m = inv_dt2 + 0.5 * inv_dt;   // v_{i-1} coefficient of d2/dt2 - d/dt
    const double s2_0 = -2.0 * inv_dt2;
    const double s2_p = inv_dt2 - 0.5 * inv_dt;
    const double s1_p = 0.5 * inv_dt;

    auto scatter = [&](int node_a, int node_b, double value) {
        if (node_a < 2 || node_a > n - 3 || node_b < 2 || node_b > n - 3) return;
        a.add(node_a - 2, node_b - 2, value);
    };

    // After the symmetric scaling the entries lose all dependence on the node
    // position; only the stencil offsets survive in the grading factor
    // e^{growth (t_i - (t_a + t_b)/2)} = e^{-growth dt (da + db)/2}.
    for (int i = 1; i <= n - 2; ++i) {
        if (c.second != 0.0) {
            const double w = c.second * dt;
            const double coeff[3] = {s2_m, s2_0, s2_p};
            for (int da = -1; da <= 1; ++da)
                for (int db = -1; db <= 1; ++db) {
                    const double grade = std::exp(-0.5 * growth * dt * (da + db));
                    scatter(i + da, i + db, w * coeff[da + 1] * coeff[db + 1] * grade);
                }
        }
        if (c.first != 0.0) {
            const double w = c.first * dt;
            const double coeff[3] = {-s1_p, 0.0, s1_p};
            for (int da = -1; da <= 1; da += 2)
                for (int db = -1; db <= 1; db += 2) {
                    const double grade = std::exp(-0.5 * growth * dt * (da + db));
                    scatter(i + da, i + db, w * coeff[da + 1] * coeff[db + 1] * grade);
                }
        }
        if (c.zeroth != 0.0)
            scatter(i, i, c.zeroth * dt);
    }
    return a;
}

std::pair<BandedSymmetric, BandedSymmetric> assemble_forms(const ModeProblem& problem) {
    const Parameters& p = problem.params;
    if (problem.mode < 0)
        throw std::invalid_argument("mode must be nonnegative");
    if (p.dimension == 1 && problem.mode != 0)
        throw std::invalid_argument("N = 1 has no angular modes");

    const double n = p.dimension;
    const double m = p.exponent;
    const double c = p.dimension >= 2 ? sphere_eigenvalue(p.dimension, problem.mode) : 0.0;

    FormCoefficients numerator{1.0, 2.0 * c + (n - 1.0) * (1.0 - m),
                               c * c - c * (m - 2.0) * (n + m - 4.0)};
    FormCoefficients denominator{0.0, 1.0, 0.0};
    return {assemble_radial_form(problem.grid, p, numerator),
            assemble_radial_form(problem.grid, p, denominator)};
}

int default_mode_cap(const Parameters& p) {
    if (p.dimension == 1) return 0;
    if (classify_regime(p).branch == Branch::high_bad)
        return threshold_index(p) + 3;
    return 5;
}

SpectralResult oracle_constant(const Parameters& p, int k_max, const GridSpec& grid) {
    check_grid(grid);
    SpectralResult result;
    result.grid = grid;

    int top = k_max;
    if (p.dimension == 1) {
        top = 0;
    } else {
        const int floor_cap =
            classify_regime(p).branch == Branch::high_bad ? threshold_index(p) + 2 : 3;
        if (k_max < floor_cap)
            throw std::invalid_argument("mode cap too small to bracket the minimum");
    }

    double best = 0.0;
    int best_mode = 0;
    for (int k = 0; k <= top; ++k) {
        const auto [a, b] = assemble_forms(ModeProblem{p, k, grid});
        const double value = min_generalized_eigenvalue(a, b);
        result.per_mode.emplace_back(k, value);
        if (k == 0 || value < best) {
            best = value;
            best_mode = k;
        }
    }
    result.overall_min = best;
    result.argmin_mode = best_mode;
    return result;
}

std::vector<ConvergenceRow> convergence_study(const Parameters& p,
                                              const std::vector<GridSpec>& grids) {
    if (grids.size() < 2)
        throw std::invalid_argument("a convergence study needs at least two grids");
    const double target = sharp_constant(p).value;
    std::vector<ConvergenceRow> rows;
    rows.reserve(grids.size());
    for (const GridSpec& grid : grids) {
        const SpectralResult r = oracle_constant(p, default_mode_cap(p), grid);
        rows.push_back({grid, r.overall_min, r.overall_min - target});
    }
    return rows;
}

}  // namespace hr
