#include "hr/banded.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hr {

BandedSymmetric::BandedSymmetric(int n, int half_bandwidth)
    : n_(n), hb_(half_bandwidth), band_(static_cast<std::size_t>(half_bandwidth + 1) * n, 0.0) {
    if (n < 1 || half_bandwidth < 0)
        throw std::invalid_argument("banded matrix shape is malformed");
}

double BandedSymmetric::get(int i, int j) const {
    if (j < i) std::swap(i, j);
    const int d = j - i;
    if (d > hb_) return 0.0;
    return band(i, d);
}

void BandedSymmetric::add(int i, int j, double v) {
    if (j < i) std::swap(i, j);
    const int d = j - i;
    if (d > hb_)
        throw std::out_of_range("entry outside the band");
    band(i, d) += v;
}

void BandedSymmetric::set(int i, int j, double v) {
    if (j < i) std::swap(i, j);
    band(i, j - i) = v;
}

BandedSymmetric BandedSymmetric::shifted(const BandedSymmetric& other, double sigma) const {
    if (other.n_ != n_ || other.hb_ != hb_)
        throw std::invalid_argument("shifted: shape mismatch");
    BandedSymmetric out = *this;
    for (std::size_t k = 0; k < band_.size(); ++k)
        out.band_[k] -= sigma * other.band_[k];
    return out;
}

double BandedSymmetric::quadratic_form(const std::vector<double>& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("quadratic_form: size mismatch");
    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
        total += band(i, 0) * v[i] * v[i];
        for (int d = 1; d <= hb_ && i + d < n_; ++d)
            total += 2.0 * band(i, d) * v[i] * v[i + d];
    }
    return total;
}

LdltInertia ldlt_inertia(BandedSymmetric a) {
    const int n = a.size();
    const int hb = a.half_bandwidth();
    LdltInertia result;
    // Column-by-column LDL^T inside the band; a(j,0) becomes the pivot d_j and
    // a(j,d) the scaled factor L_{j+d,j}.
    for (int j = 0; j < n; ++j) {
        double d = a.band(j, 0);
        if (!std::isfinite(d) || d == 0.0) {
            result.breakdown = true;
            return result;
        }
        if (d < 0.0) ++result.negatives;
        const int reach = std::min(hb, n - 1 - j);
        for (int i = 1; i <= reach; ++i) {
            const double lij = a.band(j, i) / d;
            // Update the trailing submatrix rows j+i .. j+reach.
            for (int k = i; k <= reach; ++k)
                a.band(j + i, k - i) -= lij * a.band(j, k);
            a.band(j, i) = lij;
        }
    }
    return result;
}

namespace {

int inertia_at(const BandedSymmetric& a, const BandedSymmetric& b, double sigma,
               double perturb_scale) {
    double shift = sigma;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const LdltInertia inertia = ldlt_inertia(a.shifted(b, shift));
        if (!inertia.breakdown) return inertia.negatives;
        // A zero pivot means sigma coincides with an eigenvalue of a leading
        // pencil section; nudge and refactor.
        shift = sigma + perturb_scale * (attempt + 1) * ((attempt % 2) ? 1.0 : -1.0);
    }
    throw SolverError("banded factorization kept breaking down near the shift");
}

}  // namespace

double min_generalized_eigenvalue(const BandedSymmetric& a, const BandedSymmetric& b,
                                  double rel_tol) {
    if (a.size() != b.size() || a.half_bandwidth() != b.half_bandwidth())
        throw std::invalid_argument("pencil shape mismatch");
    const int n = a.size();

    const LdltInertia bfact = ldlt_inertia(b);
    if (bfact.breakdown || bfact.negatives > 0)
        throw SolverError("metric form is not positive definite on this grid");

    // Rayleigh quotient of a smooth positive seed gives an upper bound for
    // the smallest eigenvalue.
    std::vector<double> seed(n);
    for (int i = 0; i < n; ++i) {
        const double x = (i + 1.0) / (n + 1.0);
        const double s = std::sin(3.14159265358979323846 * x);
        seed[i] = s * s;
    }
    const double bnorm = b.quadratic_form(seed);
    if (!(bnorm > 0.0))
        throw SolverError("seed vector has vanishing metric norm");
    const double rho = a.quadratic_form(seed) / bnorm;

    const double scale = std::max(1.0, std::abs(rho));
    double hi = rho + 1e-10 * scale;
    if (inertia_at(a, b, hi, 1e-12 * scale) < 1)
        hi = rho + 1e-6 * scale;  // FD rounding put the bound marginally low

    double lo = std::min(0.0, rho) - 0.5 * scale;
    for (int attempt = 0; attempt < 80 && inertia_at(a, b, lo, 1e-12 * scale) > 0; ++attempt)
        lo -= scale * std::ldexp(1.0, std::min(attempt, 40));

    for (int iter = 0; iter < 200; ++iter) {
        const double width = hi - lo;
        if (width <= rel_tol * std::max({std::abs(lo), std::abs(hi), 1e-30}) + 1e-300)
            break;
        const double mid = 0.5 * (lo + hi);
        if (inertia_at(a, b, mid, 1e-12 * scale + 1e-9 * width) == 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace hr
