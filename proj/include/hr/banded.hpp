#pragma once

#include <stdexcept>
#include <vector>

namespace hr {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Symmetric banded matrix, upper bands stored row-major:
/// entry(i, i+d) for 0 <= d <= half_bandwidth.
class BandedSymmetric {
public:
    BandedSymmetric(int n, int half_bandwidth);

    int size() const { return n_; }
    int half_bandwidth() const { return hb_; }

    double get(int i, int j) const;       // |i-j| <= hb
    void add(int i, int j, double v);     // symmetric accumulate
    void set(int i, int j, double v);

    /// this - sigma * other (same shape).
    BandedSymmetric shifted(const BandedSymmetric& other, double sigma) const;

    /// v^T A v
    double quadratic_form(const std::vector<double>& v) const;

    /// Raw band access: entry (i, i+d) for 0 <= d <= half_bandwidth.
    double& band(int i, int d) { return band_[static_cast<std::size_t>(d) * n_ + i]; }
    double band(int i, int d) const { return band_[static_cast<std::size_t>(d) * n_ + i]; }

private:
    int n_;
    int hb_;
    std::vector<double> band_;  // (hb+1) * n
};

struct LdltInertia {
    int negatives = 0;
    bool breakdown = false;  // zero or non-finite pivot
};

/// In-place LDL^T of a copy (no pivoting; matrices here are smoothly graded),
/// returning the count of negative pivots. By Sylvester inertia this is the
/// number of eigenvalues of A below zero.
LdltInertia ldlt_inertia(BandedSymmetric a);

/// Smallest lambda with A x = lambda B x for symmetric banded A and positive
/// definite B, by bisection on the inertia of A - sigma B. Relative tolerance
/// on the bracket width. Throws SolverError if B is not positive definite or
/// factorizations keep breaking down.
double min_generalized_eigenvalue(const BandedSymmetric& a, const BandedSymmetric& b,
                                  double rel_tol = 1e-8);

}  // namespace hr
