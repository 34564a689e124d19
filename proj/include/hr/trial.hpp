#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "hr/types.hpp"

namespace hr {

struct ExtrapolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cutoff profile: identically 1 on [0,1], identically 0 on [2,inf), quintic
/// smoothstep transition on [1,2]. Twice continuously differentiable, which is
/// all the integrals ever see.
Derivatives2 cutoff_eval(double r);

/// Trial family r^{-(N+m-4)/2 + eps} * cutoff(r) * (sphere harmonic of the
/// given degree). Both sides of the inequality are finite exactly when
/// eps > 0.
struct TrialSpec {
    Parameters params;
    int degree = 0;   // must be 0 when N == 1
    double eps = 0;   // > 0
};

TrialSpec make_trial_spec(const Parameters& p, int degree, double eps);

/// Radial factor U(r) = r^{beta+eps} g(r) and its first two derivatives.
Derivatives2 trial_eval(const TrialSpec& spec, double r);

/// The three weighted radial integrals of the trial profile:
///   j0 = int U^2 r^{N+m-5},  j1 = int U'^2 r^{N+m-3},  j2 = int U''^2 r^{N+m-1}.
/// On (0,1) the cutoff is 1 and each integral is a pure power with an exact
/// antiderivative; only [1,2] is computed numerically.
struct RadialIntegrals {
    double j0 = 0, j1 = 0, j2 = 0;
    double err0 = 0, err1 = 0, err2 = 0;
};

RadialIntegrals radial_integrals(const TrialSpec& spec, double tol);

/// The 1/(2 eps)-scaled leading parts (equal to the exact (0,1) pieces).
struct AsymptoticLeads {
    double j0_lead = 0, j1_lead = 0, j2_lead = 0;
};

AsymptoticLeads asymptotic_leading(const TrialSpec& spec);

struct QuadratureResult {
    double numerator = 0;
    double denominator = 0;
    double quotient = 0;
    double error = 0;  // propagated quadrature error estimate on the quotient
};

/// Per-degree Rayleigh quotient of the trial function:
///   [ j2 + (2 c_l + (N-1)(1-m)) j1 + (c_l^2 - c_l (m-2)(N+m-4)) j0 ] / j1.
/// For N = 1 the coefficients vanish and this is the one-dimensional quotient
/// int (u'')^2 r^m / int (u')^2 r^{m-2} on the half-line.
QuadratureResult rayleigh_quotient(const TrialSpec& spec, double tol);

/// Polynomial-in-eps extrapolation to eps = 0 (Richardson/Neville table).
/// `values[i]` is the quotient at `eps[i]`, eps strictly decreasing.
/// `slack[i]` bounds the admissible increase from values[i] to values[i+1];
/// a larger increase signals a non-monotone sequence (quadrature too loose).
struct Extrapolation {
    double limit = 0;
    double consistency = 0;  // |last two table corners|
};

Extrapolation richardson_extrapolate(std::span<const double> eps,
                                     std::span<const double> values,
                                     std::span<const double> slack = {});

/// Rayleigh quotients along a decreasing eps list, extrapolated to eps = 0.
/// Converges to branch_constant(p, degree).
double limit_extrapolate(const Parameters& p, int degree,
                         std::span<const double> eps_list, double quad_tol = 1e-12);

}  // namespace hr
