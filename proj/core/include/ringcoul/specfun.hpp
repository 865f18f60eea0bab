#pragma once

#include <stdexcept>

// Real-argument special functions: gamma, terminating hypergeometric series,
// and associated Legendre functions of integer and real order.
//
// Convention: all Legendre functions here are Condon-Shortley-phase-free,
// i.e. legendre_int(l, m, x) for m >= 0 equals (1-x^2)^{m/2} d^m/dx^m P_l(x)
// with a positive diagonal seed, and legendre_real_order reduces bitwise-
// approximately to legendre_int when the order and degree are integers.
// The (-1)^m phase belongs to the spherical-harmonic constructors (model).

namespace ringcoul::specfun {

// Gamma function via a 9-term Lanczos approximation (g = 7), with the
// reflection formula for x < 0.5. Relative error <= ~4e-14 on [0.1, 60].
// Throws std::domain_error at the poles (non-positive integers).
double gamma_fn(double x);

// n! exactly for n <= 20, via gamma_fn above that.
double factorial(int n);

// 2F1(a_neg, bpar; cpar; x) with a_neg = -n a non-positive integer, so the
// series terminates after n+1 terms. Compensated summation, no truncation
// error beyond rounding. Throws std::domain_error if a_neg > 0 or cpar is a
// non-positive integer reached by the series.
double hyp2f1_terminating(int a_neg, double bpar, double cpar, double x);

// 1F1(a_neg, bpar; z), same terminating contract.
double hyp1f1_terminating(int a_neg, double bpar, double z);

// Degree l' = ntheta + m', order m' >= 0, with ntheta = l' - m' a
// non-negative integer (the hypergeometric series terminates only then).
struct RealOrderLegendreParams {
    double lprime = 0.0;
    double mprime = 0.0;
    int ntheta = 0;

    static RealOrderLegendreParams make(double mprime, int ntheta);
    void validate() const;
};

// Unnormalized P_{l'}^{m'}(x) on [-1, 1]:
//
//   (1-x^2)^{m'/2} * Gamma(l'+m'+1) / (2^{m'} Gamma(m'+1) Gamma(l'-m'+1))
//                  * 2F1(-l'+m', l'+m'+1; m'+1; (1-x)/2)
//
// For integer degree/order this is the phase-free P_l^m, e.g.
// P_2^1(0.5) = +3*0.5*sqrt(0.75). At x = +-1: exactly 0 for m' > 0,
// the prefactor (= 1 at x=1) for m' = 0.
double legendre_real_order(const RealOrderLegendreParams& p, double x);

// Phase-free integer-order P_l^m via the stable diagonal-seed upward
// recurrence. Negative m maps through
//   P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double legendre_int(int l, int m, double x);

// Negative real order through the reflection
//   P_{l'}^{-m'}(x) = (-1)^m Gamma(l'-m'+1)/Gamma(l'+m'+1) P_{l'}^{m'}(x),
// where m is the integer magnetic number whose parity sets the sign.
double legendre_negative_order(const RealOrderLegendreParams& p, int m_int, double x);

} // namespace ringcoul::specfun
