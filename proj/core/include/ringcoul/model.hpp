#pragma once

#include <complex>
#include <utility>

#include "ringcoul/specfun.hpp"

// Bound states of the Coulomb potential with a b/(r^2 sin^2 theta) ring
// term, in atomic units (hbar = M = e = 1, lengths in a0, Z dimensionless).
//
// The ring term only shifts the angular order: m' = sqrt(m^2 + b),
// l' = (l - |m|) + m', n' = (n - l - 1) + l' + 1, and the radial problem
// stays hydrogenic in the real-valued labels. Everything here is a pure
// function of its arguments.

namespace ringcoul::model {

struct QuantumState {
    int n = 1;       // principal label, >= 1
    int l = 0;       // orbital label, 0 <= l <= n-1
    int m = 0;       // magnetic number, |m| <= l
    double b = 0.0;  // ring strength; b > -m^2, and b >= 0 when m = 0
    double Z = 1.0;  // nuclear charge, > 0

    void validate() const;  // throws std::domain_error naming the violated invariant
};

struct QuasiNumbers {
    double mprime = 0.0;  // sqrt(m^2 + b)
    double lprime = 0.0;  // ntheta + m'
    double nprime = 1.0;  // nr + l' + 1
    double lambda = 0.0;  // l'(l'+1)
    int ntheta = 0;       // l - |m|
    int nr = 0;           // n - l - 1
};

struct EnergyLevel {
    double value = 0.0;  // -Z^2 / (2 n'^2), Hartree-like units
};

QuasiNumbers derive_quasi(const QuantumState& qs);

// Normalized polar factor H_{l'm'}(x) = N_{l'm'} P_{l'}^{m'}(x) with
// N = sqrt[(2l'+1)(l'-m')! / (2 Gamma(l'+m'+1))]; int_{-1}^{1} H^2 dx = 1.
double angular_H(const QuasiNumbers& q, double costheta);

// Deformed spherical harmonic
//   Y_{l'm'} = (-1)^m sqrt[(2l'+1) Gamma(l'-m'+1) / (4 pi Gamma(l'+m'+1))]
//              * P_{l'}^{m'}(cos theta) e^{i m phi},
// unit-normalized over the sphere. Negative m evaluates through the
// conjugation property Y_{l'(-m')} = (-1)^m conj(Y_{l'm'}).
std::complex<double> deformed_Ylm(const QuantumState& qs, double theta, double phi);

// (Y for +|m|, Y for -|m|) of the same (l, b) family.
std::pair<std::complex<double>, std::complex<double>>
conjugation_pair(const QuantumState& qs, double theta, double phi);

// Radial factor u_{n'l'}(r), normalized so int_0^inf u^2 dr = 1:
//   [1/Gamma(2l'+2)] sqrt[Z Gamma(n'+l'+1) / (nr! n'^2)]
//   * (2Zr/n')^{l'+1} e^{-Zr/n'} 1F1(-nr, 2l'+2, 2Zr/n')
double radial_u(const QuantumState& qs, double r);

EnergyLevel energy(const QuantumState& qs);

// Position-space density rho(x,y,z) = (1/2pi) (u^2/r^2) H^2(z/r).
// Total function: at the origin, rho = 0 for l' > 0 and the analytic limit
// Z^3/(pi n'^3) for the l' = 0 family (b = 0, l = m = 0).
double density(const QuantumState& qs, double x, double y, double z);

// Per-state evaluator with the prefactors hoisted out; density() and the
// grid sampler share this single code path.
class DensityEvaluator {
public:
    explicit DensityEvaluator(const QuantumState& qs);

    double operator()(double x, double y, double z) const;
    double radial(double r) const;          // u(r)
    double angular(double costheta) const;  // H(x)
    const QuasiNumbers& quasi() const { return q_; }
    const QuantumState& state() const { return state_; }

private:
    QuantumState state_;
    QuasiNumbers q_;
    double beta_ = 0.0;         // 2Z/n'
    double u_prefactor_ = 0.0;
    double h_prefactor_ = 0.0;  // N_{l'm'} times the P_{l'}^{m'} series prefactor
    double origin_rho_ = 0.0;
};

} // namespace ringcoul::model
