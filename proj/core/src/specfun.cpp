#include "ringcoul/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ringcoul::specfun {

namespace {

// Kahan-compensated accumulator. The 2F1 series in the polar solutions
// alternates for large ntheta, so plain summation can lose digits.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double term) {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
};

double lanczos_positive(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        acc += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

constexpr double kFactorials[21] = {
    1.0, 1.0, 2.0, 6.0, 24.0, 120.0, 720.0, 5040.0, 40320.0, 362880.0,
    3628800.0, 39916800.0, 479001600.0, 6227020800.0, 87178291200.0,
    1307674368000.0, 20922789888000.0, 355687428096000.0,
    6402373705728000.0, 121645100408832000.0, 2432902008176640000.0,
};

} // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma pole at non-positive integer x = " + std::to_string(x));
    if (x < 0.5) {
        // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_positive(1.0 - x));
    }
    return lanczos_positive(x);
}

double factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial of negative integer");
    if (n <= 20)
        return kFactorials[n];
    return gamma_fn(static_cast<double>(n) + 1.0);
}

double hyp2f1_terminating(int a_neg, double bpar, double cpar, double x) {
    if (a_neg > 0)
        throw std::domain_error("hyp2f1_terminating: first parameter must be a non-positive integer");
    const int n = -a_neg;
    if (is_nonpositive_integer(cpar) && cpar > static_cast<double>(a_neg))
        throw std::domain_error("hyp2f1_terminating: c parameter hits a pole inside the series");
    KahanSum s;
    double term = 1.0;
    for (int k = 0; k < n; ++k) {
        s.add(term);
        term *= (static_cast<double>(-n + k) * (bpar + k)) / ((cpar + k) * (k + 1)) * x;
    }
    s.add(term);
    return s.value();
}

double hyp1f1_terminating(int a_neg, double bpar, double z) {
    if (a_neg > 0)
        throw std::domain_error("hyp1f1_terminating: first parameter must be a non-positive integer");
    const int n = -a_neg;
    if (is_nonpositive_integer(bpar) && bpar > static_cast<double>(a_neg))
        throw std::domain_error("hyp1f1_terminating: b parameter hits a pole inside the series");
    KahanSum s;
    double term = 1.0;
    for (int k = 0; k < n; ++k) {
        s.add(term);
        term *= static_cast<double>(-n + k) / ((bpar + k) * (k + 1)) * z;
    }
    s.add(term);
    return s.value();
}

RealOrderLegendreParams RealOrderLegendreParams::make(double mprime, int ntheta) {
    RealOrderLegendreParams p;
    p.mprime = mprime;
    p.ntheta = ntheta;
    p.lprime = mprime + static_cast<double>(ntheta);
    p.validate();
    return p;
}

void RealOrderLegendreParams::validate() const {
    if (mprime < 0.0)
        throw std::domain_error("legendre order m' must be >= 0");
    if (ntheta < 0)
        throw std::domain_error("legendre degree offset l' - m' must be a non-negative integer");
    if (std::abs(lprime - mprime - ntheta) > 1e-12 * (1.0 + std::abs(lprime)))
        throw std::domain_error("legendre params inconsistent: l' - m' != ntheta");
}

double legendre_real_order(const RealOrderLegendreParams& p, double x) {
    p.validate();
    if (std::abs(x) > 1.0)
        throw std::domain_error("legendre_real_order: |x| > 1");
    const double one_minus_x2 = (1.0 - x) * (1.0 + x);
    // (1-x^2)^{m'/2}: exactly 0 at the endpoints for m' > 0, 1 for m' = 0
    double envelope;
    if (p.mprime == 0.0)
        envelope = 1.0;
    else if (one_minus_x2 <= 0.0)
        return 0.0;
    else
        envelope = std::pow(one_minus_x2, 0.5 * p.mprime);
    const double prefactor = gamma_fn(p.lprime + p.mprime + 1.0) /
                             (std::pow(2.0, p.mprime) * gamma_fn(p.mprime + 1.0) * factorial(p.ntheta));
    const double f = hyp2f1_terminating(-p.ntheta, p.lprime + p.mprime + 1.0,
                                        p.mprime + 1.0, 0.5 * (1.0 - x));
    return envelope * prefactor * f;
}

double legendre_int(int l, int m, double x) {
    if (l < 0 || std::abs(m) > l)
        throw std::domain_error("legendre_int: require 0 <= |m| <= l");
    if (std::abs(x) > 1.0)
        throw std::domain_error("legendre_int: |x| > 1");
    if (m < 0) {
        const int ma = -m;
        const double scale = factorial(l - ma) / factorial(l + ma);
        const double sign = (ma % 2 != 0) ? -1.0 : 1.0;
        return sign * scale * legendre_int(l, ma, x);
    }
    // diagonal seed P_m^m = (2m-1)!! (1-x^2)^{m/2}, phase-free
    double pmm = 1.0;
    if (m > 0) {
        const double root = std::sqrt((1.0 - x) * (1.0 + x));
        double odd = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= odd * root;
            odd += 2.0;
        }
    }
    if (l == m)
        return pmm;
    double pm1 = x * (2.0 * m + 1.0) * pmm;
    if (l == m + 1)
        return pm1;
    double pl = 0.0;
    for (int ll = m + 2; ll <= l; ++ll) {
        pl = ((2.0 * ll - 1.0) * x * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
        pmm = pm1;
        pm1 = pl;
    }
    return pl;
}

double legendre_negative_order(const RealOrderLegendreParams& p, int m_int, double x) {
    const double ratio = gamma_fn(p.lprime - p.mprime + 1.0) / gamma_fn(p.lprime + p.mprime + 1.0);
    const double sign = (m_int % 2 != 0) ? -1.0 : 1.0;
    return sign * ratio * legendre_real_order(p, x);
}

} // namespace ringcoul::specfun
