#include "ringcoul/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ringcoul::model {

using specfun::factorial;
using specfun::gamma_fn;

void QuantumState::validate() const {
    if (n < 1)
        throw std::domain_error("n >= 1 violated (got n=" + std::to_string(n) + ")");
    if (l < 0 || l > n - 1)
        throw std::domain_error("l <= n-1 violated (got l=" + std::to_string(l) +
                                ", n=" + std::to_string(n) + ")");
    if (std::abs(m) > l)
        throw std::domain_error("|m| <= l violated (got m=" + std::to_string(m) +
                                ", l=" + std::to_string(l) + ")");
    if (m == 0) {
        if (b < 0.0)
            throw std::domain_error("b must exceed -m^2 (b >= 0 required when m = 0, got b=" +
                                    std::to_string(b) + ")");
    } else if (b <= -static_cast<double>(m) * m) {
        throw std::domain_error("b must exceed -m^2 (got b=" + std::to_string(b) +
                                ", m=" + std::to_string(m) + ")");
    }
    if (!(Z > 0.0))
        throw std::domain_error("Z > 0 violated (got Z=" + std::to_string(Z) + ")");
}

QuasiNumbers derive_quasi(const QuantumState& qs) {
    qs.validate();
    QuasiNumbers q;
    q.mprime = std::sqrt(static_cast<double>(qs.m) * qs.m + qs.b);
    q.ntheta = qs.l - std::abs(qs.m);
    q.nr = qs.n - qs.l - 1;
    q.lprime = q.ntheta + q.mprime;
    q.nprime = q.nr + q.lprime + 1.0;
    q.lambda = q.lprime * (q.lprime + 1.0);
    return q;
}

double angular_H(const QuasiNumbers& q, double costheta) {
    const double norm = std::sqrt((2.0 * q.lprime + 1.0) * factorial(q.ntheta) /
                                  (2.0 * gamma_fn(q.lprime + q.mprime + 1.0)));
    const auto p = specfun::RealOrderLegendreParams::make(q.mprime, q.ntheta);
    return norm * specfun::legendre_real_order(p, costheta);
}

namespace {

std::complex<double> deformed_Ylm_nonneg(const QuasiNumbers& q, int m, double theta, double phi) {
    const double norm = std::sqrt((2.0 * q.lprime + 1.0) * gamma_fn(q.lprime - q.mprime + 1.0) /
                                  (4.0 * std::numbers::pi * gamma_fn(q.lprime + q.mprime + 1.0)));
    const auto p = specfun::RealOrderLegendreParams::make(q.mprime, q.ntheta);
    const double polar = specfun::legendre_real_order(p, std::cos(theta));
    const double phase = (m % 2 != 0) ? -1.0 : 1.0;
    return phase * norm * polar * std::polar(1.0, m * phi);
}

} // namespace

std::complex<double> deformed_Ylm(const QuantumState& qs, double theta, double phi) {
    const QuasiNumbers q = derive_quasi(qs);
    if (qs.m >= 0)
        return deformed_Ylm_nonneg(q, qs.m, theta, phi);
    const int ma = -qs.m;
    const double phase = (ma % 2 != 0) ? -1.0 : 1.0;
    return phase * std::conj(deformed_Ylm_nonneg(q, ma, theta, phi));
}

std::pair<std::complex<double>, std::complex<double>>
conjugation_pair(const QuantumState& qs, double theta, double phi) {
    QuantumState plus = qs;
    plus.m = std::abs(qs.m);
    QuantumState minus = qs;
    minus.m = -std::abs(qs.m);
    return {deformed_Ylm(plus, theta, phi), deformed_Ylm(minus, theta, phi)};
}

double radial_u(const QuantumState& qs, double r) {
    if (r < 0.0)
        throw std::domain_error("radial_u: r >= 0 required");
    return DensityEvaluator(qs).radial(r);
}

EnergyLevel energy(const QuantumState& qs) {
    const QuasiNumbers q = derive_quasi(qs);
    return {-qs.Z * qs.Z / (2.0 * q.nprime * q.nprime)};
}

double density(const QuantumState& qs, double x, double y, double z) {
    return DensityEvaluator(qs)(x, y, z);
}

DensityEvaluator::DensityEvaluator(const QuantumState& qs)
    : state_(qs), q_(derive_quasi(qs)) {
    beta_ = 2.0 * qs.Z / q_.nprime;
    u_prefactor_ = std::sqrt(qs.Z * gamma_fn(q_.nprime + q_.lprime + 1.0) /
                             (factorial(q_.nr) * q_.nprime * q_.nprime)) /
                   gamma_fn(2.0 * q_.lprime + 2.0);
    h_prefactor_ = std::sqrt((2.0 * q_.lprime + 1.0) * factorial(q_.ntheta) /
                             (2.0 * gamma_fn(q_.lprime + q_.mprime + 1.0))) *
                   gamma_fn(q_.lprime + q_.mprime + 1.0) /
                   (std::pow(2.0, q_.mprime) * gamma_fn(q_.mprime + 1.0) * factorial(q_.ntheta));
    // l' = 0 only for the b = 0, l = m = 0 family, where
    // u^2/r^2 -> 4Z^3/n'^3 and H^2 = 1/2.
    origin_rho_ = (q_.lprime == 0.0)
                      ? qs.Z * qs.Z * qs.Z / (std::numbers::pi * q_.nprime * q_.nprime * q_.nprime)
                      : 0.0;
}

double DensityEvaluator::radial(double r) const {
    const double zr = beta_ * r;
    return u_prefactor_ * std::pow(zr, q_.lprime + 1.0) * std::exp(-0.5 * zr) *
           specfun::hyp1f1_terminating(-q_.nr, 2.0 * q_.lprime + 2.0, zr);
}

double DensityEvaluator::angular(double costheta) const {
    const double x = costheta < -1.0 ? -1.0 : (costheta > 1.0 ? 1.0 : costheta);
    const double one_minus_x2 = (1.0 - x) * (1.0 + x);
    double envelope;
    if (q_.mprime == 0.0)
        envelope = 1.0;
    else if (one_minus_x2 <= 0.0)
        return 0.0;
    else
        envelope = std::pow(one_minus_x2, 0.5 * q_.mprime);
    return h_prefactor_ * envelope *
           specfun::hyp2f1_terminating(-q_.ntheta, q_.lprime + q_.mprime + 1.0,
                                       q_.mprime + 1.0, 0.5 * (1.0 - x));
}

double DensityEvaluator::operator()(double x, double y, double z) const {
    const double r2 = x * x + y * y + z * z;
    if (r2 == 0.0)
        return origin_rho_;
    const double r = std::sqrt(r2);
    const double u = radial(r);
    const double h = angular(z / r);
    return u * u / r2 * h * h / (2.0 * std::numbers::pi);
}

} // namespace ringcoul::model
