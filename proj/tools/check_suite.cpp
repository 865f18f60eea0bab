#include "check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "ringcoul/quadrature.hpp"

namespace ringcoul::checks {

using model::DensityEvaluator;
using model::QuantumState;

namespace {

std::string state_tag(const QuantumState& qs) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "n=%d l=%d m=%d b=%g Z=%g", qs.n, qs.l, qs.m, qs.b, qs.Z);
    return buf;
}

double radial_mass(const DensityEvaluator& ev, double rmax) {
    const auto& rule = quad::gauss_legendre(48);
    const double panel = std::max(0.25, ev.quasi().nprime / ev.state().Z / 4.0);
    double total = 0.0;
    for (double a = 0.0; a < rmax; a += panel) {
        const double b = std::min(rmax, a + panel);
        total += quad::integrate([&](double r) { const double u = ev.radial(r); return u * u; },
                                 a, b, rule);
    }
    return total;
}

// five-point second derivative with a radius-proportional step
double u_second_derivative(const DensityEvaluator& ev, double r, double h) {
    return (-ev.radial(r + 2 * h) + 16 * ev.radial(r + h) - 30 * ev.radial(r) +
            16 * ev.radial(r - h) - ev.radial(r - 2 * h)) /
           (12 * h * h);
}

int count_sign_changes(const DensityEvaluator& ev, double rmax, int samples) {
    int changes = 0;
    double prev = 0.0;
    for (int i = 1; i <= samples; ++i) {
        const double u = ev.radial(rmax * i / samples);
        if (u == 0.0)
            continue;
        if (prev != 0.0 && std::signbit(u) != std::signbit(prev))
            ++changes;
        prev = u;
    }
    return changes;
}

} // namespace

std::vector<QuantumState> default_roster() {
    std::vector<QuantumState> roster;
    for (double b : {0.0, 0.5, 10.0})
        for (int n = 1; n <= 5; ++n)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m <= l; ++m)
                    roster.push_back({n, l, m, b, 1.0});
    return roster;
}

CheckReport run_checks(const std::vector<QuantumState>& roster, double perturb_scale) {
    CheckReport report;
    auto push = [&](const QuantumState& qs, const char* name, double metric, double bound) {
        const bool pass = std::abs(metric) <= bound;
        report.results.push_back({name, state_tag(qs), metric, bound, pass});
        if (!pass)
            ++report.failures;
    };

    for (const QuantumState& qs : roster) {
        const DensityEvaluator ev(qs);
        const auto& q = ev.quasi();
        const double Z = qs.Z;

        // normalizations
        const double rmax = (4.0 * q.nprime * q.nprime + 40.0 * q.nprime) / Z;
        push(qs, "radial_norm", radial_mass(ev, rmax) - 1.0, 1e-8);
        auto h2 = [&](double x) {
            const double h = perturb_scale * ev.angular(x);
            return h * h;
        };
        const auto hn = quad::integrate_doubling(h2, -1.0, 1.0, 1e-11);
        push(qs, "angular_norm", hn.value - 1.0, 1e-8);

        // radial residual against the energy formula
        const double E = model::energy(qs).value;
        double umax = 0.0, resmax = 0.0;
        const int npts = 40;
        for (int i = 0; i <= npts; ++i) {
            const double r = 0.05 * std::pow((3.0 * q.nprime * q.nprime / Z) / 0.05,
                                             static_cast<double>(i) / npts);
            const double u = ev.radial(r);
            umax = std::max(umax, std::abs(u));
            const double h = std::max(1e-4, 5e-4 * r);
            if (r - 2 * h <= 0.0)
                continue;
            const double res = u_second_derivative(ev, r, h) +
                               (2.0 * E + 2.0 * Z / r - q.lambda / (r * r)) * u;
            resmax = std::max(resmax, std::abs(res));
        }
        push(qs, "radial_residual", resmax / umax, 1e-6);

        // node count
        const int nodes = count_sign_changes(ev, 4.0 * q.nprime * q.nprime / Z, 4000);
        push(qs, "radial_nodes", nodes - q.nr, 0.0);

        // b = 0 reduction to the standard harmonics
        if (qs.b == 0.0) {
            double worst = 0.0;
            for (double theta : {0.3, 1.0, 2.2}) {
                const auto y = model::deformed_Ylm(qs, theta, 0.4);
                const double phase = (qs.m % 2 != 0) ? -1.0 : 1.0;
                const double pint = specfun::legendre_int(qs.l, qs.m, std::cos(theta));
                const double norm = std::sqrt((2.0 * qs.l + 1.0) *
                                              specfun::factorial(qs.l - qs.m) /
                                              (4.0 * std::numbers::pi *
                                               specfun::factorial(qs.l + qs.m)));
                const auto ref = phase * norm * pint * std::polar(1.0, qs.m * 0.4);
                worst = std::max(worst, std::abs(y - ref));
            }
            push(qs, "b0_reduction", worst, 1e-12);
        }

        // negative-order and conjugation identities
        {
            const auto params = specfun::RealOrderLegendreParams::make(q.mprime, q.ntheta);
            const double x = 0.37;
            const double lhs = specfun::legendre_negative_order(params, qs.m, x);
            const double ratio = specfun::gamma_fn(q.lprime - q.mprime + 1.0) /
                                 specfun::gamma_fn(q.lprime + q.mprime + 1.0);
            const double sign = (qs.m % 2 != 0) ? -1.0 : 1.0;
            const double rhs = sign * ratio * specfun::legendre_real_order(params, x);
            push(qs, "negative_order_identity", lhs - rhs, 1e-14);

            const auto [yp, ym] = model::conjugation_pair(qs, 1.1, 0.7);
            const double phase = (qs.m % 2 != 0) ? -1.0 : 1.0;
            push(qs, "conjugation_identity", std::abs(ym - phase * std::conj(yp)), 1e-12);
        }
    }
    return report;
}

} // namespace ringcoul::checks
