#include "ringcoul/expand.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ringcoul/quadrature.hpp"

namespace ringcoul::expand {

using specfun::gamma_fn;

model::QuasiNumbers AngularState::quasi() const {
    if (ntheta < 0)
        throw std::domain_error("expand: ntheta must be >= 0");
    if (m == 0 ? b < 0.0 : b <= -static_cast<double>(m) * m)
        throw std::domain_error("expand: b must exceed -m^2");
    model::QuasiNumbers q;
    q.mprime = std::sqrt(static_cast<double>(m) * m + b);
    q.ntheta = ntheta;
    q.nr = 0;
    q.lprime = q.ntheta + q.mprime;
    q.nprime = q.lprime + 1.0;
    q.lambda = q.lprime * (q.lprime + 1.0);
    return q;
}

CoefficientResult coefficient(int l, int m_proj, const AngularState& state) {
    if (l < std::abs(m_proj))
        throw std::domain_error("expand: require l >= |m| (got l=" + std::to_string(l) +
                                ", m=" + std::to_string(m_proj) + ")");
    if (m_proj != state.m)
        return {0.0, 0, true};  // e^{i(m'-m)phi} integrates to zero
    return coefficient(l, m_proj, state.quasi());
}

CoefficientResult coefficient(int l, int m, const model::QuasiNumbers& q) {
    if (l < std::abs(m))
        throw std::domain_error("expand: require l >= |m|");
    const double pref = std::sqrt((2.0 * q.lprime + 1.0) * (2.0 * l + 1.0) *
                                  gamma_fn(l - m + 1.0) * gamma_fn(q.lprime - q.mprime + 1.0) /
                                  (4.0 * gamma_fn(l + m + 1.0) * gamma_fn(q.lprime + q.mprime + 1.0)));
    const auto params = specfun::RealOrderLegendreParams::make(q.mprime, q.ntheta);
    auto integrand = [&](double x) {
        return pref * specfun::legendre_int(l, m, x) * specfun::legendre_real_order(params, x);
    };
    const auto r = quad::integrate_doubling(integrand, -1.0, 1.0, 1e-10);
    return {r.value, r.nodes, r.converged};
}

ExpansionTable table(const AngularState& state, int l_max) {
    const int lo = std::abs(state.m);
    if (l_max < 0)
        l_max = lo + state.ntheta + 12;
    if (l_max < lo + state.ntheta + 6)
        throw std::domain_error("expand: l_max must be >= |m| + ntheta + 6");
    ExpansionTable out;
    out.state = state;
    const model::QuasiNumbers q = state.quasi();
    double sum_sq = 0.0;
    for (int l = lo; l <= l_max; ++l) {
        if ((l - lo) % 2 != state.ntheta % 2)
            continue;  // parity-forbidden, identically zero
        const CoefficientResult c = coefficient(l, state.m, q);
        out.entries.push_back({l, c.value});
        out.quad_nodes = std::max(out.quad_nodes, c.nodes);
        out.converged = out.converged && c.converged;
        sum_sq += c.value * c.value;
    }
    out.completeness_defect = 1.0 - sum_sq;
    return out;
}

} // namespace ringcoul::expand
