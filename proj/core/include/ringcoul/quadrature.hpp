#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Gauss-Legendre quadrature with cached node tables and a node-doubling
// driver for integrals whose endpoint regularity is not known a priori.

namespace ringcoul::quad {

struct GaussLegendre {
    std::vector<double> nodes;   // on [-1, 1], ascending
    std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre recurrence.
// Results are cached per order; safe to call concurrently.
const GaussLegendre& gauss_legendre(int order);

template <class F>
double integrate(F&& f, double a, double b, const GaussLegendre& rule) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double sum = 0.0, carry = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double term = rule.weights[i] * f(mid + hw * rule.nodes[i]);
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return hw * sum;
}

struct DoublingResult {
    double value = 0.0;
    int nodes = 0;
    bool converged = false;
};

// Doubles the order from `start` until two successive estimates agree to
// `tol` (absolute), capped at `cap`. Non-convergence is reported in the
// result, never silently truncated.
template <class F>
DoublingResult integrate_doubling(F&& f, double a, double b, double tol,
                                  int start = 64, int cap = 4096) {
    DoublingResult r;
    double prev = integrate(f, a, b, gauss_legendre(start));
    for (int n = 2 * start; n <= cap; n *= 2) {
        const double cur = integrate(f, a, b, gauss_legendre(n));
        if (std::abs(cur - prev) <= tol) {
            r.value = cur;
            r.nodes = n;
            r.converged = true;
            return r;
        }
        prev = cur;
    }
    r.value = prev;
    r.nodes = cap;
    r.converged = false;
    return r;
}

} // namespace ringcoul::quad
