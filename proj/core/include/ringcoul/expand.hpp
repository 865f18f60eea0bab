#pragma once

#include <vector>

#include "ringcoul/model.hpp"

// Expansion of deformed spherical harmonics over the standard ones:
//   Y_{l'm'} = sum_l a_lm Y_lm  (same m only; the azimuthal integral kills
//   every other m), with
//   a_lm = sqrt[(2l'+1)(2l+1)(l-m)! Gamma(l'-m'+1) / (4 (l+m)! Gamma(l'+m'+1))]
//          * int_{-1}^{1} P_l^m(x) P_{l'}^{m'}(x) dx.
// Coefficients are real; parity forces a_lm = 0 whenever l - |m| and ntheta
// have opposite parity.

namespace ringcoul::expand {

struct AngularState {
    int m = 0;
    int ntheta = 0;
    double b = 0.0;

    model::QuasiNumbers quasi() const;  // validates m'm > 0 etc.
};

struct CoefficientResult {
    double value = 0.0;
    int nodes = 0;        // Gauss-Legendre order that met the tolerance
    bool converged = true;
};

// Overlap of Y_{l m_proj} with the deformed harmonic of `state`. Exact 0
// for m_proj != state.m (azimuthal orthogonality; no quadrature is run).
// Otherwise Gauss-Legendre with node doubling 64..4096 until successive
// estimates agree to 1e-10; non-convergence is reported in the result.
CoefficientResult coefficient(int l, int m_proj, const AngularState& state);

// Overload taking derived quasi numbers directly; q must belong to the
// state whose magnetic number is m.
CoefficientResult coefficient(int l, int m, const model::QuasiNumbers& q);

struct ExpansionEntry {
    int l = 0;
    double a_lm = 0.0;
};

struct ExpansionTable {
    AngularState state;
    std::vector<ExpansionEntry> entries;  // retained (allowed-parity) l only
    int quad_nodes = 0;                   // largest order used
    bool converged = true;
    double completeness_defect = 0.0;     // 1 - sum a^2
};

// All allowed-parity coefficients for l in [|m|, l_max]. Parity-forbidden
// entries are identically zero and never computed. l_max < 0 selects the
// default |m| + ntheta + 12.
ExpansionTable table(const AngularState& state, int l_max = -1);

} // namespace ringcoul::expand
