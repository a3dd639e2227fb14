#ifndef SOMOS_SOMOS_SOLVER_HPP
#define SOMOS_SOMOS_SOLVER_HPP

#include <memory>

#include "somos/recurrence.hpp"
#include "somos/weierstrass.hpp"

namespace somos {

// A scalar that is exact when the data allows (mu = sqrt(alpha) with alpha a
// rational square) and numeric otherwise. `value` is always usable.
struct AlgebraicValue {
    bool exact = false;
    Rational rational_value;
    Complex value;
};

// Output of the curve-reconstruction algorithm: Steps 1-4 are exact rational
// arithmetic, Step 5 (uniformize) attaches the numeric uniformization.
struct Somos4Solution {
    Somos4Problem problem;

    // Step 1
    Rational tau_minus1, f0, f1, J;
    // Step 2
    Rational lambda;
    AlgebraicValue mu;
    // Step 3
    Rational g2, g3;
    bool curve_degenerate = false; // g2^3 = 27 g3^2 (exact test)
    // Step 4
    Rational f_minus1, nu;
    AlgebraicValue xi;

    // Step 5
    bool uniformized = false;
    std::shared_ptr<const WeierstrassContext> ctx;
    JacobianPoint kappa, z0;
    Complex A, B;
    Real sign_constraint_residual; // |wp'(kappa) wp'(z0) - xi mu|
};

// Steps 1-4, exact. Requires alpha != 0 (alpha = 0 belongs to
// alternating_closed_form) and nonzero seeds; a degenerate discriminant is
// flagged, not fatal (the closed form is still defined but sigma degenerates,
// so uniformize refuses).
Somos4Solution step_exact(const Somos4Problem &p);

// Step 5: periods, Abel images of P = (lambda, mu) and P0 = (nu, xi) with
// the product sign constraint wp'(kappa) wp'(z0) = xi mu, and the prefactors
// A = tau_0 / sigma(z0), B = sigma(kappa) sigma(z0) tau_1 / (sigma(z0+kappa) tau_0).
void uniformize(Somos4Solution &sol, int digits = 25);

struct ClosedFormValue {
    Complex value;
    Real log10_magnitude;
};

// tau_n = A B^n sigma(z0 + n kappa) / sigma(kappa)^(n^2), evaluated in log
// space so the n^2 growth cannot overflow.
ClosedFormValue closed_form(const Somos4Solution &sol, long long n);

// alpha = 0: tau_{2k} = tau_0 (tau_2/tau_0)^k beta^{k(k-1)/2},
//            tau_{2k+1} = tau_1 (tau_3/tau_1)^k beta^{k(k-1)/2}; exact, all k.
Rational alternating_closed_form(const Somos4Problem &p, long long n);

}

#endif
