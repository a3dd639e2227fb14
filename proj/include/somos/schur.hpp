#ifndef SOMOS_SCHUR_HPP
#define SOMOS_SCHUR_HPP

#include <array>

#include "somos/multipoly.hpp"

namespace somos::schur {

// The cusp limit y^2 = 4x^5: sigma degenerates to the Schur polynomial
// sigma(u) = u1 - u2^3/3, and the theta divisor is v = (g^3/3, g). All
// computations live in the Laurent ring Q[u1, u2, g, g^-1].

// The ring variables, in order: u1, u2, g.
const std::vector<std::string> &ring_vars();

// sigma(u + m v) as a polynomial in (u1, u2, g).
MultiPoly sigma_shifted(long long m);

// sigma itself and its u2-derivative at v: sigma2(v) = -g^2 (computed from
// the derivative, not assumed).
MultiPoly sigma_poly();
MultiPoly sigma2_at_v();

// Hyperelliptic psi-function a_m = sigma(m v)/sigma2(v)^{m^2}; a Laurent
// monomial ((m - m^3)/3) (-1)^{m^2} g^{3 - 2 m^2}.
MultiPoly psi(long long m);
Rational psi_at(long long m, const Rational &gamma);

// tau_n = sigma(u + n v)/sigma2(v)^{n^2} with A = B = 1.
MultiPoly tau(long long n);

// Residual of the one-point addition formula
//   sigma(u+v) sigma(u-v) - sigma(u)^2 sigma2(v)^2 B(lambda; u),
// with lambda = g^-2 and the Kleinian wp's obtained by differentiating
// sigma. Identically zero.
struct AdditionReport {
    MultiPoly residual;
    RationalFunction as_rational_function;
    bool zero;
};
AdditionReport addition_check();

// The four order-8 recurrence coefficients evaluated symbolically from sigma(m v) and
// sigma2(v); expected values (-35 g^-64, 56 g^-60, -28 g^-48, 8 g^-28).
struct AlphaReport {
    std::array<MultiPoly, 4> computed;
    std::array<MultiPoly, 4> expected;
    bool match;
};
AlphaReport alpha_check();

// tau_{n+4} tau_{n-4} - sum_j alpha_j tau_{n+j} tau_{n-j}, symbolic in
// (u1, u2, g); identically zero for every n.
MultiPoly recg2_residual(long long n);

// a_2^2 a_m tau_n tau_{n+m} tau_{n-m} minus the 3x3 Hankel-type determinant
// with entries a_{m+i} tau_{n+j}; identically zero. |m|, |n| capped.
MultiPoly trilinear_residual(long long m, long long n, long long cap = 8);

// Substitute u = 0 (tau_n -> a_n): the same residual must reduce to the pure
// psi-function Hankel formula, again zero.
MultiPoly trilinear_residual_at_u0(long long m, long long n, long long cap = 8);

}

#endif
