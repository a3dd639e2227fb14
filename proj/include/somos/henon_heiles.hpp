#ifndef SOMOS_HENON_HEILES_HPP
#define SOMOS_HENON_HEILES_HPP

#include <cmath>
#include <complex>
#include <string>

#include "somos/genus2.hpp"
#include "somos/rational.hpp"
#include "somos/unipoly.hpp"

namespace somos::hh {

// The case (ii) Henon-Heiles system and its Backlund transformation,
// realized as Darboux conjugation of the 2x2 polynomial Lax matrix. One code
// path serves double (real mode), std::complex<double> (complex mode) and
// Rational (exact mode); the exact mode is what the genus-2 cross-check
// consumes.

template <typename T>
struct State {
    T q1, q2, p1, p2;
};

template <typename T>
struct Params {
    T a, c, m;
};

namespace detail {

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    using magnitude_type = double;
    static constexpr bool exact = false;
    static double mag(double v) { return std::abs(v); }
    static double sqrt_branch(double v, const char *what)
    {
        if (v < 0) {
            throw domain_error(std::string(what) +
                               " is negative in real mode (branch error); use complex mode");
        }
        return std::sqrt(v);
    }
};

template <>
struct scalar_traits<std::complex<double>> {
    using magnitude_type = double;
    static constexpr bool exact = false;
    static double mag(const std::complex<double> &v) { return std::abs(v); }
    static std::complex<double> sqrt_branch(const std::complex<double> &v, const char *)
    {
        return std::sqrt(v);
    }
};

template <>
struct scalar_traits<Rational> {
    using magnitude_type = Rational;
    static constexpr bool exact = true;
    static Rational mag(const Rational &v) { return v < 0 ? Rational(-v) : v; }
    static Rational sqrt_branch(const Rational &v, const char *what)
    {
        const auto r = rational_sqrt(v);
        if (!r) {
            throw domain_error(std::string(what) +
                               " is not the square of a rational (branch error in exact mode)");
        }
        return *r;
    }
};

template <typename T>
typename scalar_traits<T>::magnitude_type poly_distance(const Poly<T> &a, const Poly<T> &b)
{
    using traits = scalar_traits<T>;
    typename traits::magnitude_type d(0);
    const long n = std::max(a.degree(), b.degree());
    for (long i = 0; i <= n; ++i) {
        const auto di = traits::mag(a.coeff(static_cast<std::size_t>(i)) -
                                    b.coeff(static_cast<std::size_t>(i)));
        if (d < di) {
            d = di;
        }
    }
    return d;
}

template <typename T>
typename scalar_traits<T>::magnitude_type poly_scale(const Poly<T> &a)
{
    using traits = scalar_traits<T>;
    typename traits::magnitude_type d(1);
    for (long i = 0; i <= a.degree(); ++i) {
        const auto di = traits::mag(a.coeff(static_cast<std::size_t>(i)));
        if (d < di) {
            d = di;
        }
    }
    return d;
}

}

// Lax matrix L = [[A, B], [C, -A]]; trace zero by construction.
template <typename T>
struct LaxMatrix {
    Poly<T> a, b, c;
};

template <typename T>
T h1(const State<T> &s, const Params<T> &par)
{
    T barrier(0);
    if (!(par.m == T(0))) {
        if (s.q1 == T(0)) {
            throw domain_error("q1 = 0 with m != 0: the m^2/q1^2 term is singular");
        }
        barrier = par.m * par.m / (T(2) * s.q1 * s.q1);
    }
    return T(1) / T(2) * (s.p1 * s.p1 + s.p2 * s.p2) + s.q2 * s.q2 * s.q2 +
           T(1) / T(2) * s.q2 * s.q1 * s.q1 - T(1) / T(2) * par.a * s.q1 * s.q1 +
           par.c * s.q2 - barrier;
}

template <typename T>
T h2(const State<T> &s, const Params<T> &par)
{
    T barrier(0);
    if (!(par.m == T(0))) {
        if (s.q1 == T(0)) {
            throw domain_error("q1 = 0 with m != 0: the m^2/q1^2 term is singular");
        }
        barrier = par.m * par.m * (s.q2 + T(2) * par.a) / (T(4) * s.q1 * s.q1);
    }
    return T(1) / T(4) * (s.q2 + T(2) * par.a) * s.p1 * s.p1 -
           T(1) / T(4) * s.q1 * s.p1 * s.p2 - T(1) / T(32) * s.q1 * s.q1 * s.q1 * s.q1 -
           T(1) / T(8) * (s.q2 * s.q2 - T(2) * par.a * s.q2 + par.c + T(4) * par.a * par.a) *
               s.q1 * s.q1 -
           barrier;
}

template <typename T>
LaxMatrix<T> lax_matrix(const State<T> &s, const Params<T> &par)
{
    // (1,1) entry is d(Bolza)/du2(x): (p2/2) x - p1 q1 / 8.
    LaxMatrix<T> L;
    L.a = Poly<T>{-s.p1 * s.q1 / T(8), s.p2 / T(2)};
    L.c = Poly<T>{-s.q1 * s.q1 / T(8), s.q2 + T(2) * par.a, T(2)};
    T b0;
    if (par.m == T(0)) {
        b0 = s.p1 * s.p1 / T(8);
    } else {
        if (s.q1 == T(0)) {
            throw domain_error("q1 = 0 with m != 0: the Lax entry is singular");
        }
        b0 = (s.p1 * s.p1 - par.m * par.m / (s.q1 * s.q1)) / T(8);
    }
    L.b = Poly<T>{b0,
                  (s.q1 * s.q1 + T(4) * s.q2 * s.q2 - T(8) * par.a * s.q2 +
                   T(16) * par.a * par.a + T(4) * par.c) /
                      T(8),
                  T(4) * par.a - s.q2, T(2)};
    return L;
}

// Coefficients c0..c4 of the spectral curve det(L - y) = y^2 - f(x),
// f = 4x^5 + c4 x^4 + ... + c0 = A^2 + B C. The x^5 coefficient 4 is
// structural; c4 = 12a and c3 = c + 12a^2 exactly, while c2 carries the
// constant offset a(4a^2 + c) relative to h1/2 (h2/2 and m^2/64 are exact).
template <typename T>
std::array<T, 5> spectral_curve(const State<T> &s, const Params<T> &par)
{
    const auto L = lax_matrix(s, par);
    const Poly<T> f = L.a * L.a + L.b * L.c;
    return {f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3), f.coeff(4)};
}

template <typename T>
struct BTStepResult {
    State<T> state;
    // max |coeff| discrepancy between the conjugated matrix and the Lax
    // matrix rebuilt from the extracted state, scaled by the entry size.
    typename detail::scalar_traits<T>::magnitude_type structural_residual;
};

// One Backlund step with parameter lambda and mu = mu_sign sqrt(f(lambda)):
// L~ = M L M^-1 with the elementary Darboux matrix
// M = [[-Y, Y^2 + x - lambda], [1, -Y]], Y = (mu + A(lambda))/C(lambda).
// The new state is read off the (2,1) and (1,1) entries; q1_branch picks the
// sign of q1~ (+1 keeps the sign of the current q1).
template <typename T>
BTStepResult<T> bt_step(const State<T> &s, const Params<T> &par, const T &lambda,
                        int mu_sign, int q1_branch = +1)
{
    using traits = detail::scalar_traits<T>;
    const auto L = lax_matrix(s, par);
    const T Cl = L.c.eval(lambda), Al = L.a.eval(lambda);
    const T flambda = Al * Al + L.b.eval(lambda) * Cl;
    if (traits::mag(Cl) == typename traits::magnitude_type(0)) {
        throw domain_error("Bolza polynomial vanishes at lambda: the Darboux step collides "
                           "with the divisor");
    }
    const T mu = T(mu_sign) * traits::sqrt_branch(flambda, "f(lambda)");
    const T Y = (mu + Al) / Cl;

    const Poly<T> w{Y * Y - lambda, T(1)}; // Y^2 + x - lambda
    const Poly<T> n21 = Poly<T>::constant(Y * Y) * L.c - Poly<T>::constant(T(2) * Y) * L.a - L.b;
    const Poly<T> n11 = L.a * Poly<T>{T(2) * Y * Y - lambda, T(1)} +
                        Poly<T>::constant(Y) * L.b - Poly<T>::constant(Y) * w * L.c;
    const Poly<T> n12 = Poly<T>::constant(T(2) * Y) * w * L.a +
                        Poly<T>::constant(Y * Y) * L.b - w * w * L.c;
    auto [l21, r21] = divide_by_lambda_minus_x(n21, lambda);
    auto [l11, r11] = divide_by_lambda_minus_x(n11, lambda);
    auto [l12, r12] = divide_by_lambda_minus_x(n12, lambda);
    const typename traits::magnitude_type div_scale =
        detail::poly_scale(n12) + detail::poly_scale(n21);
    if constexpr (traits::exact) {
        if (!(r21 == T(0)) || !(r11 == T(0)) || !(r12 == T(0))) {
            throw validation_error("internal: Darboux conjugation not polynomial");
        }
    } else {
        const double rel = static_cast<double>(
            (traits::mag(r21) + traits::mag(r11) + traits::mag(r12)) / div_scale);
        if (rel > 1e-8) {
            throw precision_error("Darboux conjugation residual too large (|" +
                                  std::to_string(rel) + "|)");
        }
    }

    State<T> out;
    out.q2 = l21.coeff(1) - T(2) * par.a;
    const T q1sq = T(-8) * l21.coeff(0);
    if (traits::mag(q1sq) == typename traits::magnitude_type(0)) {
        throw domain_error("q1~ = 0 after the step: singular configuration");
    }
    out.q1 = T(q1_branch) * traits::sqrt_branch(q1sq, "q1~^2");
    if constexpr (!traits::exact) {
        // continuity default: keep the sign of the incoming q1
        if (q1_branch == +1 && traits::mag(s.q1 - out.q1) > traits::mag(s.q1 + out.q1)) {
            out.q1 = -out.q1;
        }
    }
    out.p2 = T(2) * l11.coeff(1);
    out.p1 = T(-8) * l11.coeff(0) / out.q1;

    // Structural verification: the rebuilt Lax matrix must reproduce the
    // conjugated entries ((2,1) leading 2 and linear (1,1) included).
    const auto L2 = lax_matrix(out, par);
    auto resid = detail::poly_distance(L2.a, l11);
    const auto r2 = detail::poly_distance(L2.c, l21);
    const auto r3 = detail::poly_distance(L2.b, l12);
    if (resid < r2) {
        resid = r2;
    }
    if (resid < r3) {
        resid = r3;
    }
    const auto scale = detail::poly_scale(L2.b);
    BTStepResult<T> result{out, resid / scale};
    if constexpr (traits::exact) {
        if (!(result.structural_residual == Rational(0))) {
            throw validation_error("conjugated Lax matrix does not have the structural "
                                   "Henon-Heiles form");
        }
    } else {
        if (static_cast<double>(result.structural_residual) > 1e-6) {
            throw precision_error("conjugated Lax matrix lost the structural form");
        }
    }
    return result;
}

// || L~(state~) M - M L(state) ||, max coefficient norm over entries, taken
// relative to ||M|| ||L|| (the backward-error scale of the product); the
// discrete Lax equation asserted from the extracted state.
template <typename T>
typename detail::scalar_traits<T>::magnitude_type
discrete_lax_residual(const State<T> &before, const State<T> &after, const Params<T> &par,
                      const T &lambda, int mu_sign)
{
    using traits = detail::scalar_traits<T>;
    const auto L = lax_matrix(before, par);
    const auto Lt = lax_matrix(after, par);
    const T Cl = L.c.eval(lambda), Al = L.a.eval(lambda);
    const T mu = T(mu_sign) * traits::sqrt_branch(Al * Al + L.b.eval(lambda) * Cl, "f(lambda)");
    const T Y = (mu + Al) / Cl;
    const Poly<T> mY = Poly<T>::constant(-Y);
    const Poly<T> w{Y * Y - lambda, T(1)};
    const Poly<T> one = Poly<T>::constant(T(1));
    // M = [[-Y, w], [1, -Y]]
    const Poly<T> ml[2][2] = {{mY * L.a + w * L.c, mY * L.b - w * L.a},
                              {L.a + mY * L.c, L.b - mY * L.a}};
    const Poly<T> lm[2][2] = {{Lt.a * mY + Lt.b * one, Lt.a * w + Lt.b * mY},
                              {Lt.c * mY - Lt.a * one, Lt.c * w - Lt.a * mY}};
    typename traits::magnitude_type num(0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto d = detail::poly_distance(lm[i][j], ml[i][j]);
            if (num < d) {
                num = d;
            }
        }
    }
    auto m_norm = detail::poly_scale(w);
    const auto ynorm = traits::mag(Y);
    if (m_norm < ynorm) {
        m_norm = ynorm;
    }
    auto l_norm = detail::poly_scale(L.b);
    for (const auto *entry : {&L.a, &L.c, &Lt.a, &Lt.b, &Lt.c}) {
        const auto sc = detail::poly_scale(*entry);
        if (l_norm < sc) {
            l_norm = sc;
        }
    }
    return num / (m_norm * l_norm);
}

// Monic separation pair: U(x) = x^2 + (q2 + 2a)x/2 - q1^2/16 (half the (2,1)
// Lax entry) and V = the (1,1) entry, the module's V = +d(Bolza)/du2
// orientation. In exact mode the pair is a valid Mumford divisor on the
// spectral curve.
template <typename T>
std::pair<Poly<T>, Poly<T>> separation_pair(const State<T> &s, const Params<T> &par)
{
    const auto L = lax_matrix(s, par);
    Poly<T> U{-s.q1 * s.q1 / T(16), (s.q2 + T(2) * par.a) / T(2), T(1)};
    return {U, L.a};
}

template <typename T>
struct SeparationVariables {
    bool degenerate = false; // coincident roots
    std::array<T, 2> x{};
    std::array<T, 2> y{};
};

// Roots of the (2,1) entry with y = V(x); real mode requires a nonnegative
// discriminant, exact mode a rational square.
template <typename T>
SeparationVariables<T> separation_variables(const State<T> &s, const Params<T> &par)
{
    using traits = detail::scalar_traits<T>;
    const auto [U, V] = separation_pair(s, par);
    const T b = U.coeff(1), c0 = U.coeff(0);
    const T disc = b * b - T(4) * c0;
    SeparationVariables<T> out;
    if (traits::mag(disc) == typename traits::magnitude_type(0)) {
        out.degenerate = true;
    }
    const T sd = traits::sqrt_branch(disc, "separation discriminant");
    out.x = {(-b + sd) / T(2), (-b - sd) / T(2)};
    out.y = {V.eval(out.x[0]), V.eval(out.x[1])};
    return out;
}

struct CrossCheckReport {
    bool pass = false;
    long long steps = 0;
    long long first_mismatch = -1;
    std::string detail;
};

// Exact-mode consistency of the BT against the genus-2 Cantor pipeline: n
// steps of bt_step(lambda, +mu) must match the divisor sequence from the
// initial separation divisor with step point (lambda, -mu) (one global
// orientation choice, fixed here once and verified by this check).
CrossCheckReport cross_check_jacobian(const State<Rational> &s, const Params<Rational> &par,
                                      const Rational &lambda, int mu_sign, long long n);

}

#endif
