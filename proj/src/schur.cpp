#include "somos/schur.hpp"

namespace somos::schur {

namespace {

MultiPoly mono(const std::string &var, std::int32_t e, const Rational &c = Rational(1))
{
    return MultiPoly::monomial(ring_vars(), var, e, c, true);
}

MultiPoly constant(const Rational &c)
{
    return MultiPoly::constant(ring_vars(), c, true);
}

long long checked_cap(long long m, long long n, long long cap)
{
    if (std::abs(m) > cap || std::abs(n) > cap) {
        throw cap_exceeded_error("trilinear check capped at |m|, |n| <= " +
                                 std::to_string(cap));
    }
    return cap;
}

}

const std::vector<std::string> &ring_vars()
{
    static const std::vector<std::string> vars = {"u1", "u2", "g"};
    return vars;
}

MultiPoly sigma_poly()
{
    return mono("u1", 1) - Rational(1, 3) * mono("u2", 3);
}

MultiPoly sigma_shifted(long long m)
{
    // sigma(u1 + m g^3/3, u2 + m g) = (u1 + m g^3/3) - (u2 + m g)^3 / 3
    const MultiPoly u1 = mono("u1", 1), u2 = mono("u2", 1), g = mono("g", 1);
    const MultiPoly shift2 = u2 + Rational(m) * g;
    return u1 + Rational(m, 3) * g.pow(3) - Rational(1, 3) * shift2.pow(3);
}

MultiPoly sigma2_at_v()
{
    // d(sigma)/du2 at u = v = (g^3/3, g): substitute u2 -> g by exponent
    // transfer (the derivative has no u1 dependence).
    const MultiPoly s2 = sigma_poly().derivative("u2");
    MultiPoly out = MultiPoly::zero(ring_vars(), true);
    for (const auto &kv : s2.terms()) {
        Exponents e = kv.first;
        e[2] += e[1];
        e[1] = 0;
        out += MultiPoly::term(ring_vars(), e, kv.second, true);
    }
    return out;
}

MultiPoly psi(long long m)
{
    // a_m = sigma(m v) / sigma2(v)^{m^2} with sigma(m v) = ((m - m^3)/3) g^3
    // and sigma2(v) = -g^2.
    const long long mm = m * m;
    const Rational coeff = Rational(m - m * m * m, 3) * Rational(mm % 2 == 0 ? 1 : -1);
    return mono("g", static_cast<std::int32_t>(3 - 2 * mm), coeff);
}

Rational psi_at(long long m, const Rational &gamma)
{
    return psi(m).eval({Rational(0), Rational(0), gamma});
}

MultiPoly tau(long long n)
{
    const long long nn = n * n;
    const Rational sign(nn % 2 == 0 ? 1 : -1);
    const MultiPoly denom_inv = mono("g", static_cast<std::int32_t>(-2 * nn), sign);
    return sigma_shifted(n) * denom_inv;
}

AdditionReport addition_check()
{
    const MultiPoly sigma = sigma_poly();
    const MultiPoly s1 = sigma.derivative("u1"), s2 = sigma.derivative("u2");
    const MultiPoly s12 = s1.derivative("u2"), s22 = s2.derivative("u2");
    // sigma^2 wp_22 = s2^2 - sigma s22, sigma^2 wp_12 = s1 s2 - sigma s12.
    const MultiPoly p22_num = s2 * s2 - sigma * s22;
    const MultiPoly p12_num = s1 * s2 - sigma * s12;
    // sigma(u)^2 B(lambda; u) with lambda = g^-2:
    const MultiPoly lam = mono("g", -2);
    const MultiPoly sigmaB = lam * lam * sigma * sigma - lam * p22_num - p12_num;
    const MultiPoly s2v = sigma2_at_v();
    const MultiPoly residual =
        sigma_shifted(1) * sigma_shifted(-1) - s2v * s2v * sigmaB;
    AdditionReport rep{residual,
                       RationalFunction(residual, sigma * sigma * s2v * s2v),
                       residual.is_zero()};
    return rep;
}

AlphaReport alpha_check()
{
    auto sig = [](long long m) {
        return mono("g", 3, Rational(m - m * m * m, 3)); // sigma(m v)
    };
    auto s2pow = [](long long e) {
        // sigma2(v)^e = (-1)^e g^{2e}
        return mono("g", static_cast<std::int32_t>(2 * e), Rational(e % 2 == 0 ? 1 : -1));
    };
    auto div = [](const MultiPoly &a, const MultiPoly &b) {
        auto q = MultiPoly::exact_divide(a, b);
        if (!q) {
            throw validation_error("internal: alpha formula division not exact");
        }
        return *q;
    };
    AlphaReport rep{{}, {}, false};
    // alpha_1 = sigma(6v) sigma(3v)^2 / (sigma(4v) sigma(2v)^2 sigma2(v)^30)
    rep.computed[1] = div(sig(6) * sig(3) * sig(3), sig(4) * sig(2) * sig(2) * s2pow(30));
    // alpha_3 = sigma(3v) sigma(5v) / (sigma(2v) sigma(4v) sigma2(v)^14)
    rep.computed[3] = div(sig(3) * sig(5), sig(2) * sig(4) * s2pow(14));
    // alpha_2 = sigma(4v)^2/(sigma2(v)^24 sigma(2v)^2) (1 - sigma(3v)^3 sigma(5v)
    //           / (sigma(4v)^3 sigma(2v)))
    const MultiPoly one = constant(Rational(1));
    const MultiPoly inner =
        one - div(sig(3).pow(3) * sig(5), sig(4).pow(3) * sig(2));
    rep.computed[2] = div(sig(4) * sig(4) * inner, s2pow(24) * sig(2) * sig(2));
    // alpha_0 = -sigma(6v) / (sigma(2v) sigma2(v)^32)
    rep.computed[0] = div(-sig(6), sig(2) * s2pow(32));

    rep.expected[0] = mono("g", -64, Rational(-35));
    rep.expected[1] = mono("g", -60, Rational(56));
    rep.expected[2] = mono("g", -48, Rational(-28));
    rep.expected[3] = mono("g", -28, Rational(8));
    rep.match = rep.computed == rep.expected;
    return rep;
}

MultiPoly recg2_residual(long long n)
{
    const auto alphas = alpha_check().computed;
    MultiPoly rhs = MultiPoly::zero(ring_vars(), true);
    for (long long j = 0; j <= 3; ++j) {
        rhs += alphas[static_cast<std::size_t>(j)] * tau(n + j) * tau(n - j);
    }
    return tau(n + 4) * tau(n - 4) - rhs;
}

namespace {

MultiPoly trilinear_core(long long m, long long n, const MultiPoly tau_of[],
                         long long tau_base)
{
    auto T = [&](long long k) { return tau_of[k - tau_base]; };
    const MultiPoly det =
        psi(m) * T(n - 2) * (psi(m) * T(n) * psi(m) * T(n + 2) -
                             psi(m + 1) * T(n + 1) * psi(m - 1) * T(n + 1)) -
        psi(m + 1) * T(n - 1) * (psi(m - 1) * T(n - 1) * psi(m) * T(n + 2) -
                                 psi(m + 1) * T(n + 1) * psi(m - 2) * T(n)) +
        psi(m + 2) * T(n) * (psi(m - 1) * T(n - 1) * psi(m - 1) * T(n + 1) -
                             psi(m) * T(n) * psi(m - 2) * T(n));
    return psi(2) * psi(2) * psi(m) * T(n) * T(n + m) * T(n - m) - det;
}

}

MultiPoly trilinear_residual(long long m, long long n, long long cap)
{
    checked_cap(m, n, cap);
    // tau_{n-2}..tau_{n+2} plus tau_{n+-m}: precompute the needed range.
    const long long lo = std::min(n - 2, std::min(n - std::abs(m), n + std::abs(m)));
    const long long hi = std::max(n + 2, std::max(n - std::abs(m), n + std::abs(m)));
    std::vector<MultiPoly> taus;
    for (long long k = lo; k <= hi; ++k) {
        taus.push_back(tau(k));
    }
    return trilinear_core(m, n, taus.data(), lo);
}

MultiPoly trilinear_residual_at_u0(long long m, long long n, long long cap)
{
    checked_cap(m, n, cap);
    const long long lo = std::min(n - 2, std::min(n - std::abs(m), n + std::abs(m)));
    const long long hi = std::max(n + 2, std::max(n - std::abs(m), n + std::abs(m)));
    std::vector<MultiPoly> taus;
    for (long long k = lo; k <= hi; ++k) {
        taus.push_back(tau(k).substitute("u1", Rational(0)).substitute("u2", Rational(0)));
    }
    return trilinear_core(m, n, taus.data(), lo);
}

}
