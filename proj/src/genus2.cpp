#include "somos/genus2.hpp"

#include <algorithm>

#include "somos/linsolve.hpp"

namespace somos::g2 {

RPoly QuinticCurve::f() const
{
    return RPoly({c[0], c[1], c[2], c[3], c[4], Rational(4)});
}

QuinticCurve QuinticCurve::validate(const std::array<Rational, 5> &coeffs)
{
    QuinticCurve curve{coeffs};
    const RPoly f = curve.f();
    const RPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) {
        // Repeated-root factor; scan for its rational roots (p/q with
        // p | constant, q | leading) to make the report concrete.
        std::string roots;
        const RPoly gm = g; // monic already
        Rational c0(0);
        for (long i = 0; i <= gm.degree(); ++i) {
            if (gm.coeff(static_cast<std::size_t>(i)) != 0) {
                c0 = gm.coeff(static_cast<std::size_t>(i));
                break;
            }
        }
        if (gm.eval(Rational(0)) == 0) {
            roots += " x = 0";
        }
        const Integer pnum = abs(numer(c0)), pden = denom(c0);
        for (Integer d(1); d * d <= pnum && d < 64; ++d) {
            if (pnum % d != 0) {
                continue;
            }
            for (const Integer &cand : {Integer(d), Integer(pnum / d)}) {
                for (int sgn : {1, -1}) {
                    const Rational r = Rational(sgn * cand) / Rational(pden);
                    if (gm.eval(r) == 0) {
                        roots += " x = " + to_string(r);
                    }
                }
            }
        }
        throw validation_error("singular curve: repeated-root factor " + g.str() +
                               (roots.empty() ? std::string() : ";" + roots));
    }
    return curve;
}

QuinticCurve QuinticCurve::shifted(const Rational &s) const
{
    const RPoly fs = f().shifted(s);
    QuinticCurve out;
    for (int i = 0; i < 5; ++i) {
        out.c[static_cast<std::size_t>(i)] = fs.coeff(static_cast<std::size_t>(i));
    }
    return out;
}

MumfordDivisor identity_divisor()
{
    return {RPoly::constant(Rational(1)), RPoly()};
}

MumfordDivisor make_divisor(const QuinticCurve &curve, RPoly U, RPoly V)
{
    if (U.is_zero() || U.degree() > 2) {
        throw validation_error("Mumford U must be monic of degree 0, 1 or 2");
    }
    if (U.leading() != 1) {
        throw validation_error("Mumford U must be monic");
    }
    if (!V.is_zero() && V.degree() >= U.degree()) {
        throw validation_error("Mumford V must have degree < deg U");
    }
    if (!poly_mod(V * V - curve.f(), U).is_zero()) {
        throw validation_error("Mumford invariant V^2 = f (mod U) violated");
    }
    return {std::move(U), std::move(V)};
}

MumfordDivisor point_divisor(const QuinticCurve &curve, const CurvePoint &p)
{
    if (p.y * p.y != curve.f_at(p.x)) {
        throw validation_error("point (" + to_string(p.x) + ", " + to_string(p.y) +
                               ") is not on the curve");
    }
    return {RPoly::linear_root(p.x), RPoly::constant(p.y)};
}

MumfordDivisor divisor_negate(const MumfordDivisor &d)
{
    return {d.U, -d.V};
}

MumfordDivisor cantor_add(const QuinticCurve &curve, const MumfordDivisor &a,
                          const MumfordDivisor &b)
{
    const RPoly f = curve.f();
    // Composition (Cantor): d = gcd(U1, U2, V1 + V2) = s1 U1 + s2 U2 + s3 (V1 + V2).
    const auto [g, e1, e2] = poly_ext_gcd(a.U, b.U);
    const auto [d, c1, c2] = poly_ext_gcd(g, a.V + b.V);
    const RPoly s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
    auto [U, ur] = poly_divmod(a.U * b.U, d * d);
    if (!ur.is_zero()) {
        throw validation_error("internal: Cantor composition division not exact");
    }
    const RPoly num = s1 * a.U * b.V + s2 * b.U * a.V + s3 * (a.V * b.V + f);
    auto [numq, nr] = poly_divmod(num, d);
    if (!nr.is_zero()) {
        throw validation_error("internal: Cantor V-numerator not divisible by d");
    }
    RPoly V = poly_mod(numq, U);
    // Reduction to deg U <= 2.
    while (U.degree() > 2) {
        auto [Un, rr] = poly_divmod(f - V * V, U);
        if (!rr.is_zero()) {
            throw validation_error("internal: Cantor reduction division not exact");
        }
        Un = Un.monic();
        V = poly_mod(-V, Un);
        U = std::move(Un);
    }
    return {U.monic(), std::move(V)};
}

const MumfordDivisor &DivisorSequence::at(long long n) const
{
    if (n < lo || n > hi) {
        throw range_error("divisor index " + std::to_string(n) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return divisors[static_cast<std::size_t>(n - lo)];
}

std::vector<long long> DivisorSequence::theta_crossings() const
{
    std::vector<long long> out;
    for (long long n = lo; n <= hi; ++n) {
        if (at(n).degree() < 2) {
            out.push_back(n);
        }
    }
    return out;
}

DivisorSequence divisor_sequence(const QuinticCurve &curve, const MumfordDivisor &d0,
                                 const CurvePoint &p, long long lo, long long hi)
{
    if (lo > 0 || hi < 0) {
        throw validation_error("divisor_sequence range must contain 0");
    }
    make_divisor(curve, d0.U, d0.V); // validate input invariants
    const MumfordDivisor step = point_divisor(curve, p);
    const MumfordDivisor step_back = divisor_negate(step);
    DivisorSequence seq;
    seq.lo = lo;
    seq.hi = hi;
    seq.divisors.resize(static_cast<std::size_t>(hi - lo + 1));
    seq.divisors[static_cast<std::size_t>(-lo)] = d0;
    MumfordDivisor cur = d0;
    for (long long n = 1; n <= hi; ++n) {
        cur = cantor_add(curve, cur, step);
        seq.divisors[static_cast<std::size_t>(n - lo)] = cur;
    }
    cur = d0;
    for (long long n = -1; n >= lo; --n) {
        cur = cantor_add(curve, cur, step_back);
        seq.divisors[static_cast<std::size_t>(n - lo)] = cur;
    }
    return seq;
}

const std::optional<Rational> &BolzaSequence::at(long long n) const
{
    if (n < lo || n > hi) {
        throw range_error("Bolza index " + std::to_string(n) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return f[static_cast<std::size_t>(n - lo)];
}

bool BolzaSequence::has(long long n) const
{
    return n >= lo && n <= hi && f[static_cast<std::size_t>(n - lo)].has_value();
}

std::vector<long long> BolzaSequence::gaps() const
{
    std::vector<long long> out;
    for (long long n = lo; n <= hi; ++n) {
        if (!f[static_cast<std::size_t>(n - lo)]) {
            out.push_back(n);
        }
    }
    return out;
}

BolzaSequence bolza_seq(const QuinticCurve &curve, const MumfordDivisor &d0,
                        const CurvePoint &p, const CurvePoint &lambda_point, long long lo,
                        long long hi)
{
    if (lambda_point.x != p.x) {
        throw validation_error("the Bolza abscissa must be x(P): the Bolza argument is "
                               "shifted by the Abelian image of the step point");
    }
    const auto seq = divisor_sequence(curve, d0, p, lo, hi);
    BolzaSequence bs;
    bs.lambda = lambda_point.x;
    bs.lo = lo;
    bs.hi = hi;
    bs.f.resize(static_cast<std::size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        const auto &d = seq.at(n);
        if (d.degree() == 2) {
            bs.f[static_cast<std::size_t>(n - lo)] = d.U.eval(bs.lambda);
        }
    }
    return bs;
}

Rational y_from_divisor(const QuinticCurve &curve, const MumfordDivisor &d, const Rational &x0)
{
    if (d.U.eval(x0) != 0) {
        throw domain_error("x0 = " + to_string(x0) + " is not a root of U");
    }
    const Rational y = d.V.eval(x0);
    if (y * y != curve.f_at(x0)) {
        throw validation_error("Mumford V is inconsistent with the curve at x0");
    }
    return y;
}

SequenceWindow tau_from_f(const BolzaSequence &f, long long gauge_n0, long long lo,
                          long long hi)
{
    if (lo > hi || gauge_n0 < lo || gauge_n0 + 1 > hi) {
        throw validation_error("tau_from_f needs lo <= n0 < n0+1 <= hi");
    }
    auto need = [&](long long n) -> const Rational & {
        if (n < f.lo || n > f.hi || !f.at(n)) {
            throw vanishing_tau_error(n, "f (theta-divisor gap)");
        }
        return *f.at(n);
    };
    SequenceWindow tau;
    tau.offset = lo;
    tau.terms.resize(static_cast<std::size_t>(hi - lo + 1));
    tau.at(gauge_n0) = Rational(1);
    tau.at(gauge_n0 + 1) = Rational(1);
    for (long long n = gauge_n0 + 1; n < hi; ++n) {
        if (tau.at(n - 1) == 0) {
            throw vanishing_tau_error(n - 1, "tau");
        }
        tau.at(n + 1) = need(n) * tau.at(n) * tau.at(n) / tau.at(n - 1);
    }
    for (long long n = gauge_n0; n > lo; --n) {
        if (tau.at(n + 1) == 0) {
            throw vanishing_tau_error(n + 1, "tau");
        }
        tau.at(n - 1) = need(n) * tau.at(n) * tau.at(n) / tau.at(n + 1);
    }
    return tau;
}

std::array<Rational, 4> fit_somos8(const SequenceWindow &tau)
{
    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (long long n = tau.lo() + 4; n + 4 <= tau.hi() && M.size() < 4; ++n) {
        bool usable = true;
        for (long long j = -4; j <= 4; ++j) {
            if (tau.at(n + j) == 0) {
                usable = false;
                break;
            }
        }
        if (!usable) {
            continue;
        }
        M.push_back({tau.at(n) * tau.at(n), tau.at(n + 1) * tau.at(n - 1),
                     tau.at(n + 2) * tau.at(n - 2), tau.at(n + 3) * tau.at(n - 3)});
        rhs.push_back(tau.at(n + 4) * tau.at(n - 4));
    }
    if (M.size() < 4) {
        throw validation_error("fit_somos8 needs at least 4 usable rows (9 consecutive "
                               "nonzero terms each)");
    }
    return [&] {
        auto x = solve_linear_exact(M, rhs);
        return std::array<Rational, 4>{x[0], x[1], x[2], x[3]};
    }();
}

ResidualReport verify_somos8(const SequenceWindow &tau, const std::array<Rational, 4> &alpha)
{
    ResidualReport rep;
    for (long long n = tau.lo() + 4; n + 4 <= tau.hi(); ++n) {
        Rational rhs(0);
        for (long long j = 0; j <= 3; ++j) {
            rhs += alpha[static_cast<std::size_t>(j)] * tau.at(n + j) * tau.at(n - j);
        }
        rep.residuals.emplace_back(n, tau.at(n + 4) * tau.at(n - 4) - rhs);
    }
    return rep;
}

ResidualReport verify_sixth_order(const BolzaSequence &f, const std::array<Rational, 4> &alpha)
{
    ResidualReport rep;
    for (long long n = f.lo + 3; n + 3 <= f.hi; ++n) {
        bool ok = true;
        for (long long k = -3; k <= 3; ++k) {
            if (!f.has(n + k)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            rep.skipped.push_back(n);
            continue;
        }
        Rational lhs = pow_rational(*f.at(n), 4);
        for (long long k = 1; k <= 3; ++k) {
            lhs *= pow_rational(*f.at(n + k) * *f.at(n - k), 4 - k);
        }
        Rational rhs = alpha[0];
        for (long long j = 1; j <= 3; ++j) {
            Rational t = alpha[static_cast<std::size_t>(j)] * pow_rational(*f.at(n), j);
            for (long long k = 1; k < j; ++k) {
                t *= pow_rational(*f.at(n + k) * *f.at(n - k), j - k);
            }
            rhs += t;
        }
        rep.residuals.emplace_back(n, lhs - rhs);
    }
    return rep;
}

}
