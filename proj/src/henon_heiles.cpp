#include "somos/henon_heiles.hpp"

namespace somos::hh {

CrossCheckReport cross_check_jacobian(const State<Rational> &s, const Params<Rational> &par,
                                      const Rational &lambda, int mu_sign, long long n)
{
    const auto c = spectral_curve(s, par);
    const auto curve = g2::QuinticCurve::validate({c[0], c[1], c[2], c[3], c[4]});
    const auto [U0, V0] = separation_pair(s, par);
    const auto d0 = g2::make_divisor(curve, U0, V0);

    const Rational flam = curve.f_at(lambda);
    const auto mu_abs = rational_sqrt(flam);
    if (!mu_abs || *mu_abs == 0) {
        throw domain_error("cross check requires f(lambda) to be a nonzero rational square");
    }
    const Rational mu = Rational(mu_sign) * *mu_abs;
    // BT with +mu adds (lambda, -mu) - infinity on the Jacobian (the module's
    // fixed orientation).
    const g2::CurvePoint step{lambda, -mu};
    const auto seq = g2::divisor_sequence(curve, d0, step, 0, n);

    CrossCheckReport rep;
    rep.steps = n;
    State<Rational> cur = s;
    for (long long k = 1; k <= n; ++k) {
        cur = bt_step(cur, par, lambda, mu_sign).state;
        const auto [U, V] = separation_pair(cur, par);
        const auto &expect = seq.at(k);
        if (U != expect.U || V != expect.V) {
            rep.first_mismatch = k;
            rep.detail = "step " + std::to_string(k) + ": BT gives (U, V) = (" + U.str() +
                         ", " + V.str() + ") but the divisor sequence gives (" +
                         expect.U.str() + ", " + expect.V.str() + ")";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

}
