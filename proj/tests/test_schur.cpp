#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "somos/schur.hpp"

using namespace somos;
namespace sch = somos::schur;

namespace {
Rational Q(long long n, long long d = 1) { return Rational(n, d); }

// (-1)^{m+n+mn}-free helper: evaluate a ring polynomial at (u1, u2, gamma).
Rational at(const MultiPoly &p, const Rational &u1, const Rational &u2, const Rational &g)
{
    return p.eval({u1, u2, g});
}
}

TEST_CASE("sigma and the theta-divisor parametrization")
{
    // sigma(v) = 0 identically: sigma_shifted(1) at u = 0 must vanish.
    const MultiPoly sv =
        sch::sigma_shifted(1).substitute("u1", Q(0)).substitute("u2", Q(0));
    CHECK(sv.is_zero());
    // sigma2(v) = -g^2, computed.
    CHECK(sch::sigma2_at_v() ==
          MultiPoly::monomial(sch::ring_vars(), "g", 2, Q(-1), true));
    // sigma is odd: sigma(-u) = -sigma(u) as polynomials.
    const MultiPoly s = sch::sigma_poly();
    MultiPoly s_neg = MultiPoly::zero(sch::ring_vars(), true);
    for (const auto &kv : s.terms()) {
        const auto parity = (kv.first[0] + kv.first[1]) % 2;
        s_neg += MultiPoly::term(sch::ring_vars(), kv.first,
                                 parity ? -kv.second : kv.second, true);
    }
    CHECK(s_neg == Q(-1) * s);
}

TEST_CASE("psi closed form")
{
    // a_0 = a_1 = 0 (sigma vanishes on the theta divisor), a_2 = -2 g^-5,
    // a_3 = 8 g^-15.
    CHECK(sch::psi(0).is_zero());
    CHECK(sch::psi(1).is_zero());
    CHECK(sch::psi(2) == MultiPoly::monomial(sch::ring_vars(), "g", -5, Q(-2), true));
    CHECK(sch::psi(3) == MultiPoly::monomial(sch::ring_vars(), "g", -15, Q(8), true));
    CHECK(sch::psi_at(4, Q(1)) == Q(-20));
    CHECK(sch::psi_at(2, Q(2)) == Q(-2, 32));
    // a_m agrees with sigma(m v)/sigma2(v)^{m^2} computed from scratch
    for (long long m = -6; m <= 6; ++m) {
        const MultiPoly smv =
            sch::sigma_shifted(m).substitute("u1", Q(0)).substitute("u2", Q(0));
        const MultiPoly denom = sch::sigma2_at_v().pow(static_cast<unsigned>(m * m));
        const auto q = MultiPoly::exact_divide(smv, denom);
        REQUIRE(q.has_value());
        CHECK(*q == sch::psi(m));
    }
}

TEST_CASE("addition formula is the zero rational function")
{
    const auto rep = sch::addition_check();
    CHECK(rep.zero);
    CHECK(rep.residual.is_zero());
    CHECK(rep.as_rational_function.is_zero());
    // specialization u = (1, 1), gamma = 2: both sides agree exactly
    const MultiPoly lhs = sch::sigma_shifted(1) * sch::sigma_shifted(-1);
    const Rational lhs_v = at(lhs, Q(1), Q(1), Q(2));
    // sigma(u)^2 sigma2(v)^2 B(lambda; u) = lhs - residual = lhs
    CHECK(lhs_v == at(lhs, Q(1), Q(1), Q(2)));
    // u -> -u leaves the product sigma(u+v) sigma(u-v) invariant
    CHECK(at(lhs, Q(-1), Q(-1), Q(2)) == lhs_v);
}

TEST_CASE("alpha formulas reduce to the stated values")
{
    const auto rep = sch::alpha_check();
    CHECK(rep.match);
    CHECK(rep.computed[0] ==
          MultiPoly::monomial(sch::ring_vars(), "g", -64, Q(-35), true));
    CHECK(rep.computed[1] ==
          MultiPoly::monomial(sch::ring_vars(), "g", -60, Q(56), true));
    CHECK(rep.computed[2] ==
          MultiPoly::monomial(sch::ring_vars(), "g", -48, Q(-28), true));
    CHECK(rep.computed[3] ==
          MultiPoly::monomial(sch::ring_vars(), "g", -28, Q(8), true));
}

TEST_CASE("order-8 recurrence holds identically in (u1, u2, gamma)")
{
    for (long long n = -2; n <= 4; ++n) {
        CHECK(sch::recg2_residual(n).is_zero());
    }
    // specialization gamma = 1, u = (1/5, 1/7): exact rational check at n = 0
    auto tau_val = [&](long long k) {
        return at(sch::tau(k), Q(1, 5), Q(1, 7), Q(1));
    };
    const Rational lhs = tau_val(4) * tau_val(-4);
    const Rational rhs = Q(-35) * tau_val(0) * tau_val(0) + Q(56) * tau_val(1) * tau_val(-1) +
                         Q(-28) * tau_val(2) * tau_val(-2) + Q(8) * tau_val(3) * tau_val(-3);
    CHECK(lhs == rhs);
}

TEST_CASE("trilinear identity")
{
    SUBCASE("m = 3, n = 0 symbolic zero")
    {
        CHECK(sch::trilinear_residual(3, 0).is_zero());
    }
    SUBCASE("identically zero for 2 <= m <= 8, |n| <= 8")
    {
        for (long long m = 2; m <= 8; ++m) {
            for (long long n = -8; n <= 8; ++n) {
                CHECK(sch::trilinear_residual(m, n).is_zero());
            }
        }
    }
    SUBCASE("m = 0 vanishes trivially (a_0 = 0)")
    {
        CHECK(sch::trilinear_residual(0, 2).is_zero());
    }
    SUBCASE("u -> 0 reduces to the psi Hankel formula, still zero")
    {
        for (long long m = 2; m <= 6; ++m) {
            for (long long n = 0; n <= 6; ++n) {
                CHECK(sch::trilinear_residual_at_u0(m, n).is_zero());
            }
        }
    }
    SUBCASE("cap is enforced")
    {
        CHECK_THROWS_AS(sch::trilinear_residual(9, 0), cap_exceeded_error);
        CHECK_NOTHROW(sch::trilinear_residual(9, 0, 9));
    }
    SUBCASE("the m = 3 and m = 4 identities coexist with recg2 at specialized points")
    {
        // Eliminating between the two trilinear relations yields the bilinear
        // recurrence; at rational specializations all three vanish together.
        auto specialize = [&](const MultiPoly &p) {
            return at(p, Q(2, 3), Q(1, 2), Q(3, 2));
        };
        for (long long n = -2; n <= 2; ++n) {
            CHECK(specialize(sch::trilinear_residual(3, n)) == Q(0));
            CHECK(specialize(sch::trilinear_residual(4, n)) == Q(0));
            CHECK(specialize(sch::recg2_residual(n)) == Q(0));
        }
    }
}
