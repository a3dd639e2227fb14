#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "somos/somos_solver.hpp"

using namespace somos;

namespace {
Rational Q(long long n, long long d = 1) { return Rational(n, d); }
double dabs(const Complex &c) { return static_cast<double>(abs(c)); }

const Somos4Problem &somos4_problem()
{
    static const Somos4Problem p{Q(1), Q(1), {Q(1), Q(1), Q(1), Q(1)}};
    return p;
}

const Somos4Solution &somos4_solution()
{
    static const Somos4Solution sol = [] {
        auto s = step_exact(somos4_problem());
        uniformize(s, 25);
        return s;
    }();
    return sol;
}
}

TEST_CASE("steps 1-4 on the worked example, exact")
{
    const auto sol = step_exact(somos4_problem());
    CHECK(sol.tau_minus1 == Q(2));
    CHECK(sol.f0 == Q(2));
    CHECK(sol.f1 == Q(1));
    CHECK(sol.J == Q(4));
    CHECK(sol.lambda == Q(1));
    CHECK(sol.mu.exact);
    CHECK(sol.mu.rational_value == Q(1));
    CHECK(sol.g2 == Q(4));
    CHECK(sol.g3 == Q(-1));
    CHECK(sol.f_minus1 == Q(3, 4));
    CHECK(sol.nu == Q(-1));
    CHECK(sol.xi.exact);
    CHECK(sol.xi.rational_value == Q(1));
    CHECK(!sol.curve_degenerate);
    // xi^2 = 4 nu^3 - g2 nu - g3: 1 = -4 + 4 + 1
    CHECK(sol.xi.rational_value * sol.xi.rational_value ==
          4 * sol.nu * sol.nu * sol.nu - sol.g2 * sol.nu - sol.g3);
}

TEST_CASE("steps 1-4 are gauge invariant")
{
    const auto base = step_exact(somos4_problem());
    // seeds scaled by A B^n with A = 3, B = -2
    Somos4Problem scaled = somos4_problem();
    const Rational A = Q(3), B = Q(-2);
    for (int n = 0; n < 4; ++n) {
        scaled.seeds[static_cast<std::size_t>(n)] =
            A * pow_rational(B, n) * somos4_problem().seeds[static_cast<std::size_t>(n)];
    }
    const auto sol = step_exact(scaled);
    CHECK(sol.J == base.J);
    CHECK(sol.lambda == base.lambda);
    CHECK(sol.g2 == base.g2);
    CHECK(sol.g3 == base.g3);
    CHECK(sol.nu == base.nu);
    CHECK(sol.xi.rational_value == base.xi.rational_value);
    CHECK(sol.f0 == base.f0);
    CHECK(sol.f1 == base.f1);
    CHECK(sol.f_minus1 == base.f_minus1);
}

TEST_CASE("alpha = 0 and zero seeds are rejected by step_exact")
{
    CHECK_THROWS_AS(step_exact({Q(0), Q(1), {Q(1), Q(1), Q(1), Q(1)}}), domain_error);
    CHECK_THROWS_AS(step_exact({Q(1), Q(1), {Q(1), Q(0), Q(1), Q(1)}}), vanishing_tau_error);
}

TEST_CASE("step 5 reproduces the reference constants")
{
    const auto &sol = somos4_solution();
    const auto &ctx = *sol.ctx;
    SUBCASE("kappa and z0 representatives")
    {
        CHECK(dabs(sol.kappa.z - Real(2) * ctx.omega1() -
                   Complex(Real("-1.134273216"))) < 5e-9);
        const Complex z0_expect(Real("0.204680500"), Real("-1.225694691"));
        CHECK(ctx.lattice_distance(sol.z0.z - Real(2) * ctx.omega3() - z0_expect) <
              Real("5e-9"));
    }
    SUBCASE("A and B")
    {
        CHECK(dabs(sol.A - Complex(Real("0.112724016"), Real("-0.824911687"))) < 5e-9);
        CHECK(dabs(sol.B - Complex(Real("0.215971963"), Real("0.616028193"))) < 5e-9);
    }
    SUBCASE("z0 + n kappa = (2n - 3) zhat0 on the lattice")
    {
        const auto zhat = ctx.abel_map(Complex(0), Complex(1));
        CHECK(dabs(zhat.z - ctx.omega3() - Complex(Real("0.929592715"))) < 5e-9);
        for (long long n = -2; n <= 5; ++n) {
            const Complex lhs = sol.z0.z + Real(n) * sol.kappa.z;
            const Complex rhs = Real(2 * n - 3) * zhat.z;
            CHECK(ctx.lattice_distance(lhs - rhs) < Real("1e-12"));
        }
    }
    SUBCASE("sign constraint residual is tiny")
    {
        CHECK(static_cast<double>(sol.sign_constraint_residual) < 1e-20);
    }
}

TEST_CASE("closed form reproduces the exact sequence")
{
    const auto &sol = somos4_solution();
    const auto w = somos4_run(somos4_problem(), -5, 15);
    for (long long n = -5; n <= 15; ++n) {
        const auto v = closed_form(sol, n);
        const double expect = static_cast<double>(to_real(w.at(n)));
        CHECK(dabs(v.value - Complex(Real(expect))) < 1e-6 * std::abs(expect));
    }
    // paper: tau_{-1} = 2
    CHECK(dabs(closed_form(sol, -1).value - Complex(2)) < 2e-6);
    // recurrence residual from closed-form values alone at n = 10..15
    for (long long n = 10; n <= 15; ++n) {
        const Complex lhs = closed_form(sol, n + 2).value * closed_form(sol, n - 2).value;
        const Complex rhs = closed_form(sol, n + 1).value * closed_form(sol, n - 1).value +
                            closed_form(sol, n).value * closed_form(sol, n).value;
        CHECK(dabs(lhs - rhs) < 1e-6 * dabs(lhs));
    }
}

TEST_CASE("flipping both signs of (kappa, z0) leaves tau_n unchanged")
{
    const auto &sol = somos4_solution();
    const auto &ctx = *sol.ctx;
    Somos4Solution flipped = sol;
    flipped.kappa.z = ctx.reduce_cell(-sol.kappa.z);
    flipped.z0.z = ctx.reduce_cell(-sol.z0.z);
    const Complex sig_z0 = ctx.sigma(flipped.z0.z);
    const Complex sig_k = ctx.sigma(flipped.kappa.z);
    const Complex sig_z0k = ctx.sigma(flipped.z0.z + flipped.kappa.z);
    flipped.A = Complex(1) / sig_z0;
    flipped.B = sig_k * sig_z0 / sig_z0k;
    for (long long n = -3; n <= 8; ++n) {
        const Complex a = closed_form(sol, n).value;
        const Complex b = closed_form(flipped, n).value;
        CHECK(dabs(a - b) < 1e-10 * (dabs(a) + 1));
    }
}

TEST_CASE("random problem round trip (non-square alpha)")
{
    // alpha = 3 is not a rational square, so mu and xi go numeric.
    const Somos4Problem p{Q(3), Q(2), {Q(1), Q(1), Q(2), Q(1)}};
    auto sol = step_exact(p);
    CHECK(!sol.mu.exact);
    uniformize(sol, 25);
    const auto &ctx = *sol.ctx;
    SUBCASE("alpha, beta recovered from kappa")
    {
        const auto [a, b] = ctx.alpha_beta_from_kappa(sol.kappa.z);
        CHECK(dabs(a - Complex(3)) < 1e-8);
        CHECK(dabs(b - Complex(2)) < 1e-8);
    }
    SUBCASE("wp(z0 + n kappa) = lambda - f_n")
    {
        const auto f = map_iter(p.alpha, p.beta, sol.f0, sol.f1, -10, 10);
        for (long long n = -10; n <= 10; ++n) {
            const Complex lhs = ctx.wp(sol.z0.z + Real(n) * sol.kappa.z);
            const Complex rhs = to_complex(sol.lambda - f.at(n));
            CHECK(dabs(lhs - rhs) < 1e-8 * (dabs(rhs) + 1));
        }
    }
    SUBCASE("closed form matches the exact recurrence")
    {
        const auto w = somos4_run(p, -15, 15);
        for (long long n = -15; n <= 15; ++n) {
            const auto v = closed_form(sol, n);
            const Real expect = to_real(w.at(n));
            CHECK(dabs(v.value - Complex(expect)) <
                  1e-6 * static_cast<double>(abs(expect)));
        }
    }
}

TEST_CASE("degenerate discriminant is flagged and uniformize refuses")
{
    const Somos4Problem p{Q(-16), Q(48), {Q(1), Q(1), Q(2), Q(8)}};
    auto sol = step_exact(p);
    CHECK(sol.curve_degenerate);
    CHECK(sol.g2 * sol.g2 * sol.g2 == 27 * sol.g3 * sol.g3);
    CHECK_THROWS_AS(uniformize(sol, 25), domain_error);
}

TEST_CASE("alternating closed form (alpha = 0)")
{
    SUBCASE("beta = 1, unit seeds: constant 1")
    {
        const Somos4Problem p{Q(0), Q(1), {Q(1), Q(1), Q(1), Q(1)}};
        for (long long n = -10; n <= 10; ++n) {
            CHECK(alternating_closed_form(p, n) == Q(1));
        }
    }
    SUBCASE("beta = 2: tau_4 = tau_5 = 2")
    {
        const Somos4Problem p{Q(0), Q(2), {Q(1), Q(1), Q(1), Q(1)}};
        CHECK(alternating_closed_form(p, 4) == Q(2));
        CHECK(alternating_closed_form(p, 5) == Q(2));
    }
    SUBCASE("satisfies the recurrence exactly for |n| <= 20")
    {
        const Somos4Problem p{Q(0), Q(-3, 2), {Q(2), Q(1), Q(-1), Q(3)}};
        for (long long n = -18; n <= 18; ++n) {
            const Rational lhs =
                alternating_closed_form(p, n + 2) * alternating_closed_form(p, n - 2);
            const Rational rhs = p.beta * alternating_closed_form(p, n) *
                                 alternating_closed_form(p, n);
            CHECK(lhs == rhs);
        }
        // and matches the iterated recurrence
        const auto w = somos4_run(p, -10, 10);
        for (long long n = -10; n <= 10; ++n) {
            CHECK(alternating_closed_form(p, n) == w.at(n));
        }
    }
    SUBCASE("beta = 0 is the degenerate product recurrence")
    {
        const Somos4Problem p{Q(0), Q(0), {Q(1), Q(1), Q(1), Q(1)}};
        CHECK_THROWS_AS(alternating_closed_form(p, 3), domain_error);
    }
}
