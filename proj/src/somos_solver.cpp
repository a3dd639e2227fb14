#include "somos/somos_solver.hpp"

namespace somos {

Somos4Solution step_exact(const Somos4Problem &p)
{
    if (p.alpha == 0) {
        throw domain_error("alpha = 0: use alternating_closed_form (kappa degenerates to a "
                           "half period)");
    }
    for (int i = 0; i < 4; ++i) {
        if (p.seeds[static_cast<std::size_t>(i)] == 0) {
            throw vanishing_tau_error(i, "seed tau");
        }
    }
    Somos4Solution sol;
    sol.problem = p;
    const Rational &t0 = p.seeds[0], &t1 = p.seeds[1], &t2 = p.seeds[2], &t3 = p.seeds[3];

    // Step 1: backward iterate from the recurrence at n = 1, then f_0, f_1, J.
    sol.tau_minus1 = (p.alpha * t2 * t0 + p.beta * t1 * t1) / t3;
    if (sol.tau_minus1 == 0) {
        throw vanishing_tau_error(-1, "tau");
    }
    sol.f0 = t1 * sol.tau_minus1 / (t0 * t0);
    sol.f1 = t2 * t0 / (t1 * t1);
    sol.J = qrt_integral(sol.f0, sol.f1, p.alpha, p.beta);

    // Step 2: lambda = wp(kappa), mu = sqrt(alpha).
    sol.lambda = (sol.J * sol.J / 4 - p.beta) / (3 * p.alpha);
    if (auto r = rational_sqrt(p.alpha)) {
        sol.mu = {true, *r, to_complex(*r)};
    } else {
        sol.mu = {false, Rational(0), sqrt(to_complex(p.alpha))};
    }

    // Step 3: invariants.
    sol.g2 = 12 * sol.lambda * sol.lambda - 2 * sol.J;
    sol.g3 = 4 * sol.lambda * sol.lambda * sol.lambda - sol.g2 * sol.lambda - p.alpha;
    sol.curve_degenerate = sol.g2 * sol.g2 * sol.g2 == 27 * sol.g3 * sol.g3;

    // Step 4: backward map iterate and the point P0 = (nu, xi).
    sol.f_minus1 = (p.alpha + p.beta / sol.f0) / (sol.f0 * sol.f1);
    sol.nu = sol.lambda - sol.f0;
    const Rational xi_times_mu = sol.f0 * sol.f0 * (sol.f1 - sol.f_minus1);
    if (sol.mu.exact) {
        sol.xi = {true, xi_times_mu / sol.mu.rational_value,
                  to_complex(xi_times_mu / sol.mu.rational_value)};
        // On-curve consistency, exact: xi^2 = 4 nu^3 - g2 nu - g3.
        const Rational lhs = sol.xi.rational_value * sol.xi.rational_value;
        const Rational rhs =
            4 * sol.nu * sol.nu * sol.nu - sol.g2 * sol.nu - sol.g3;
        if (lhs != rhs) {
            throw validation_error("internal: Step 4 consistency xi^2 = 4nu^3 - g2 nu - g3 "
                                   "failed");
        }
    } else {
        sol.xi = {false, Rational(0), to_complex(xi_times_mu) / sol.mu.value};
    }
    return sol;
}

void uniformize(Somos4Solution &sol, int digits)
{
    if (sol.curve_degenerate) {
        throw domain_error("degenerate curve g2^3 = 27 g3^2: the sigma-function "
                           "uniformization does not apply (the sequence is flagged, not solved)");
    }
    auto ctx = std::make_shared<WeierstrassContext>(
        WeierstrassContext::build({to_complex(sol.g2), to_complex(sol.g3)}, digits));
    sol.kappa = ctx->abel_map(to_complex(sol.lambda), sol.mu.value);
    sol.z0 = ctx->abel_map(to_complex(sol.nu), sol.xi.value);
    // Joint sign constraint on the point pair; abel_map already matched wp' to mu
    // and xi individually, so this is a consistency assertion.
    const Complex prod = ctx->wp_prime(sol.kappa.z) * ctx->wp_prime(sol.z0.z);
    const Complex expected = sol.xi.value * sol.mu.value;
    sol.sign_constraint_residual = abs(prod - expected);
    if (sol.sign_constraint_residual >
        pow10(-(digits - 6)) * (std::max)(Real(1), abs(expected))) {
        throw precision_error("sign constraint wp'(kappa) wp'(z0) = xi mu unsatisfiable at "
                              "this precision");
    }
    const Complex sig_z0 = ctx->sigma(sol.z0.z);
    const Complex sig_k = ctx->sigma(sol.kappa.z);
    const Complex sig_z0k = ctx->sigma(sol.z0.z + sol.kappa.z);
    sol.A = to_complex(sol.problem.seeds[0]) / sig_z0;
    sol.B = sig_k * sig_z0 * to_complex(sol.problem.seeds[1]) /
            (sig_z0k * to_complex(sol.problem.seeds[0]));
    sol.ctx = std::move(ctx);
    sol.uniformized = true;
}

ClosedFormValue closed_form(const Somos4Solution &sol, long long n)
{
    if (!sol.uniformized) {
        throw validation_error("closed_form requires a uniformized solution");
    }
    const auto &ctx = *sol.ctx;
    const Complex log_tau = log(sol.A) + Real(n) * log(sol.B) +
                            ctx.sigma_log(sol.z0.z + Real(n) * sol.kappa.z) -
                            Real(n) * Real(n) * ctx.sigma_log(sol.kappa.z);
    ClosedFormValue out;
    out.log10_magnitude = log_tau.real() / log(Real(10));
    out.value = exp(log_tau);
    return out;
}

Rational alternating_closed_form(const Somos4Problem &p, long long n)
{
    if (p.alpha != 0) {
        throw domain_error("alternating closed form applies only to alpha = 0");
    }
    if (p.beta == 0) {
        throw domain_error("alpha = beta = 0 degenerates to a product recurrence");
    }
    for (int i = 0; i < 4; ++i) {
        if (p.seeds[static_cast<std::size_t>(i)] == 0) {
            throw vanishing_tau_error(i, "seed tau");
        }
    }
    const long long k = n >= 0 ? n / 2 : -((-n + 1) / 2); // floor(n/2)
    const Rational beta_pow = pow_rational(p.beta, k * (k - 1) / 2);
    if (n % 2 == 0) {
        return p.seeds[0] * pow_rational(p.seeds[2] / p.seeds[0], k) * beta_pow;
    }
    return p.seeds[1] * pow_rational(p.seeds[3] / p.seeds[1], k) * beta_pow;
}

}
