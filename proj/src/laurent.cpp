#include "somos/laurent.hpp"

namespace somos {

namespace {
const std::vector<std::string> kVars = {"t0", "t1", "t2", "t3", "a", "b"};
}

std::vector<MultiPoly> laurent_iterates(long long n_max, long long cap)
{
    if (n_max > cap) {
        throw cap_exceeded_error("laurent check capped at n = " + std::to_string(cap) +
                                 "; raise the cap explicitly if you really want n = " +
                                 std::to_string(n_max));
    }
    if (n_max < 3) {
        n_max = 3;
    }
    std::vector<MultiPoly> tau;
    for (int i = 0; i < 4; ++i) {
        tau.push_back(MultiPoly::monomial(kVars, kVars[static_cast<std::size_t>(i)], 1,
                                          Rational(1), true));
    }
    const MultiPoly alpha = MultiPoly::monomial(kVars, "a", 1, Rational(1), true);
    const MultiPoly beta = MultiPoly::monomial(kVars, "b", 1, Rational(1), true);
    for (long long n = 4; n <= n_max; ++n) {
        const std::size_t k = static_cast<std::size_t>(n);
        const MultiPoly num =
            alpha * tau[k - 1] * tau[k - 3] + beta * tau[k - 2] * tau[k - 2];
        auto q = MultiPoly::exact_divide(num, tau[k - 4]);
        if (!q) {
            throw validation_error("Laurentness failed at n = " + std::to_string(n) +
                                   " (inexact division)");
        }
        tau.push_back(std::move(*q));
    }
    return tau;
}

LaurentReport laurent_check(long long n_max, long long cap)
{
    const auto tau = laurent_iterates(n_max, cap);
    LaurentReport rep;
    for (long long n = 4; n <= n_max; ++n) {
        const MultiPoly &p = tau[static_cast<std::size_t>(n)];
        LaurentTermReport t;
        t.n = n;
        t.term_count = p.term_count();
        const Exponents m = p.min_exponents();
        // Denominator of p over a common monomial: tau_i^{max(0, -min_i)}.
        t.denominator_exponents.assign(4, 0);
        t.is_laurent = true;
        t.alpha_beta_polynomial = m.size() == 6 && m[4] >= 0 && m[5] >= 0;
        for (std::size_t i = 0; i < 4; ++i) {
            t.denominator_exponents[i] = m[i] < 0 ? -m[i] : 0;
        }
        rep.terms.push_back(std::move(t));
    }
    return rep;
}

}
