#ifndef SOMOS_LAURENT_HPP
#define SOMOS_LAURENT_HPP

#include <vector>

#include "somos/multipoly.hpp"

namespace somos {

struct LaurentTermReport {
    long long n = 0;
    std::size_t term_count = 0;
    bool is_laurent = false;        // monomial denominator in tau_0..tau_3
    bool alpha_beta_polynomial = false; // no negative powers of alpha, beta
    Exponents denominator_exponents;    // nonnegative powers of tau_0..tau_3
};

struct LaurentReport {
    std::vector<LaurentTermReport> terms; // n = 4 .. n_max
    bool pass() const
    {
        for (const auto &t : terms) {
            if (!t.is_laurent || !t.alpha_beta_polynomial) {
                return false;
            }
        }
        return true;
    }
};

// Iterates tau_{n+2} tau_{n-2} = alpha tau_{n+1} tau_{n-1} + beta tau_n^2
// symbolically with tau_0..tau_3, alpha, beta as indeterminates, dividing
// exactly at each step. Each tau_n, 4 <= n <= n_max, is certified to be a
// Laurent polynomial in tau_0..tau_3 with polynomial dependence on alpha,
// beta. n_max above the cap is refused (term counts grow superpolynomially).
LaurentReport laurent_check(long long n_max, long long cap = 8);

// The symbolic iterates themselves (tau_0..tau_{n_max}), for reuse in tests.
std::vector<MultiPoly> laurent_iterates(long long n_max, long long cap = 8);

}

#endif
