#ifndef SOMOS_RECURRENCE_HPP
#define SOMOS_RECURRENCE_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "somos/window.hpp"

namespace somos {

// tau_{n+2} tau_{n-2} = alpha tau_{n+1} tau_{n-1} + beta tau_n^2
struct Somos4Problem {
    Rational alpha, beta;
    std::array<Rational, 4> seeds; // tau_0 .. tau_3
};

// (N+2)-term bilinear recurrence of order 2N+2:
//   tau_{n+N+1} tau_{n-N-1} = sum_{j=0}^{N} alpha_j tau_{n+j} tau_{n-j}
struct SomosKSpec {
    std::size_t N = 1;
    std::vector<Rational> coeffs; // alpha_0 .. alpha_N
    std::vector<Rational> seeds;  // 2N+2 consecutive terms
    long long seed_offset = 0;    // index of seeds[0]
};

// One forward step: given the window covering tau_{n-2}..tau_{n+1}, returns
// tau_{n+2}. Throws vanishing_tau_error when the divisor term tau_{n-2} = 0.
Rational somos4_step(const Somos4Problem &p, const SequenceWindow &w);

// Runs the Somos-4 recurrence over [lo, hi], extending the seeds (placed at
// problem.seeds with indices seed_offset..seed_offset+3) in both directions.
SequenceWindow somos4_run(const Somos4Problem &p, long long lo, long long hi,
                          long long seed_offset = 0);

// Runs the general (N+2)-term recurrence over [lo, hi]; exact and
// bidirectional (the stencil is symmetric under index reversal).
SequenceWindow somos_k_run(const SomosKSpec &spec, long long lo, long long hi);

// Ward's elliptic divisibility sequence from tau_1..tau_4:
// tau_{n+2} tau_{n-2} = tau_2^2 tau_{n+1} tau_{n-1} - tau_1 tau_3 tau_n^2,
// with tau_0 = 0 and the negative side given by antisymmetry. The full
// window is re-verified against the recurrence (stencils through zero force
// tau_1^2 = 1; violations throw validation_error).
SequenceWindow eds_generate(const std::array<Rational, 4> &tau1to4, long long lo, long long hi);

// Residual of Morgan Ward's Hankel relation:
//   tau_{n+m} tau_{n-m} - (tau_m^2 tau_{n+1} tau_{n-1} - tau_{m-1} tau_{m+1} tau_n^2).
// Zero for EDS windows; reported (not asserted) for anything else.
Rational hankel_residual(const SequenceWindow &w, long long m, long long n);

struct DivisibilityReport {
    std::size_t pairs_checked = 0;
    std::vector<std::pair<long long, long long>> violations; // (n, m) with n | m but tau_n !| tau_m
    bool pass() const { return violations.empty(); }
};

// Checks tau_n | tau_m whenever n | m over an integer-valued window indexed
// from 0 upward. Terms must be integers (type error otherwise).
DivisibilityReport divisibility_check(const SequenceWindow &w);

// First integral of the map f_{n+1} = (alpha + beta/f_n) / (f_{n-1} f_n):
//   J = f0 f1 + alpha (1/f0 + 1/f1) + beta/(f0 f1)
Rational qrt_integral(const Rational &f0, const Rational &f1, const Rational &alpha,
                      const Rational &beta);

// Iterates the map over [lo, hi] from f_0, f_1, forward and backward.
SequenceWindow map_iter(const Rational &alpha, const Rational &beta, const Rational &f0,
                        const Rational &f1, long long lo, long long hi);

// f_n = tau_{n+1} tau_{n-1} / tau_n^2 over the interior of the window.
SequenceWindow f_from_tau(const SequenceWindow &tau);

}

#endif
