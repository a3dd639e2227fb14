#include "somos/recurrence.hpp"

namespace somos {

Rational somos4_step(const Somos4Problem &p, const SequenceWindow &w)
{
    const long long n = w.hi() - 1; // center of the stencil
    const Rational &div = w.at(n - 2);
    if (div == 0) {
        throw vanishing_tau_error(n - 2, "tau");
    }
    return (p.alpha * w.at(n + 1) * w.at(n - 1) + p.beta * w.at(n) * w.at(n)) / div;
}

namespace {

// Shared bidirectional driver for symmetric bilinear stencils. `step`
// receives the window and the center index n and must return the term at
// n + half_order; backward extension uses the mirrored stencil.
template <typename Step>
SequenceWindow run_bidirectional(SequenceWindow w, long long lo, long long hi, long half_order,
                                 Step step)
{
    if (lo > hi) {
        throw validation_error("empty range");
    }
    while (w.hi() < hi) {
        const long long n = w.hi() - half_order + 1;
        w.terms.push_back(step(w, n, +1));
    }
    while (w.lo() > lo) {
        const long long n = w.lo() + half_order - 1;
        w.terms.insert(w.terms.begin(), step(w, n, -1));
        --w.offset;
    }
    // Trim to the requested range.
    SequenceWindow out;
    out.offset = lo;
    for (long long n = lo; n <= hi; ++n) {
        out.terms.push_back(w.at(n));
    }
    return out;
}

}

SequenceWindow somos4_run(const Somos4Problem &p, long long lo, long long hi,
                          long long seed_offset)
{
    SequenceWindow w;
    w.offset = seed_offset;
    w.terms.assign(p.seeds.begin(), p.seeds.end());
    auto step = [&p](const SequenceWindow &win, long long n, int dir) -> Rational {
        const Rational &div = win.at(n - 2 * dir);
        if (div == 0) {
            throw vanishing_tau_error(n - 2 * dir, "tau");
        }
        return (p.alpha * win.at(n + dir) * win.at(n - dir) + p.beta * win.at(n) * win.at(n)) /
               div;
    };
    return run_bidirectional(std::move(w), lo, hi, 2, step);
}

SequenceWindow somos_k_run(const SomosKSpec &spec, long long lo, long long hi)
{
    if (spec.N < 1) {
        throw validation_error("SomosKSpec requires N >= 1");
    }
    if (spec.coeffs.size() != spec.N + 1) {
        throw validation_error("coefficient list must have length N+1");
    }
    if (spec.seeds.size() != 2 * spec.N + 2) {
        throw validation_error("seed list must have length 2N+2");
    }
    SequenceWindow w;
    w.offset = spec.seed_offset;
    w.terms = spec.seeds;
    const long half = static_cast<long>(spec.N) + 1;
    auto step = [&spec, half](const SequenceWindow &win, long long n, int dir) -> Rational {
        const Rational &div = win.at(n - half * dir);
        if (div == 0) {
            throw vanishing_tau_error(n - half * dir, "tau");
        }
        Rational s(0);
        for (std::size_t j = 0; j <= spec.N; ++j) {
            s += spec.coeffs[j] * win.at(n + static_cast<long long>(j)) *
                 win.at(n - static_cast<long long>(j));
        }
        return s / div;
    };
    return run_bidirectional(std::move(w), lo, hi, half, step);
}

SequenceWindow eds_generate(const std::array<Rational, 4> &tau1to4, long long lo, long long hi)
{
    if (tau1to4[0] == 0) {
        throw validation_error("eds_generate requires tau_1 != 0");
    }
    const Rational alpha = tau1to4[1] * tau1to4[1];          // tau_2^2
    const Rational beta = -tau1to4[0] * tau1to4[2];          // -tau_1 tau_3
    const long long hi_pos = std::max<long long>(hi, -lo);
    // Positive side by the recurrence, negative side by antisymmetry.
    // pos[k-1] stores tau_k.
    std::vector<Rational> pos(tau1to4.begin(), tau1to4.end()); // tau_1..tau_4
    for (long long k = 5; k <= hi_pos; ++k) {
        const Rational &div = pos[static_cast<std::size_t>(k - 5)]; // tau_{k-4}
        if (div == 0) {
            throw vanishing_tau_error(k - 4, "tau");
        }
        const Rational t = alpha * pos[static_cast<std::size_t>(k - 2)] *
                               pos[static_cast<std::size_t>(k - 4)] +
                           beta * pos[static_cast<std::size_t>(k - 3)] *
                               pos[static_cast<std::size_t>(k - 3)];
        pos.push_back(t / div);
    }
    SequenceWindow w;
    w.offset = lo;
    w.terms.resize(static_cast<std::size_t>(hi - lo + 1));
    for (long long n = lo; n <= hi; ++n) {
        Rational v;
        if (n == 0) {
            v = 0;
        } else if (n > 0) {
            v = pos[static_cast<std::size_t>(n - 1)];
        } else {
            v = -pos[static_cast<std::size_t>(-n - 1)];
        }
        w.at(n) = v;
    }
    // Re-verify every stencil n-2..n+2 inside the window; the antisymmetric
    // extension satisfies the recurrence iff tau_1^2 = 1 (Ward's
    // normalization), so this is a genuine check, not a formality.
    for (long long n = lo + 2; n + 2 <= hi; ++n) {
        const Rational lhs = w.at(n + 2) * w.at(n - 2);
        const Rational rhs = alpha * w.at(n + 1) * w.at(n - 1) + beta * w.at(n) * w.at(n);
        if (lhs != rhs) {
            throw validation_error(
                "antisymmetric extension violates the EDS recurrence at n = " + std::to_string(n) +
                " (Ward's form requires tau_1^2 = 1)");
        }
    }
    return w;
}

Rational hankel_residual(const SequenceWindow &w, long long m, long long n)
{
    // Touches indices n+-m, n+-1, m+-1, n, m.
    const Rational lhs = w.at(n + m) * w.at(n - m);
    const Rational rhs =
        w.at(m) * w.at(m) * w.at(n + 1) * w.at(n - 1) - w.at(m - 1) * w.at(m + 1) * w.at(n) * w.at(n);
    return lhs - rhs;
}

DivisibilityReport divisibility_check(const SequenceWindow &w)
{
    if (w.lo() != 0) {
        throw validation_error("divisibility check expects a window indexed from 0");
    }
    for (long long n = w.lo(); n <= w.hi(); ++n) {
        if (!is_integer(w.at(n))) {
            throw validation_error("divisibility check requires integer terms (index " +
                                   std::to_string(n) + ")");
        }
    }
    DivisibilityReport rep;
    for (long long n = 1; n <= w.hi(); ++n) {
        for (long long m = n; m <= w.hi(); m += n) {
            ++rep.pairs_checked;
            if (!divides(w.at(n), w.at(m))) {
                rep.violations.emplace_back(n, m);
            }
        }
    }
    return rep;
}

Rational qrt_integral(const Rational &f0, const Rational &f1, const Rational &alpha,
                      const Rational &beta)
{
    if (f0 == 0 || f1 == 0) {
        throw domain_error("qrt_integral requires nonzero arguments");
    }
    return f0 * f1 + alpha * (Rational(1) / f0 + Rational(1) / f1) + beta / (f0 * f1);
}

SequenceWindow map_iter(const Rational &alpha, const Rational &beta, const Rational &f0,
                        const Rational &f1, long long lo, long long hi)
{
    SequenceWindow w;
    w.offset = 0;
    w.terms = {f0, f1};
    auto step = [&](const SequenceWindow &win, long long n, int dir) -> Rational {
        // Forward: f_{n+1} = (alpha + beta/f_n) / (f_{n-1} f_n); the map is
        // reversible, with the backward branch obtained by swapping roles.
        const Rational &fn = win.at(n);
        const Rational &other = win.at(n - dir);
        if (fn == 0 || other == 0) {
            throw domain_error("map_iter hit a zero f at index " +
                               std::to_string(fn == 0 ? n : n - dir));
        }
        return (alpha + beta / fn) / (other * fn);
    };
    // half_order 1: forward step computes index n+1 from (n-1, n); backward
    // computes n-1 from (n, n+1).
    return run_bidirectional(std::move(w), lo, hi, 1, step);
}

SequenceWindow f_from_tau(const SequenceWindow &tau)
{
    if (tau.terms.size() < 3) {
        throw validation_error("f_from_tau needs at least three tau terms");
    }
    SequenceWindow f;
    f.offset = tau.lo() + 1;
    for (long long n = tau.lo() + 1; n + 1 <= tau.hi(); ++n) {
        if (tau.at(n) == 0) {
            throw vanishing_tau_error(n, "tau");
        }
        f.terms.push_back(tau.at(n + 1) * tau.at(n - 1) / (tau.at(n) * tau.at(n)));
    }
    return f;
}

}
