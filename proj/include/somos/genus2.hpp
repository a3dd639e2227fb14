#ifndef SOMOS_GENUS2_HPP
#define SOMOS_GENUS2_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "somos/unipoly.hpp"
#include "somos/window.hpp"

namespace somos::g2 {

using RPoly = Poly<Rational>;

// y^2 = f(x) = 4x^5 + c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, nonsingular.
struct QuinticCurve {
    std::array<Rational, 5> c{}; // c0 .. c4

    RPoly f() const;
    Rational f_at(const Rational &x) const { return f().eval(x); }

    // Checks gcd(f, f') = 1; a singular curve raises validation_error listing
    // the repeated-root factor (and its rational roots where findable).
    static QuinticCurve validate(const std::array<Rational, 5> &coeffs);

    // Utility shift x -> x + s (removes c4 with s = -c4/20).
    QuinticCurve shifted(const Rational &s) const;
};

struct CurvePoint {
    Rational x, y;
};

// Reduced Mumford pair: U monic with deg U <= 2, deg V < deg U, and
// V^2 = f mod U exactly. deg U = 0 (U = 1, V = 0) is the group identity;
// deg U = 1 encodes a theta-divisor element.
struct MumfordDivisor {
    RPoly U, V;

    long degree() const { return U.degree(); }
    bool is_identity() const { return U.degree() == 0; }
    bool operator==(const MumfordDivisor &o) const { return U == o.U && V == o.V; }
    bool operator!=(const MumfordDivisor &o) const { return !(*this == o); }
};

MumfordDivisor identity_divisor();

// Validates the Mumford invariants against the curve.
MumfordDivisor make_divisor(const QuinticCurve &curve, RPoly U, RPoly V);

MumfordDivisor point_divisor(const QuinticCurve &curve, const CurvePoint &p);

// Hyperelliptic involution: negate V.
MumfordDivisor divisor_negate(const MumfordDivisor &d);

// Cantor composition + reduction. Handles identity, inverse pairs, shared
// support, doubling and degree-1 operands uniformly.
MumfordDivisor cantor_add(const QuinticCurve &curve, const MumfordDivisor &a,
                          const MumfordDivisor &b);

struct DivisorSequence {
    long long lo = 0, hi = -1;
    std::vector<MumfordDivisor> divisors;

    const MumfordDivisor &at(long long n) const;
    // Indices with deg U < 2 (the orbit touched the theta divisor).
    std::vector<long long> theta_crossings() const;
};

// D_n = D_0 + n (P - infinity), exact, both directions. Theta-divisor
// crossings are data, not failures.
DivisorSequence divisor_sequence(const QuinticCurve &curve, const MumfordDivisor &d0,
                                 const CurvePoint &p, long long lo, long long hi);

// f_n = U_n(lambda), lambda = x(P); gaps at theta-divisor crossings.
struct BolzaSequence {
    Rational lambda;
    long long lo = 0, hi = -1;
    std::vector<std::optional<Rational>> f;

    const std::optional<Rational> &at(long long n) const;
    bool has(long long n) const;
    std::vector<long long> gaps() const;
};

// lambda_point must be the step point P (the Bolza argument is bound to the
// Abelian image of the step); its x-coordinate is the evaluation abscissa.
BolzaSequence bolza_seq(const QuinticCurve &curve, const MumfordDivisor &d0,
                        const CurvePoint &p, const CurvePoint &lambda_point, long long lo,
                        long long hi);

// V(x0) at a root x0 of U. The module convention is V = +d(Bolza)/du2 along
// the orbit (the displayed -d2 convention differs by the global hyperelliptic
// involution; the orientation is pinned by the Henon-Heiles cross-check).
Rational y_from_divisor(const QuinticCurve &curve, const MumfordDivisor &d, const Rational &x0);

// tau over [lo, hi] from f via f_n = tau_{n+1} tau_{n-1} / tau_n^2, gauge
// tau_{n0} = tau_{n0+1} = 1. A gap inside the needed stencil raises
// vanishing_tau_error naming the theta-divisor index.
SequenceWindow tau_from_f(const BolzaSequence &f, long long gauge_n0, long long lo,
                          long long hi);

// Exact 4x4 solve of tau_{n+4} tau_{n-4} = sum_j alpha_j tau_{n+j} tau_{n-j}
// from the first four usable rows (all nine stencil terms nonzero).
std::array<Rational, 4> fit_somos8(const SequenceWindow &tau);

struct ResidualReport {
    std::vector<std::pair<long long, Rational>> residuals;
    std::vector<long long> skipped;
    bool all_zero() const
    {
        for (const auto &[n, r] : residuals) {
            if (r != 0) {
                return false;
            }
        }
        return true;
    }
};

ResidualReport verify_somos8(const SequenceWindow &tau, const std::array<Rational, 4> &alpha);

// Sixth-order equation on f directly:
// f_n^4 prod_{k=1}^3 (f_{n+k} f_{n-k})^{4-k}
//   = alpha_0 + sum_{j=1}^3 alpha_j f_n^j prod_{k=1}^{j-1} (f_{n+k} f_{n-k})^{j-k}.
ResidualReport verify_sixth_order(const BolzaSequence &f, const std::array<Rational, 4> &alpha);

}

#endif
