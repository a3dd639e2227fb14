#ifndef SOMOS_WEIERSTRASS_HPP
#define SOMOS_WEIERSTRASS_HPP

#include <array>
#include <string>
#include <utility>

#include "somos/numeric.hpp"

namespace somos {

struct EllipticInvariants {
    Complex g2, g3;
};

// A point of Jac(E) = C / (2*omega1*Z + 2*omega3*Z), stored as the reduced
// representative in the cell { 2*s*omega1 + 2*t*omega3 : s, t in [0, 1) }.
struct JacobianPoint {
    Complex z;
};

// Numerical kernel for a fixed elliptic curve y^2 = 4x^3 - g2 x - g3:
// periods and eta constants, theta-series evaluation of sigma / zeta / wp /
// wp', the Abel map via Carlson R_F, and the identity checks the solver
// relies on. Immutable after build(); evaluations are reentrant.
class WeierstrassContext {
public:
    // Periods by AGM on the cubic roots, eta_1 from the theta-constant
    // relation, eta_3 from zeta(omega3); the Legendre residual is recorded
    // as a build-time self-check. Throws domain_error on a degenerate
    // discriminant (the alpha = 0 alternating closed form applies there) and
    // precision_error when |q| is too close to 1 for the series.
    static WeierstrassContext build(const EllipticInvariants &inv, int digits = 25);

    const EllipticInvariants &invariants() const { return m_inv; }
    const std::array<Complex, 3> &roots() const { return m_e; }
    const Complex &omega1() const { return m_omega1; }
    const Complex &omega3() const { return m_omega3; }
    const Complex &eta1() const { return m_eta1; }
    const Complex &eta3() const { return m_eta3; }
    const Complex &nome() const { return m_q; }
    const Complex &legendre_residual() const { return m_legendre_residual; }
    int digits() const { return m_digits; }
    // 10^-(digits) style target used by consumers for their assertions.
    Real tolerance() const { return pow10(-m_digits); }

    Complex sigma(const Complex &z) const;
    // A branch of log sigma(z); sums of these exponentiate to exact products.
    Complex sigma_log(const Complex &z) const;
    Complex zeta(const Complex &z) const;
    Complex wp(const Complex &z) const;
    Complex wp_prime(const Complex &z) const;

    // Lattice reduction: representative with s, t in [-1/2, 1/2) (used
    // internally for series convergence).
    Complex reduce_centered(const Complex &z) const;
    // Representative with s, t in [0, 1) -- the JacobianPoint convention.
    Complex reduce_cell(const Complex &z) const;
    // Distance from z to the nearest lattice point.
    Real lattice_distance(const Complex &z) const;

    // z with wp(z) = x and wp'(z) = y, reduced to the [0,1)^2 cell. The point
    // must satisfy y^2 = 4x^3 - g2 x - g3 to tolerance.
    JacobianPoint abel_map(const Complex &x, const Complex &y) const;

    // alpha = wp'(kappa)^2, beta = wp'(kappa)^2 (wp(2 kappa) - wp(kappa)).
    std::pair<Complex, Complex> alpha_beta_from_kappa(const Complex &kappa) const;

    // sigma(z+kappa) sigma(z-kappa) / (sigma(z)^2 sigma(kappa)^2)
    //   - (wp(kappa) - wp(z));  vanishes identically.
    Complex addition_residual(const Complex &z, const Complex &kappa) const;

    std::string to_json() const;

private:
    WeierstrassContext() = default;

    // (s, t) coordinates of z in the period basis.
    std::pair<Real, Real> lattice_coordinates(const Complex &z) const;
    // theta_j(v) for nome m_q; j in 1..4.
    Complex theta(int j, const Complex &v) const;
    Complex theta1_deriv0() const { return m_theta1p0; }
    // sigma on the centered cell (no quasi-periodic factor needed).
    Complex sigma_primitive(const Complex &z) const;

    EllipticInvariants m_inv;
    std::array<Complex, 3> m_e{};
    Complex m_omega1, m_omega3, m_eta1, m_eta3, m_q;
    Complex m_theta1p0, m_theta1ppp0;
    std::array<Complex, 3> m_theta0{}; // theta_2(0), theta_3(0), theta_4(0)
    Complex m_legendre_residual;
    int m_digits = 25;
    Real m_series_eps; // absolute truncation target for theta tails
};

}

#endif
