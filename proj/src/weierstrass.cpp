#include "somos/weierstrass.hpp"

#include <algorithm>
#include <sstream>

#include "somos/errors.hpp"

namespace somos {

namespace {

using std::abs;

Real floor_real(const Real &x) { return boost::multiprecision::floor(x); }

long long floor_ll(const Real &x)
{
    return static_cast<long long>(floor_real(x));
}

// AGM with the optimal square-root branch (|a' - b'| <= |a' + b'| at every
// step), valid for the complex arguments produced by the root differences.
Complex agm(Complex a, Complex b)
{
    const Real eps = pow10(-45);
    for (int i = 0; i < 200; ++i) {
        if (abs(a - b) <= eps * abs(a)) {
            return a;
        }
        const Complex a1 = (a + b) / Real(2);
        Complex b1 = sqrt(a * b);
        if (abs(a1 - b1) > abs(a1 + b1)) {
            b1 = -b1;
        }
        a = a1;
        b = b1;
    }
    throw precision_error("AGM did not converge");
}

// Roots of 4t^3 - g2 t - g3 by Cardano with Newton polishing.
std::array<Complex, 3> cubic_roots(const Complex &g2, const Complex &g3)
{
    const Complex p = -g2 / Real(4), q = -g3 / Real(4);
    std::array<Complex, 3> r;
    const Complex D = q * q / Real(4) + p * p * p / Real(27);
    const Complex sq = sqrt(D);
    Complex u_cubed = -q / Real(2) + sq;
    if (abs(u_cubed) < abs(-q / Real(2) - sq)) {
        u_cubed = -q / Real(2) - sq;
    }
    const Complex omega(Real(-1) / 2, sqrt(Real(3)) / 2);
    if (abs(u_cubed) == 0) {
        // t^3 = -q
        const Complex c = abs(q) == 0 ? Complex(0) : exp(log(-q) / Real(3));
        r = {c, omega * c, conj(omega) * c};
    } else {
        const Complex u = exp(log(u_cubed) / Real(3));
        const Complex v = -p / (Real(3) * u);
        r = {u + v, omega * u + conj(omega) * v, conj(omega) * u + omega * v};
    }
    for (auto &t : r) {
        for (int it = 0; it < 4; ++it) {
            const Complex f = Real(4) * t * t * t - g2 * t - g3;
            const Complex fp = Real(12) * t * t - g2;
            if (abs(fp) == 0) {
                break;
            }
            t -= f / fp;
        }
    }
    return r;
}

}

WeierstrassContext WeierstrassContext::build(const EllipticInvariants &inv, int digits)
{
    if (digits < 5 || digits > kMaxDigits) {
        throw validation_error("working precision must be between 5 and " +
                               std::to_string(kMaxDigits) + " digits");
    }
    WeierstrassContext ctx;
    ctx.m_inv = inv;
    ctx.m_digits = digits;
    ctx.m_series_eps = pow10(-(digits + 12));

    const Complex disc = inv.g2 * inv.g2 * inv.g2 - Real(27) * inv.g3 * inv.g3;
    const Real disc_scale =
        (std::max)({abs(inv.g2 * inv.g2 * inv.g2), abs(Real(27) * inv.g3 * inv.g3), Real(1)});
    if (abs(disc) <= pow10(-digits) * disc_scale) {
        throw domain_error("degenerate discriminant g2^3 - 27 g3^2 = 0: the sigma function "
                           "degenerates (alpha = 0 sequences have the alternating closed form)");
    }

    auto roots = cubic_roots(inv.g2, inv.g3);
    const Real root_scale = (std::max)({abs(roots[0]), abs(roots[1]), abs(roots[2]), Real(1)});
    for (auto &e : roots) {
        if (abs(e.imag()) < pow10(-(digits + 5)) * root_scale) {
            e = Complex(e.real(), Real(0));
        }
    }
    // e1 is the root with the largest real part; for three real roots this
    // is the classical ordering e1 > e2 > e3.
    std::sort(roots.begin(), roots.end(), [](const Complex &a, const Complex &b) {
        if (a.real() != b.real()) {
            return a.real() > b.real();
        }
        return a.imag() > b.imag();
    });

    // Try root orderings until the theta-constant reconstruction reproduces
    // the cubic roots; the sorted order already works for every curve with
    // three real roots, the loop settles the rest.
    const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::string last_failure = "no ordering attempted";
    for (const auto &perm : perms) {
        const Complex e1 = roots[static_cast<std::size_t>(perm[0])];
        const Complex e2 = roots[static_cast<std::size_t>(perm[1])];
        const Complex e3 = roots[static_cast<std::size_t>(perm[2])];
        try {
            const Complex a = sqrt(e1 - e3), b = sqrt(e1 - e2), c = sqrt(e2 - e3);
            Complex om1 = pi_real() / (Real(2) * agm(a, b));
            Complex om3 = Complex(0, 1) * pi_real() / (Real(2) * agm(a, c));
            Complex tau = om3 / om1;
            if (tau.imag() <= 0) {
                om3 = -om3;
                tau = -tau;
            }
            // Keep Re(tau) in (-1, 1] so log(q) recovers i pi tau exactly;
            // omega3 shifts by a multiple of 2 omega1 (same lattice).
            const long long shift = floor_ll((tau.real() + 1) / Real(2));
            if (shift != 0) {
                om3 -= Real(2) * Real(shift) * om1;
                tau = om3 / om1;
            }
            const Complex q = exp(Complex(0, 1) * pi_real() * tau);
            if (abs(q) > Real("0.98")) {
                last_failure = "nome too close to the unit circle";
                continue;
            }
            ctx.m_omega1 = om1;
            ctx.m_omega3 = om3;
            ctx.m_q = q;

            // theta_1'(0) and theta_1'''(0).
            {
                const Complex ipitau = Complex(0, 1) * pi_real() * tau;
                Complex s1(0), s3(0);
                for (int k = 0; k < 300; ++k) {
                    const Real kk = Real(2 * k + 1);
                    const Complex term =
                        exp(ipitau * (Real(k) + Real(1) / 2) * (Real(k) + Real(1) / 2));
                    const Complex sgn = (k % 2 == 0) ? Complex(1) : Complex(-1);
                    s1 += sgn * kk * term;
                    s3 += sgn * kk * kk * kk * term;
                    if (k > 2 && abs(term) < ctx.m_series_eps) {
                        break;
                    }
                }
                ctx.m_theta1p0 = Real(2) * s1;
                ctx.m_theta1ppp0 = -Real(2) * s3;
            }
            ctx.m_theta0 = {ctx.theta(2, Complex(0)), ctx.theta(3, Complex(0)),
                            ctx.theta(4, Complex(0))};
            const Complex t2_4 = pow(ctx.m_theta0[0], 4), t3_4 = pow(ctx.m_theta0[1], 4),
                          t4_4 = pow(ctx.m_theta0[2], 4);
            const Complex fac = pi_real() * pi_real() / (Real(12) * om1 * om1);
            const Complex e1t = fac * (t3_4 + t4_4);
            const Complex e2t = fac * (t2_4 - t4_4);
            const Complex e3t = -fac * (t2_4 + t3_4);
            const Real match_tol = pow10(-(digits + 6)) * root_scale;
            if (abs(e1t - e1) > match_tol || abs(e2t - e2) > match_tol ||
                abs(e3t - e3) > match_tol) {
                last_failure = "theta constants do not reproduce the cubic roots";
                continue;
            }
            ctx.m_e = {e1t, e2t, e3t};

            // eta1 from the theta-constant relation, eta3 independently from
            // zeta(omega3); the Legendre relation then checks the whole
            // construction rather than defining eta3.
            ctx.m_eta1 =
                -pi_real() * pi_real() / (Real(12) * om1) * ctx.m_theta1ppp0 / ctx.m_theta1p0;
            {
                const Complex v3 = pi_real() * om3 / (Real(2) * om1);
                const Complex th1 = ctx.theta(1, v3);
                const Complex ipitau = Complex(0, 1) * pi_real() * tau;
                Complex th1p(0);
                for (int k = 0; k < 300; ++k) {
                    const Real kk = Real(2 * k + 1);
                    const Complex term =
                        exp(ipitau * (Real(k) + Real(1) / 2) * (Real(k) + Real(1) / 2));
                    const Complex sgn = (k % 2 == 0) ? Complex(1) : Complex(-1);
                    th1p += sgn * kk * term * cos(kk * v3);
                    if (k > 2 && abs(term) < ctx.m_series_eps) {
                        break;
                    }
                }
                th1p *= Real(2);
                ctx.m_eta3 =
                    ctx.m_eta1 * om3 / om1 + pi_real() / (Real(2) * om1) * th1p / th1;
            }
            ctx.m_legendre_residual =
                ctx.m_eta1 * om3 - ctx.m_eta3 * om1 - Complex(0, 1) * pi_real() / Real(2);
            if (abs(ctx.m_legendre_residual) > pow10(-(digits + 4))) {
                last_failure = "Legendre relation residual too large";
                continue;
            }
            return ctx;
        } catch (const precision_error &e) {
            last_failure = e.what();
            continue;
        }
    }
    throw precision_error("period construction failed: " + last_failure);
}

Complex WeierstrassContext::theta(int j, const Complex &v) const
{
    const Complex ipitau = log(m_q); // = i pi tau, branch fixed by the tau reduction
    Complex sum(0);
    Real scale(0);
    for (int k = 0; k < 400; ++k) {
        Complex term;
        if (j == 1 || j == 2) {
            const Real kk = Real(2 * k + 1);
            const Complex qf = exp(ipitau * (Real(k) + Real(1) / 2) * (Real(k) + Real(1) / 2));
            if (j == 1) {
                const Complex sgn = (k % 2 == 0) ? Complex(1) : Complex(-1);
                term = Real(2) * sgn * qf * sin(kk * v);
            } else {
                term = Real(2) * qf * cos(kk * v);
            }
        } else {
            if (k == 0) {
                term = Complex(1);
            } else {
                const Complex qf = exp(ipitau * Real(k) * Real(k));
                const Complex sgn = (j == 4 && k % 2 == 1) ? Complex(-1) : Complex(1);
                term = Real(2) * sgn * qf * cos(Real(2 * k) * v);
            }
        }
        sum += term;
        scale = (std::max)(scale, abs(term));
        if (k > 2 && abs(term) < m_series_eps * (std::max)(Real(1), scale)) {
            return sum;
        }
    }
    throw precision_error("theta series did not converge (|q| too close to 1?)");
}

std::pair<Real, Real> WeierstrassContext::lattice_coordinates(const Complex &z) const
{
    // Solve z = 2 s omega1 + 2 t omega3 over the reals.
    const Real a = Real(2) * m_omega1.real(), b = Real(2) * m_omega3.real();
    const Real c = Real(2) * m_omega1.imag(), d = Real(2) * m_omega3.imag();
    const Real det = a * d - b * c;
    const Real s = (z.real() * d - z.imag() * b) / det;
    const Real t = (z.imag() * a - z.real() * c) / det;
    return {s, t};
}

namespace {
// Snap guard: values computed to land exactly on a cell boundary (period
// offsets of paper constants) must reduce deterministically.
const Real &snap_eps()
{
    static const Real eps("1e-12");
    return eps;
}
}

Complex WeierstrassContext::reduce_centered(const Complex &z) const
{
    auto [zr, m, n] = [&] {
        auto [s, t] = lattice_coordinates(z);
        const long long mi = floor_ll(s + Real(1) / 2 + snap_eps());
        const long long ni = floor_ll(t + Real(1) / 2 + snap_eps());
        return std::tuple<Complex, long long, long long>(
            z - Real(2) * Real(mi) * m_omega1 - Real(2) * Real(ni) * m_omega3, mi, ni);
    }();
    (void)m;
    (void)n;
    return zr;
}

Complex WeierstrassContext::reduce_cell(const Complex &z) const
{
    auto [s, t] = lattice_coordinates(z);
    const long long m = floor_ll(s + snap_eps()), n = floor_ll(t + snap_eps());
    return z - Real(2) * Real(m) * m_omega1 - Real(2) * Real(n) * m_omega3;
}

Real WeierstrassContext::lattice_distance(const Complex &z) const
{
    auto [s, t] = lattice_coordinates(z);
    const long long m = floor_ll(s + Real(1) / 2), n = floor_ll(t + Real(1) / 2);
    return abs(z - Real(2) * Real(m) * m_omega1 - Real(2) * Real(n) * m_omega3);
}

Complex WeierstrassContext::sigma_primitive(const Complex &z) const
{
    const Complex v = pi_real() * z / (Real(2) * m_omega1);
    return (Real(2) * m_omega1 / pi_real()) * exp(m_eta1 * z * z / (Real(2) * m_omega1)) *
           theta(1, v) / m_theta1p0;
}

Complex WeierstrassContext::sigma(const Complex &z) const
{
    auto [s, t] = lattice_coordinates(z);
    const long long m = floor_ll(s + Real(1) / 2 + snap_eps());
    const long long n = floor_ll(t + Real(1) / 2 + snap_eps());
    const Complex zr = z - Real(2) * Real(m) * m_omega1 - Real(2) * Real(n) * m_omega3;
    const Complex base = sigma_primitive(zr);
    if (m == 0 && n == 0) {
        return base;
    }
    // sigma(zr + 2m w1 + 2n w3)
    //   = (-1)^{m+n+mn} exp((2m eta1 + 2n eta3)(zr + m w1 + n w3)) sigma(zr)
    const Complex eta = Real(2) * Real(m) * m_eta1 + Real(2) * Real(n) * m_eta3;
    const Complex fac = exp(eta * (zr + Real(m) * m_omega1 + Real(n) * m_omega3));
    const bool flip = ((m + n + m * n) % 2) != 0;
    return (flip ? Real(-1) : Real(1)) * fac * base;
}

Complex WeierstrassContext::sigma_log(const Complex &z) const
{
    auto [s, t] = lattice_coordinates(z);
    const long long m = floor_ll(s + Real(1) / 2 + snap_eps());
    const long long n = floor_ll(t + Real(1) / 2 + snap_eps());
    const Complex zr = z - Real(2) * Real(m) * m_omega1 - Real(2) * Real(n) * m_omega3;
    const Complex base = sigma_primitive(zr);
    if (abs(base) == 0) {
        throw domain_error("sigma vanishes on the lattice; log sigma undefined");
    }
    Complex lg = log(base);
    if (m == 0 && n == 0) {
        return lg;
    }
    const Complex eta = Real(2) * Real(m) * m_eta1 + Real(2) * Real(n) * m_eta3;
    lg += eta * (zr + Real(m) * m_omega1 + Real(n) * m_omega3);
    if (((m + n + m * n) % 2) != 0) {
        lg += Complex(0, 1) * pi_real();
    }
    return lg;
}

Complex WeierstrassContext::zeta(const Complex &z) const
{
    auto [s, t] = lattice_coordinates(z);
    const long long m = floor_ll(s + Real(1) / 2 + snap_eps());
    const long long n = floor_ll(t + Real(1) / 2 + snap_eps());
    const Complex zr = z - Real(2) * Real(m) * m_omega1 - Real(2) * Real(n) * m_omega3;
    if (lattice_distance(zr) < pow10(-m_digits) * abs(m_omega1)) {
        throw domain_error("zeta pole at a lattice point");
    }
    const Complex v = pi_real() * zr / (Real(2) * m_omega1);
    const Complex ipitau = log(m_q);
    Complex th1p(0);
    for (int k = 0; k < 400; ++k) {
        const Real kk = Real(2 * k + 1);
        const Complex qf = exp(ipitau * (Real(k) + Real(1) / 2) * (Real(k) + Real(1) / 2));
        const Complex sgn = (k % 2 == 0) ? Complex(1) : Complex(-1);
        th1p += sgn * kk * qf * cos(kk * v);
        if (k > 2 && abs(qf) < m_series_eps) {
            break;
        }
    }
    th1p *= Real(2);
    const Complex base =
        m_eta1 * zr / m_omega1 + pi_real() / (Real(2) * m_omega1) * th1p / theta(1, v);
    return base + Real(2) * Real(m) * m_eta1 + Real(2) * Real(n) * m_eta3;
}

Complex WeierstrassContext::wp(const Complex &z) const
{
    const Complex zr = reduce_centered(z);
    if (lattice_distance(zr) < pow10(-m_digits) * abs(m_omega1)) {
        throw domain_error("wp pole at a lattice point");
    }
    const Complex v = pi_real() * zr / (Real(2) * m_omega1);
    const Complex t1 = theta(1, v), t2 = theta(2, v);
    const Complex quot = pi_real() * m_theta1p0 * t2 / (Real(2) * m_omega1 * m_theta0[0] * t1);
    return m_e[0] + quot * quot;
}

Complex WeierstrassContext::wp_prime(const Complex &z) const
{
    const Complex zr = reduce_centered(z);
    if (lattice_distance(zr) < pow10(-m_digits) * abs(m_omega1)) {
        throw domain_error("wp' pole at a lattice point");
    }
    // wp'(z) = -sigma(2z) / sigma(z)^4. Value form: the argument is reduced,
    // so no magnitude trouble, and the half-period zeros of sigma(2z) give
    // wp' = 0 without any special casing.
    const Complex s1 = sigma_primitive(zr);
    return -sigma(Real(2) * zr) / pow(s1, 4);
}

JacobianPoint WeierstrassContext::abel_map(const Complex &x, const Complex &y) const
{
    const Complex rhs = Real(4) * x * x * x - m_inv.g2 * x - m_inv.g3;
    const Real scale = (std::max)({abs(y * y), abs(rhs), Real(1)});
    if (abs(y * y - rhs) > pow10(-(m_digits - 5)) * scale) {
        throw validation_error("point is not on the curve y^2 = 4x^3 - g2 x - g3");
    }
    Complex z = carlson_rf(x - m_e[0], x - m_e[1], x - m_e[2]);
    const Real tol = pow10(-(m_digits - 2));
    if (abs(wp(z) - x) > tol * (std::max)(Real(1), abs(x))) {
        throw precision_error("Abel map inversion check failed");
    }
    const Complex w = wp_prime(z);
    if (abs(w - y) > abs(w + y)) {
        z = -z;
    }
    if (abs(y) > tol && abs(wp_prime(z) - y) > tol * (std::max)(Real(1), abs(y))) {
        throw precision_error("Abel map sign resolution failed");
    }
    return JacobianPoint{reduce_cell(z)};
}

std::pair<Complex, Complex> WeierstrassContext::alpha_beta_from_kappa(const Complex &kappa) const
{
    // beta = wp'(k)^2 (wp(2k) - wp(k)) rewritten through the duplication
    // formula as wp''(k)^2/4 - 3 wp(k) wp'(k)^2, which stays finite at the
    // half periods (where alpha = 0).
    const Complex p = wp(kappa), pp = wp_prime(kappa);
    const Complex ppp = Real(6) * p * p - m_inv.g2 / Real(2);
    return {pp * pp, ppp * ppp / Real(4) - Real(3) * p * pp * pp};
}

Complex WeierstrassContext::addition_residual(const Complex &z, const Complex &kappa) const
{
    const Complex lhs = exp(sigma_log(z + kappa) + sigma_log(z - kappa) -
                            Real(2) * sigma_log(z) - Real(2) * sigma_log(kappa));
    return lhs - (wp(kappa) - wp(z));
}

std::string WeierstrassContext::to_json() const
{
    auto cplx = [](const Complex &c) {
        std::ostringstream os;
        os << "{\"re\": \"" << c.real() << "\", \"im\": \"" << c.imag() << "\"}";
        return os.str();
    };
    std::ostringstream os;
    os << "{\"g2\": " << cplx(m_inv.g2) << ", \"g3\": " << cplx(m_inv.g3) << ", \"e\": ["
       << cplx(m_e[0]) << ", " << cplx(m_e[1]) << ", " << cplx(m_e[2]) << "], \"omega1\": "
       << cplx(m_omega1) << ", \"omega3\": " << cplx(m_omega3) << ", \"eta1\": " << cplx(m_eta1)
       << ", \"precision\": " << m_digits << ", \"legendre_residual\": \""
       << abs(m_legendre_residual) << "\"}";
    return os.str();
}

}
