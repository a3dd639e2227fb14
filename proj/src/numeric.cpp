#include "somos/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include "somos/errors.hpp"

namespace somos {

const Real &pi_real()
{
    static const Real pi = boost::math::constants::pi<Real>();
    return pi;
}

Complex carlson_rf(Complex x, Complex y, Complex z)
{
    using std::abs;
    if (abs(x) == 0 && abs(y) == 0 && abs(z) == 0) {
        throw domain_error("carlson_rf undefined at (0, 0, 0)");
    }
    const Real tol("1e-10"); // tail series then contributes O(tol^6) ~ 1e-60
    Complex mu;
    for (int iter = 0; iter < 300; ++iter) {
        mu = (x + y + z) / Real(3);
        const Real scale = abs(mu);
        if (scale > Real(0)) {
            const Real err = (std::max)({abs(x - mu), abs(y - mu), abs(z - mu)});
            if (err < tol * scale) {
                break;
            }
        }
        const Complex sx = sqrt(x), sy = sqrt(y), sz = sqrt(z);
        const Complex lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / Real(4);
        y = (y + lam) / Real(4);
        z = (z + lam) / Real(4);
        if (iter == 299) {
            throw precision_error("carlson_rf did not converge");
        }
    }
    const Complex X = (mu - x) / mu, Y = (mu - y) / mu, Z = -(X + Y);
    const Complex E2 = X * Y - Z * Z, E3 = X * Y * Z;
    const Complex series = Complex(1) - E2 / Real(10) + E3 / Real(14) + E2 * E2 / Real(24) -
                           Real(3) * E2 * E3 / Real(44);
    return series / sqrt(mu);
}

}
