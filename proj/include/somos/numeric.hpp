#ifndef SOMOS_NUMERIC_HPP
#define SOMOS_NUMERIC_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "somos/rational.hpp"

namespace somos {

// Working floating-point types for the numerical kernels. 50 decimal digits
// leaves ample headroom over the default 25-digit request; the runtime
// `digits` parameter controls truncation targets and reported tolerances,
// and is capped below the backend precision.
using Real = boost::multiprecision::cpp_bin_float_50;
using Complex = boost::multiprecision::cpp_complex_50;

inline constexpr int kMaxDigits = 40;

const Real &pi_real();

inline Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

inline Real to_real(const Rational &q)
{
    return Real(numer(q).str()) / Real(denom(q).str());
}

inline Complex to_complex(const Rational &q) { return Complex(to_real(q), Real(0)); }

// Carlson symmetric elliptic integral R_F(x, y, z), by duplication with the
// degree-6 tail series. Principal square roots throughout; suitable for the
// complex arguments produced by curve abscissae against the cubic roots.
Complex carlson_rf(Complex x, Complex y, Complex z);

}

#endif
