#include "somos/rational.hpp"

#include <cctype>

namespace somos {

Rational parse_rational(const std::string &s)
{
    if (s.empty()) {
        throw validation_error("empty rational literal");
    }
    auto check_digits = [](const std::string &t) {
        if (t.empty()) {
            return false;
        }
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) {
            return false;
        }
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
                return false;
            }
        }
        return true;
    };
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!check_digits(s)) {
                throw validation_error("bad rational literal: " + s);
            }
            return Rational(Integer(s));
        }
        const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_digits(num) || !check_digits(den)) {
            throw validation_error("bad rational literal: " + s);
        }
        Integer d(den);
        if (d == 0) {
            throw validation_error("zero denominator in rational literal: " + s);
        }
        return Rational(Integer(num), d);
    } catch (const validation_error &) {
        throw;
    } catch (const std::exception &) {
        throw validation_error("bad rational literal: " + s);
    }
}

std::optional<Rational> rational_sqrt(const Rational &q)
{
    if (q < 0) {
        return std::nullopt;
    }
    const Integer n = numer(q), d = denom(q);
    Integer rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) {
        return std::nullopt;
    }
    return Rational(rn, rd);
}

bool divides(const Rational &a, const Rational &b)
{
    if (!is_integer(a) || !is_integer(b)) {
        throw validation_error("divisibility is defined for integer terms only");
    }
    if (numer(a) == 0) {
        return numer(b) == 0;
    }
    return numer(b) % numer(a) == 0;
}

}
