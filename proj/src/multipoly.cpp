#include "somos/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace somos {

MultiPoly::MultiPoly(std::vector<std::string> variables, bool laurent)
    : m_vars(std::move(variables)), m_laurent(laurent)
{
}

MultiPoly MultiPoly::zero(std::vector<std::string> variables, bool laurent)
{
    return MultiPoly(std::move(variables), laurent);
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational &c, bool laurent)
{
    MultiPoly p(std::move(variables), laurent);
    if (c != 0) {
        p.m_terms.emplace(Exponents(p.m_vars.size(), 0), c);
    }
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, const std::string &var,
                              std::int32_t e, const Rational &c, bool laurent)
{
    MultiPoly p(std::move(variables), laurent);
    Exponents exps(p.m_vars.size(), 0);
    exps[p.var_index(var)] = e;
    p.check_exponents(exps);
    if (c != 0) {
        p.m_terms.emplace(std::move(exps), c);
    }
    return p;
}

MultiPoly MultiPoly::term(std::vector<std::string> variables, Exponents exps, const Rational &c,
                          bool laurent)
{
    MultiPoly p(std::move(variables), laurent);
    if (exps.size() != p.m_vars.size()) {
        throw validation_error("exponent vector length does not match variable count");
    }
    p.check_exponents(exps);
    if (c != 0) {
        p.m_terms.emplace(std::move(exps), c);
    }
    return p;
}

std::size_t MultiPoly::var_index(const std::string &var) const
{
    for (std::size_t i = 0; i < m_vars.size(); ++i) {
        if (m_vars[i] == var) {
            return i;
        }
    }
    throw validation_error("unknown variable: " + var);
}

void MultiPoly::check_exponents(const Exponents &e) const
{
    if (!m_laurent) {
        for (auto x : e) {
            if (x < 0) {
                throw validation_error("negative exponent in polynomial mode");
            }
        }
    }
}

void MultiPoly::insert_term(const Exponents &e, const Rational &c)
{
    auto it = m_terms.find(e);
    if (it == m_terms.end()) {
        if (c != 0) {
            m_terms.emplace(e, c);
        }
        return;
    }
    it->second += c;
    if (it->second == 0) {
        m_terms.erase(it);
    }
}

bool MultiPoly::operator==(const MultiPoly &o) const
{
    return m_vars == o.m_vars && m_terms == o.m_terms;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(*this);
    for (auto &kv : r.m_terms) {
        kv.second = -kv.second;
    }
    return r;
}

namespace {
void require_same_ring(const MultiPoly &a, const MultiPoly &b)
{
    if (a.variables() != b.variables()) {
        throw validation_error("mixed polynomial rings");
    }
}
}

MultiPoly operator+(const MultiPoly &a, const MultiPoly &b)
{
    require_same_ring(a, b);
    MultiPoly r(a);
    r.m_laurent = a.m_laurent || b.m_laurent;
    for (const auto &kv : b.m_terms) {
        r.insert_term(kv.first, kv.second);
    }
    return r;
}

MultiPoly operator-(const MultiPoly &a, const MultiPoly &b)
{
    return a + (-b);
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    require_same_ring(a, b);
    MultiPoly r(a.m_vars, a.m_laurent || b.m_laurent);
    const std::size_t nv = a.m_vars.size();
    Exponents e(nv);
    for (const auto &ta : a.m_terms) {
        for (const auto &tb : b.m_terms) {
            for (std::size_t i = 0; i < nv; ++i) {
                e[i] = ta.first[i] + tb.first[i];
            }
            r.insert_term(e, ta.second * tb.second);
        }
    }
    return r;
}

MultiPoly operator*(const Rational &s, const MultiPoly &p)
{
    MultiPoly r(p.m_vars, p.m_laurent);
    if (s == 0) {
        return r;
    }
    for (const auto &kv : p.m_terms) {
        r.m_terms.emplace(kv.first, s * kv.second);
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const
{
    MultiPoly acc = constant(m_vars, 1, m_laurent);
    MultiPoly base(*this);
    while (n) {
        if (n & 1u) {
            acc = acc * base;
        }
        n >>= 1;
        if (n) {
            base = base * base;
        }
    }
    return acc;
}

Rational MultiPoly::eval(const std::vector<Rational> &point) const
{
    if (point.size() != m_vars.size()) {
        throw validation_error("evaluation point length does not match variable count");
    }
    Rational sum(0);
    for (const auto &kv : m_terms) {
        Rational t = kv.second;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const auto e = kv.first[i];
            if (e == 0) {
                continue;
            }
            if (point[i] == 0 && e < 0) {
                throw domain_error("zero substituted into negative-exponent variable " + m_vars[i]);
            }
            t *= pow_rational(point[i], e);
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::substitute(const std::string &var, const Rational &value) const
{
    const std::size_t idx = var_index(var);
    MultiPoly r(m_vars, m_laurent);
    for (const auto &kv : m_terms) {
        const auto e = kv.first[idx];
        if (value == 0 && e < 0) {
            throw domain_error("zero substituted into negative-exponent variable " + var);
        }
        Exponents exps = kv.first;
        exps[idx] = 0;
        r.insert_term(exps, kv.second * pow_rational(value, e));
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string &var) const
{
    const std::size_t idx = var_index(var);
    MultiPoly r(m_vars, m_laurent);
    for (const auto &kv : m_terms) {
        const auto e = kv.first[idx];
        if (e == 0) {
            continue;
        }
        Exponents exps = kv.first;
        exps[idx] = e - 1;
        if (!m_laurent && exps[idx] < 0) {
            throw validation_error("derivative produced a negative exponent in polynomial mode");
        }
        r.insert_term(exps, Rational(e) * kv.second);
    }
    return r;
}

Exponents MultiPoly::min_exponents() const
{
    Exponents m(m_vars.size(), 0);
    bool first = true;
    for (const auto &kv : m_terms) {
        if (first) {
            m = kv.first;
            first = false;
            continue;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = std::min(m[i], kv.first[i]);
        }
    }
    return m;
}

std::int32_t MultiPoly::degree_in(const std::string &var) const
{
    const std::size_t idx = var_index(var);
    std::int32_t d = 0;
    for (const auto &kv : m_terms) {
        d = std::max(d, kv.first[idx]);
    }
    return d;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly &a, const MultiPoly &b)
{
    require_same_ring(a, b);
    if (b.is_zero()) {
        throw domain_error("exact division by the zero polynomial");
    }
    const std::size_t nv = a.m_vars.size();
    const bool laurent = a.m_laurent || b.m_laurent;
    if (a.is_zero()) {
        return MultiPoly::zero(a.m_vars, laurent);
    }
    // Shift both operands by their minimum exponents so the reduction runs in
    // an honest polynomial ring, where greedy leading-term division
    // terminates; the quotient is shifted back at the end.
    const Exponents ma = a.min_exponents(), mb = b.min_exponents();
    auto shift = [&](const MultiPoly &p, const Exponents &by, int sign) {
        MultiPoly r(p.m_vars, true);
        for (const auto &kv : p.m_terms) {
            Exponents e = kv.first;
            for (std::size_t i = 0; i < nv; ++i) {
                e[i] += sign * by[i];
            }
            r.m_terms.emplace(std::move(e), kv.second);
        }
        return r;
    };
    MultiPoly rem = shift(a, ma, -1);
    const MultiPoly bs = shift(b, mb, -1);
    MultiPoly quot(a.m_vars, true);
    // Greedy reduction under graded lex; lt(a) = lt(q)*lt(b) whenever b | a,
    // so each step is forced.
    const auto &ltb = *bs.m_terms.rbegin();
    while (!rem.is_zero()) {
        const auto &lta = *rem.m_terms.rbegin();
        Exponents e(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            e[i] = lta.first[i] - ltb.first[i];
            if (e[i] < 0) {
                return std::nullopt;
            }
        }
        const Rational c = lta.second / ltb.second;
        MultiPoly t = MultiPoly::term(a.m_vars, std::move(e), c, true);
        quot += t;
        rem -= t * bs;
    }
    MultiPoly result = shift(quot, [&] {
        Exponents d(nv);
        for (std::size_t i = 0; i < nv; ++i) {
            d[i] = ma[i] - mb[i];
        }
        return d;
    }(), +1);
    result.m_laurent = laurent;
    if (!laurent) {
        for (const auto &kv : result.m_terms) {
            for (auto x : kv.first) {
                if (x < 0) {
                    return std::nullopt;
                }
            }
        }
    }
    return result;
}

std::string MultiPoly::str() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest graded-lex term first.
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << to_string(it->second) << ")";
        for (std::size_t i = 0; i < m_vars.size(); ++i) {
            if (it->first[i] != 0) {
                os << "*" << m_vars[i] << "^" << it->first[i];
            }
        }
    }
    return os.str();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw validation_error("rational function with identically zero denominator");
    }
    normalize();
}

void RationalFunction::normalize()
{
    // Remove the gcd of coefficient contents, then fix the sign so the
    // denominator's graded-lex leading coefficient is positive.
    auto content = [](const MultiPoly &p) -> Rational {
        Integer num_gcd(0), den_lcm(1);
        for (const auto &kv : p.terms()) {
            num_gcd = gcd(num_gcd, abs(numer(kv.second)));
            den_lcm = lcm(den_lcm, denom(kv.second));
        }
        if (num_gcd == 0) {
            return Rational(1);
        }
        return Rational(num_gcd, den_lcm);
    };
    const Rational cn = m_num.is_zero() ? Rational(1) : content(m_num);
    const Rational cd = content(m_den);
    const Rational g = m_num.is_zero() ? cd : Rational(gcd(numer(cn), numer(cd)), lcm(denom(cn), denom(cd)));
    Rational scale = Rational(1) / g;
    if (m_den.terms().rbegin()->second < 0) {
        scale = -scale;
    }
    m_num = scale * m_num;
    m_den = scale * m_den;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b)
{
    return RationalFunction(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b)
{
    return RationalFunction(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b)
{
    return RationalFunction(a.m_num * b.m_num, a.m_den * b.m_den);
}

std::string RationalFunction::str() const
{
    return "(" + m_num.str() + ") / (" + m_den.str() + ")";
}

}
