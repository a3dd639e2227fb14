#ifndef SOMOS_UNIPOLY_HPP
#define SOMOS_UNIPOLY_HPP

#include <algorithm>
#include <array>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "somos/errors.hpp"

namespace somos {

// Dense univariate polynomial with coefficients in a field T, stored in
// ascending degree with no trailing zeros. The zero polynomial has an empty
// coefficient vector and degree() == -1.
template <typename T>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<T> ascending) : m_c(ascending) { trim(); }
    explicit Poly(std::vector<T> ascending) : m_c(std::move(ascending)) { trim(); }
    static Poly constant(const T &c) { return Poly(std::vector<T>{c}); }
    // x - r
    static Poly linear_root(const T &r) { return Poly(std::vector<T>{-r, T(1)}); }

    long degree() const { return static_cast<long>(m_c.size()) - 1; }
    bool is_zero() const { return m_c.empty(); }
    const std::vector<T> &coeffs() const { return m_c; }
    // Coefficient of x^i (0 outside the stored range).
    T coeff(std::size_t i) const { return i < m_c.size() ? m_c[i] : T(0); }
    T leading() const { return m_c.empty() ? T(0) : m_c.back(); }

    bool operator==(const Poly &other) const { return m_c == other.m_c; }
    bool operator!=(const Poly &other) const { return !(*this == other); }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto &c : r.m_c) {
            c = -c;
        }
        return r;
    }
    Poly &operator+=(const Poly &o)
    {
        if (o.m_c.size() > m_c.size()) {
            m_c.resize(o.m_c.size(), T(0));
        }
        for (std::size_t i = 0; i < o.m_c.size(); ++i) {
            m_c[i] += o.m_c[i];
        }
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o) { return *this += -o; }
    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly();
        }
        std::vector<T> r(a.m_c.size() + b.m_c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.m_c.size(); ++i) {
            for (std::size_t j = 0; j < b.m_c.size(); ++j) {
                r[i + j] += a.m_c[i] * b.m_c[j];
            }
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const T &s, Poly p)
    {
        for (auto &c : p.m_c) {
            c = s * c;
        }
        p.trim();
        return p;
    }

    T eval(const T &x) const
    {
        T r(0);
        for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
            r = r * x + *it;
        }
        return r;
    }

    Poly derivative() const
    {
        if (m_c.size() <= 1) {
            return Poly();
        }
        std::vector<T> r(m_c.size() - 1);
        for (std::size_t i = 1; i < m_c.size(); ++i) {
            r[i - 1] = T(static_cast<int>(i)) * m_c[i];
        }
        return Poly(std::move(r));
    }

    Poly monic() const
    {
        if (is_zero()) {
            throw domain_error("monic() of the zero polynomial");
        }
        Poly r(*this);
        const T lc = r.leading();
        for (auto &c : r.m_c) {
            c = c / lc;
        }
        return r;
    }

    // Composition p(x + shift).
    Poly shifted(const T &shift) const
    {
        Poly r;
        const Poly lin{shift, T(1)};
        for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) {
            r = r * lin + constant(*it);
        }
        return r;
    }

    std::string str(const std::string &var = "x") const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const T &c = m_c[static_cast<std::size_t>(i)];
            if (c == T(0)) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << c << ")";
            if (i > 0) {
                os << "*" << var;
                if (i > 1) {
                    os << "^" << i;
                }
            }
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!m_c.empty() && m_c.back() == T(0)) {
            m_c.pop_back();
        }
    }
    std::vector<T> m_c;
};

// Euclidean division: a = q*b + r with deg r < deg b. Exact over a field.
template <typename T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T> &a, const Poly<T> &b)
{
    if (b.is_zero()) {
        throw domain_error("polynomial division by zero");
    }
    std::vector<T> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db) {
        return {Poly<T>(), a};
    }
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db) + 1, T(0));
    const T lc = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const T c = rem[static_cast<std::size_t>(i)] / lc;
        if (c == T(0)) {
            continue;
        }
        quot[static_cast<std::size_t>(i - db)] = c;
        for (long j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
        }
    }
    while (!rem.empty() && rem.back() == T(0)) {
        rem.pop_back();
    }
    return {Poly<T>(std::move(quot)), Poly<T>(std::move(rem))};
}

template <typename T>
Poly<T> poly_mod(const Poly<T> &a, const Poly<T> &b)
{
    return poly_divmod(a, b).second;
}

// Monic gcd by the Euclidean algorithm.
template <typename T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b)
{
    while (!b.is_zero()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) monic with s*a + t*b = g.
template <typename T>
std::array<Poly<T>, 3> poly_ext_gcd(const Poly<T> &a, const Poly<T> &b)
{
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(T(1)), s1;
    Poly<T> t0, t1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<T> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<T> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        return {r0, s0, t0};
    }
    const T lc = r0.leading();
    const T inv = T(1) / lc;
    return {inv * r0, inv * s0, inv * t0};
}

// Divides p by (lambda - x) by synthetic division; returns quotient and the
// scalar remainder p(lambda).
template <typename T>
std::pair<Poly<T>, T> divide_by_lambda_minus_x(const Poly<T> &p, const T &lambda)
{
    if (p.is_zero()) {
        return {Poly<T>(), T(0)};
    }
    const auto &c = p.coeffs();
    std::vector<T> q(c.size() - 1, T(0));
    T acc(0);
    for (std::size_t i = c.size(); i-- > 1;) {
        acc = c[i] + acc * lambda;
        q[i - 1] = -acc;
    }
    const T rem = c[0] + acc * lambda;
    return {Poly<T>(std::move(q)), rem};
}

}

#endif
