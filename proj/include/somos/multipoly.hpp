#ifndef SOMOS_MULTIPOLY_HPP
#define SOMOS_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "somos/rational.hpp"

namespace somos {

// Exponent vector of a monomial; one entry per ring variable.
using Exponents = std::vector<std::int32_t>;

// Graded lexicographic order: compare total degree first, then exponents
// lexicographically. Canonical form of every polynomial (serialization,
// leading terms) is defined against this order.
struct GradedLexLess {
    bool operator()(const Exponents &a, const Exponents &b) const
    {
        long long da = 0, db = 0;
        for (auto e : a) {
            da += e;
        }
        for (auto e : b) {
            db += e;
        }
        if (da != db) {
            return da < db;
        }
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over Rational. Laurent mode permits negative
// exponents; it is a mode flag rather than a separate type so that
// "the denominator is a monomial" stays an assertable property of one
// representation. Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    MultiPoly() = default;
    MultiPoly(std::vector<std::string> variables, bool laurent);

    static MultiPoly zero(std::vector<std::string> variables, bool laurent = false);
    static MultiPoly constant(std::vector<std::string> variables, const Rational &c,
                              bool laurent = false);
    // The monomial c * var^e; var must name one of `variables`.
    static MultiPoly monomial(std::vector<std::string> variables, const std::string &var,
                              std::int32_t e, const Rational &c = Rational(1),
                              bool laurent = false);
    static MultiPoly term(std::vector<std::string> variables, Exponents exps, const Rational &c,
                          bool laurent = false);

    const std::vector<std::string> &variables() const { return m_vars; }
    bool laurent() const { return m_laurent; }
    std::size_t term_count() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }
    const TermMap &terms() const { return m_terms; }

    bool operator==(const MultiPoly &o) const;
    bool operator!=(const MultiPoly &o) const { return !(*this == o); }

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(const Rational &s, const MultiPoly &p);
    MultiPoly &operator+=(const MultiPoly &o) { return *this = *this + o; }
    MultiPoly &operator-=(const MultiPoly &o) { return *this = *this - o; }
    MultiPoly &operator*=(const MultiPoly &o) { return *this = *this * o; }

    MultiPoly pow(unsigned n) const;

    // Exact value at a point; the point must be as long as the variable list,
    // and Laurent variables occurring with negative exponents must be nonzero.
    Rational eval(const std::vector<Rational> &point) const;

    // Substitute a value for one variable, keeping the ring intact.
    MultiPoly substitute(const std::string &var, const Rational &value) const;

    MultiPoly derivative(const std::string &var) const;

    // Exact division: returns a/b when b divides a in the (Laurent)
    // polynomial ring, nullopt otherwise.
    static std::optional<MultiPoly> exact_divide(const MultiPoly &a, const MultiPoly &b);

    bool is_monomial() const { return m_terms.size() == 1; }

    // Componentwise minimum of exponents over all terms (the denominator of
    // the Laurent polynomial written over a common monomial: var^max(0,-min)).
    Exponents min_exponents() const;

    // Degree in one variable (max exponent; 0 for the zero polynomial).
    std::int32_t degree_in(const std::string &var) const;

    // Canonical text form: graded-lex sorted monomials, explicit exponents.
    std::string str() const;

    std::size_t var_index(const std::string &var) const;

private:
    void insert_term(const Exponents &e, const Rational &c);
    void check_exponents(const Exponents &e) const;

    std::vector<std::string> m_vars;
    bool m_laurent = false;
    TermMap m_terms;
};

// Quotient of two MultiPolys, normalized so the gcd of the coefficient
// contents is removed and the leading coefficient of the denominator (in
// graded lex) is positive. No polynomial-gcd reduction is attempted.
class RationalFunction {
public:
    RationalFunction(MultiPoly num, MultiPoly den);

    const MultiPoly &num() const { return m_num; }
    const MultiPoly &den() const { return m_den; }
    bool is_zero() const { return m_num.is_zero(); }

    friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
    friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);

    std::string str() const;

private:
    void normalize();
    MultiPoly m_num, m_den;
};

}

#endif
