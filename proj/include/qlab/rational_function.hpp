#pragma once

#include "qlab/laurent.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace qlab {

// Element of Q(q). Canonical form: the denominator is a monic polynomial with
// nonzero constant term, coprime to the numerator; every power of q lives in
// the numerator. Equal values have identical representations.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long c) : num_(c) {}
    RationalFunction(const Rational& c) : num_(c) {}
    RationalFunction(LaurentPolynomial p) : num_(std::move(p)) {}

    // throws DivisionByZero when den is zero
    static RationalFunction ratio(LaurentPolynomial num, LaurentPolynomial den);
    static RationalFunction q_power(int k) { return LaurentPolynomial::monomial(1, k); }
    static RationalFunction q() { return q_power(1); }
    // q - q^-1
    static RationalFunction omega();

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return is_laurent() && !num_.is_zero() && num_.is_constant() && num_.leading_coefficient() == 1; }
    bool is_laurent() const { return den_.is_constant(); }

    RationalFunction inverse() const;
    RationalFunction pow(int k) const;

    // throws PoleError for q0 = 0 or a genuine pole
    Rational evaluate_at(const Rational& q0) const;
    std::optional<Rational> constant_value() const;
    // c * q^e when the value is a single monomial
    std::optional<std::pair<Rational, int>> as_monomial() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // canonical string in the scalar grammar
    std::string str() const;
    std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
    // rough size measure, used for pivot selection
    std::size_t weight() const { return num_.dense().size() + den_.dense().size(); }

private:
    static RationalFunction normalized(LaurentPolynomial num, LaurentPolynomial den);

    LaurentPolynomial num_;
    LaurentPolynomial den_{1};
};

enum class ArithOp { add, sub, mul, div };

// throws DivisionByZero for div by zero
RationalFunction scalar_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

// Grammar: integers, q, q^k (k may be negative), + - * / ^, parentheses.
// Throws ParseError (line 1, 1-based column) on malformed input.
RationalFunction parse_scalar(const std::string& text);

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace qlab
