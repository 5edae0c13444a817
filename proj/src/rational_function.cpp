#include "qlab/rational_function.hpp"

#include "qlab/errors.hpp"

#include <cctype>

namespace qlab {

RationalFunction RationalFunction::normalized(LaurentPolynomial num, LaurentPolynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    RationalFunction r;
    if (num.is_zero()) return r;
    int s = den.low();
    num = num.shifted(-s);
    den = den.shifted(-s);
    if (!den.is_constant()) {
        LaurentPolynomial g = polynomial_gcd(num, den);
        if (!g.is_constant()) {
            num = *divide_exact(num, g);
            den = *divide_exact(den, g);
        }
    }
    Rational lc = den.leading_coefficient();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num *= inv;
        den *= inv;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
}

RationalFunction RationalFunction::ratio(LaurentPolynomial num, LaurentPolynomial den) {
    return normalized(std::move(num), std::move(den));
}

RationalFunction RationalFunction::omega() {
    return LaurentPolynomial::monomial(1, 1) - LaurentPolynomial::monomial(1, -1);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // den/num with num = q^s p(q), p(0) != 0; gcd(p, den) = 1 already
    int s = num_.low();
    LaurentPolynomial p = num_.shifted(-s);
    Rational lc = p.leading_coefficient();
    Rational inv = Rational(1) / lc;
    RationalFunction r;
    r.num_ = den_.shifted(-s);
    r.num_ *= inv;
    p *= inv;
    r.den_ = std::move(p);
    return r;
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Rational RationalFunction::evaluate_at(const Rational& q0) const {
    if (sgn(q0) == 0) throw PoleError("cannot evaluate a Laurent expression at q = 0");
    Rational d = den_.evaluate(q0);
    if (sgn(d) == 0) throw PoleError("pole at q = " + q0.get_str() + " in " + str());
    return num_.evaluate(q0) / d;
}

std::optional<Rational> RationalFunction::constant_value() const {
    if (!is_laurent() || !num_.is_constant()) return std::nullopt;
    return num_.is_zero() ? Rational(0) : num_.leading_coefficient();
}

std::optional<std::pair<Rational, int>> RationalFunction::as_monomial() const {
    if (!is_laurent() || !num_.is_monomial()) return std::nullopt;
    return std::make_pair(num_.leading_coefficient(), num_.low());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_laurent() && o.is_laurent()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) return *this = normalized(num_ + o.num_, den_);
    if (o.is_laurent()) return *this = normalized(num_ + o.num_ * den_, den_);
    if (is_laurent()) return *this = normalized(num_ * o.den_ + o.num_, o.den_);
    LaurentPolynomial g = polynomial_gcd(den_, o.den_);
    LaurentPolynomial d1 = *divide_exact(den_, g);
    LaurentPolynomial d2 = *divide_exact(o.den_, g);
    return *this = normalized(num_ * d2 + o.num_ * d1, d1 * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    if (is_laurent() && o.is_laurent()) {
        num_ *= o.num_;
        return *this;
    }
    LaurentPolynomial n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    if (!d2.is_constant()) {
        LaurentPolynomial g = polynomial_gcd(n1, d2);
        if (!g.is_constant()) {
            n1 = *divide_exact(n1, g);
            d2 = *divide_exact(d2, g);
        }
    }
    if (!d1.is_constant()) {
        LaurentPolynomial g = polynomial_gcd(n2, d1);
        if (!g.is_constant()) {
            n2 = *divide_exact(n2, g);
            d1 = *divide_exact(d1, g);
        }
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    return *this *= o.inverse();
}

std::string RationalFunction::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction scalar_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    return {};
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    RationalFunction run() {
        skip();
        if (pos_ >= s_.size()) fail("empty expression");
        RationalFunction v = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    RationalFunction term() {
        RationalFunction v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    RationalFunction unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        if (!accept('^')) return base;
        skip();
        bool paren = accept('(');
        long e = signed_integer();
        if (paren && !accept(')')) fail("expected ')'");
        if (base.is_zero() && e < 0) fail("division by zero");
        return base.pow(static_cast<int>(e));
    }

    long signed_integer() {
        skip();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RationalFunction primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return RationalFunction::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(Rational(mpz_class(s_.substr(start, pos_ - start))));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_scalar(const std::string& text) {
    return ScalarParser(text).run();
}

}  // namespace qlab
