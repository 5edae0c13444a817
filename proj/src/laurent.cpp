#include "qlab/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qlab {

namespace {

using Dense = std::vector<Rational>;

void strip_high(Dense& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// a = quot * b + rem, deg rem < deg b; b nonzero, both indexed by degree
void dense_divmod(const Dense& a, const Dense& b, Dense& quot, Dense& rem) {
    rem = a;
    strip_high(rem);
    quot.clear();
    if (rem.size() < b.size()) return;
    quot.assign(rem.size() - b.size() + 1, Rational(0));
    const Rational& lb = b.back();
    const long db = static_cast<long>(b.size()) - 1;
    for (long k = static_cast<long>(rem.size()) - 1; k >= db; --k) {
        if (sgn(rem[static_cast<std::size_t>(k)]) == 0) continue;
        Rational f = rem[static_cast<std::size_t>(k)] / lb;
        std::size_t shift = static_cast<std::size_t>(k - db);
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (sgn(b[i]) != 0) rem[shift + i] -= f * b[i];
        }
    }
    strip_high(rem);
    strip_high(quot);
}

void make_monic(Dense& p) {
    if (p.empty()) return;
    Rational lc = p.back();
    if (lc == 1) return;
    for (auto& c : p) c /= lc;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const Rational& c) {
    if (sgn(c) != 0) coeffs_.push_back(c);
}

LaurentPolynomial::LaurentPolynomial(long c) : LaurentPolynomial(Rational(c)) {}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, int exponent) {
    LaurentPolynomial p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(int low, std::vector<Rational> coeffs) {
    LaurentPolynomial p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPolynomial::trim() {
    strip_high(coeffs_);
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPolynomial::term_count() const {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

Rational LaurentPolynomial::evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    // acc is the value of the polynomial part; multiply by x^low
    Rational xp(1);
    if (low_ != 0) {
        Rational base = low_ > 0 ? x : Rational(1) / x;
        int e = low_ > 0 ? low_ : -low_;
        for (int i = 0; i < e; ++i) xp *= base;
    }
    return acc * xp;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    trim();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    return *this += -o;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (sgn(b.coeffs_[j]) != 0) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentPolynomial::from_coefficients(a.low_ + b.low_, std::move(out));
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
    return *this = *this * o;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string LaurentPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low_; --e) {
        const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::size_t LaurentPolynomial::hash() const {
    std::size_t h = std::hash<int>()(low_);
    for (const auto& c : coeffs_) {
        h ^= std::hash<std::string>()(c.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return LaurentPolynomial();
    if (b.is_monomial()) {
        LaurentPolynomial r = a.shifted(-b.low());
        r *= Rational(1) / b.leading_coefficient();
        return r;
    }
    Dense quot, rem;
    dense_divmod(a.dense(), b.dense(), quot, rem);
    if (!rem.empty()) return std::nullopt;
    return LaurentPolynomial::from_coefficients(a.low() - b.low(), std::move(quot));
}

LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPolynomial(1);
    Dense x = a.dense(), y = b.dense();
    if (x.size() < y.size()) std::swap(x, y);
    if (y.size() <= 1) {
        if (y.empty()) {
            make_monic(x);
            return LaurentPolynomial::from_coefficients(0, std::move(x));
        }
        return LaurentPolynomial(1);
    }
    make_monic(x);
    make_monic(y);
    Dense quot, rem;
    while (!y.empty()) {
        dense_divmod(x, y, quot, rem);
        make_monic(rem);
        x.swap(y);
        y.swap(rem);
        if (y.size() == 1) return LaurentPolynomial(1);
    }
    make_monic(x);
    return LaurentPolynomial::from_coefficients(0, std::move(x));
}

}  // namespace qlab
