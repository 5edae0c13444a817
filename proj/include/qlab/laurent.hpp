#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

using Rational = mpq_class;

// Finite sum of c_k q^k with rational c_k. Stored densely from the lowest
// exponent; both ends are trimmed so the leading and trailing entries are
// nonzero. The zero polynomial has no coefficients.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    LaurentPolynomial(const Rational& c);
    LaurentPolynomial(long c);

    static LaurentPolynomial monomial(const Rational& c, int exponent);
    static LaurentPolynomial from_coefficients(int low, std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    // exponent range; only meaningful when nonzero
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

    Rational coefficient(int exponent) const;
    const Rational& leading_coefficient() const { return coeffs_.back(); }
    const Rational& trailing_coefficient() const { return coeffs_.front(); }
    const std::vector<Rational>& dense() const { return coeffs_; }
    std::size_t term_count() const;

    LaurentPolynomial shifted(int k) const;
    Rational evaluate(const Rational& x) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const Rational& c);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    // "2*q^3 - q + 1 - 3/2*q^-1"
    std::string str() const;
    std::size_t hash() const;

private:
    void trim();

    int low_ = 0;
    std::vector<Rational> coeffs_;
};

// Exact quotient when b divides a in Q[q, q^-1], otherwise nullopt.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Monic gcd of the q-power-free parts; result has low() == 0.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace qlab
