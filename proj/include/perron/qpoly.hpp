#pragma once

#include "perron/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace perron {

/// Polynomial with rational coefficients, stored in ascending powers:
/// coeffs()[k] multiplies x^k. Trailing zeros are always trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> ascending);
    QPoly(std::initializer_list<Rational> ascending);

    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, int power);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of x^k (zero outside the stored range).
    Rational coeff(int k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    QPoly derivative() const;
    QPoly antiderivative() const;
    /// Exact definite integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const;

    /// x^n p(1/x) with n = degree(); the "reversal" p*.
    QPoly reversed() const;
    /// p(-x).
    QPoly negated_argument() const;
    /// p(s x).
    QPoly scaled_argument(const Rational& s) const;
    QPoly monic() const;
    /// Removes the factor x^k of highest k, returning k.
    int strip_zero_roots();

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const Rational& c);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const Rational& c) { return a *= c; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
QPoly gcd(QPoly a, QPoly b);

}  // namespace perron
