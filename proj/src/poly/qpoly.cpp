#include "perron/qpoly.hpp"

#include <stdexcept>

namespace perron {

QPoly::QPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending))
{
    trim();
}

QPoly::QPoly(std::initializer_list<Rational> ascending) : coeffs_(ascending)
{
    trim();
}

QPoly QPoly::constant(const Rational& c)
{
    return QPoly(std::vector<Rational>{c});
}

QPoly QPoly::monomial(const Rational& c, int power)
{
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational QPoly::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& QPoly::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational QPoly::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double QPoly::eval(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

QPoly QPoly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return QPoly(std::move(d));
}

QPoly QPoly::antiderivative() const
{
    std::vector<Rational> a(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        a[k + 1] = coeffs_[k] / static_cast<long>(k + 1);
    return QPoly(std::move(a));
}

Rational QPoly::integrate(const Rational& a, const Rational& b) const
{
    QPoly anti = antiderivative();
    return anti(b) - anti(a);
}

QPoly QPoly::reversed() const
{
    return QPoly(std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend()));
}

QPoly QPoly::negated_argument() const
{
    std::vector<Rational> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2)
        v[k] = -v[k];
    return QPoly(std::move(v));
}

QPoly QPoly::scaled_argument(const Rational& s) const
{
    std::vector<Rational> v = coeffs_;
    Rational p = 1;
    for (auto& c : v) {
        c *= p;
        p *= s;
    }
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const
{
    if (coeffs_.empty())
        return {};
    QPoly r = *this;
    const Rational lead = leading();
    for (auto& c : r.coeffs_)
        c /= lead;
    return r;
}

int QPoly::strip_zero_roots()
{
    std::size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == 0)
        ++k;
    if (k == coeffs_.size())
        return 0;
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
    return static_cast<int>(k);
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_)
        x *= c;
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den)
{
    if (den.is_zero())
        throw std::domain_error("polynomial division by zero");
    const int dd = den.degree();
    if (num.degree() < dd)
        return {QPoly{}, num};
    std::vector<Rational> rem = num.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - dd) + 1);
    const Rational& lead = den.leading();
    for (int k = num.degree(); k >= dd; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] / lead;
        quo[static_cast<std::size_t>(k - dd)] = c;
        if (c == 0)
            continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

}  // namespace perron
