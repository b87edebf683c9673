#include "perron/exact.hpp"
#include "perron/schur_cohn.hpp"

#include <cmath>
#include <stdexcept>

namespace perron {

namespace {

void require_positive(const Rational& alpha, const char* what)
{
    if (alpha <= 0)
        throw std::domain_error(std::string(what) + ": alpha must be positive");
}

}  // namespace

QPoly C_N(const Rational& alpha, int n)
{
    require_positive(alpha, "C_N");
    if (n < 1)
        throw std::domain_error("C_N: degree must be at least 1");
    const int m = n / 2;
    const unsigned long um = static_cast<unsigned long>(m);
    // m!^2 / (2m)!
    const Rational central = make_rational(factorial(um) * factorial(um), factorial(2 * um));
    const Rational scale = volume(VolumeClass::all, n) * moment_M(alpha, n);
    std::vector<Rational> t(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= m; ++i) {
        const unsigned long ui = static_cast<unsigned long>(i);
        const Rational b = Rational(binomial(2 * ui, ui) * binomial(2 * um - 2 * ui, um - ui)) * central;
        if (n % 2 == 1)
            t[static_cast<std::size_t>(2 * i + 1)] = scale * b * make_rational(2 * i + 1, 2 * m + 1);
        else
            t[static_cast<std::size_t>(2 * i)] = scale * b * (alpha + 2 * i) / (alpha + 2 * m);
    }
    return QPoly(std::move(t));
}

Rational C_N_scalar(const Rational& alpha, int n)
{
    return C_N(alpha, n).coeff(n);
}

Rational S_N(long alpha, long beta, int n)
{
    if (alpha <= 0 || beta <= 0)
        throw std::domain_error("S_N: alpha and beta must be positive");
    if (n < 1)
        throw std::domain_error("S_N: degree must be at least 1");
    auto gam = [](long x) { return factorial(static_cast<unsigned long>(x - 1)); };
    const long ab = alpha + beta;
    Rational s = 1;
    long two_power = 0;
    for (long k = 1; k <= n; ++k) {
        two_power += ab + k - 2;
        s /= Rational(gam(ab + k - 1));
    }
    for (long k = 1; 2 * k <= n; ++k)
        s *= Rational(gam(ab + k - 1) * gam(k));
    for (long k = 1; 2 * k - 1 <= n; ++k)
        s *= Rational(gam(alpha + k - 1) * gam(beta + k - 1));
    return s * Rational(pow_int(2, static_cast<unsigned long>(two_power)));
}

double log_S_N(double alpha, double beta, int n)
{
    if (!(alpha > 0) || !(beta > 0))
        throw std::domain_error("S_N: alpha and beta must be positive");
    if (n < 1)
        throw std::domain_error("S_N: degree must be at least 1");
    const double ab = alpha + beta;
    double s = 0.0;
    for (int k = 1; k <= n; ++k)
        s += (ab + k - 2) * std::log(2.0) - std::lgamma(ab + k - 1);
    for (int k = 1; 2 * k <= n; ++k)
        s += std::lgamma(ab + k - 1) + std::lgamma(static_cast<double>(k));
    for (int k = 1; 2 * k - 1 <= n; ++k)
        s += std::lgamma(alpha + k - 1) + std::lgamma(beta + k - 1);
    return s;
}

Rational C_minus(const Rational& alpha, int n)
{
    require_positive(alpha, "C_minus");
    if (n < 1)
        throw std::domain_error("C_minus: N must be at least 1");
    const unsigned un = static_cast<unsigned>(n);
    Rational k_n = 1;
    for (unsigned long k = 1; k < un; ++k) {
        const BigInt f = factorial(k);
        const BigInt g = factorial(2 * k + 1);
        k_n *= make_rational(f * f * f * factorial(k + 1) * pow_int(2, 4 * k + 1), g * g);
    }
    const Rational half(1, 2);
    Rational r = k_n * Rational(binomial(2 * un, un));
    r *= (Rational(4 * n) + 2 * alpha) * pochhammer(alpha + n + half, un) / pochhammer(alpha + n, un + 1);
    for (unsigned k = 1; k <= un; ++k)
        r *= pochhammer(alpha + k, 2 * un + 1 - 2 * k) / pochhammer(alpha - half + k, 2 * un + 2 - 2 * k);
    return r;
}

Rational C_minus_det(const Rational& alpha, int n)
{
    require_positive(alpha, "C_minus_det");
    if (n < 1)
        throw std::domain_error("C_minus_det: N must be at least 1");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                Rational(8) / ((2 * alpha + 2 * i + 2 * j - 3) * (2 * i - 2 * j + 1));
    return determinant(std::move(m));
}

}  // namespace perron
