#include "perron/exact.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <stdexcept>

namespace perron {

namespace {

int moment_range(int n)
{
    if (n < 1)
        throw std::domain_error("moment: degree must be at least 1");
    return (n - 1) / 2;
}

void require_positive(const Rational& alpha)
{
    if (alpha <= 0)
        throw std::domain_error("moment: alpha must be positive");
}

}  // namespace

Rational moment_M(const Rational& alpha, int n)
{
    require_positive(alpha);
    const int m = moment_range(n);
    Rational r = 1;
    for (int k = 0; k <= m; ++k)
        r *= Rational(1 + 2 * k) / (alpha + 2 * k);
    return r;
}

double density_H(double x, int n)
{
    const int m = moment_range(n);
    if (x < 0.0 || x > 1.0)
        return 0.0;
    // (1 - x^2)^m normalised on [0, 1]; the normaliser is 4^m m!^2 / (2m+1)!.
    const double log_norm = m * std::log(4.0) + 2.0 * std::lgamma(m + 1.0) - std::lgamma(2.0 * m + 2.0);
    return std::exp(m * std::log1p(-x * x) - log_norm);
}

double cdf_H(double x, int n)
{
    const int m = moment_range(n);
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    // x^2 is Beta(1/2, m+1) distributed.
    return boost::math::ibeta(0.5, m + 1.0, x * x);
}

Rational E_log_aN(int n)
{
    const int m = moment_range(n);
    Rational s = 0;
    for (int k = 0; k <= m; ++k)
        s -= make_rational(1, 2 * k + 1);
    return s;
}

Rational perron_moment(const Rational& alpha, int n)
{
    require_positive(alpha);
    if (n < 2)
        throw std::domain_error("perron_moment: degree must be at least 2");
    // Both parities share prod_{k=0}^{floor((N-1)/2)}; even N adds a factor.
    Rational r = moment_M(alpha, n);
    if (n % 2 == 0)
        r *= Rational(n + 1) / (n + 2 * alpha - 1);
    return r;
}

Rational perron_moment_via_C(const Rational& alpha, int n)
{
    require_positive(alpha);
    if (n < 2)
        throw std::domain_error("perron_moment: degree must be at least 2");
    const Rational integral = 4 * C_N(alpha, n - 1)(Rational(1)) / (n * (n + 2 * alpha - 1));
    return integral / volume(VolumeClass::perron, n);
}

Rational perron_E_log_aN(int n)
{
    if (n < 2)
        throw std::domain_error("perron_E_log_aN: degree must be at least 2");
    Rational r = E_log_aN(n);
    if (n % 2 == 0)
        r -= make_rational(2, n + 1);
    return r;
}

}  // namespace perron
