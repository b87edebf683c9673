#include "perron/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perron {

namespace {

// c(m, k) = binom(2m-2k, m-k) binom(2k, k)
BigInt central_pair(unsigned long m, unsigned long k)
{
    return binomial(2 * m - 2 * k, m - k) * binomial(2 * k, k);
}

Rational ratio_D(int n)
{
    const Rational prev = n == 1 ? Rational(1) : volume(VolumeClass::all, n - 1);
    return prev / volume(VolumeClass::all, n);
}

}  // namespace

QPoly conj_absolute(int n)
{
    if (n < 0)
        throw std::domain_error("conj_absolute: degree must be nonnegative");
    if (n == 0)
        return QPoly::constant(1);
    const unsigned long m = static_cast<unsigned long>(n / 2);
    std::vector<Rational> first(2 * m + 1);
    for (unsigned long k = 0; k <= m; ++k)
        first[2 * k] = Rational(central_pair(m, k)) * make_rational(static_cast<long>(2 * m - 2 * k + 1), static_cast<long>(2 * m + 1));
    std::vector<Rational> second;
    Rational norm;
    if (n % 2 == 0) {
        second.resize(2 * m + 1);
        for (unsigned long k = 0; k <= m; ++k)
            second[2 * k] = Rational(central_pair(m, k));
        norm = Rational(pow_int(2, 2 * m) * binomial(2 * m, m));
    } else {
        second.resize(2 * m + 3);
        for (unsigned long k = 0; k <= m + 1; ++k)
            second[2 * k] = Rational(central_pair(m + 1, k));
        norm = Rational(pow_int(2, 2 * m + 2) * binomial(2 * m, m));
    }
    QPoly p = QPoly(std::move(first)) * QPoly(std::move(second));
    return p * (Rational(1) / norm);
}

Rational expected_real_roots(int n)
{
    if (n < 0)
        throw std::domain_error("expected_real_roots: degree must be nonnegative");
    if (n == 0)
        return 0;
    return ratio_D(n) * conj_absolute(n - 1).integrate(-1, 1);
}

bool zeil_check(int n)
{
    if (n < 0)
        throw std::domain_error("zeil_check: index must be nonnegative");
    const Rational even = expected_real_roots(2 * n);
    const Rational odd = expected_real_roots(2 * n + 1);
    return odd == make_rational(3 + 4 * n, 1 + 4 * n) * even + make_rational(1, 4 * n + 1);
}

Rational expected_zeros_interval(int n, const Rational& a, const Rational& b)
{
    if (n < 1)
        throw std::domain_error("expected_zeros_interval: degree must be at least 1");
    if (a >= b)
        throw std::domain_error("expected_zeros_interval: need a < b");
    if (a < -1 || b > 1)
        throw std::domain_error("expected_zeros_interval: interval must lie in [-1, 1]");
    return ratio_D(n) * conj_absolute(n - 1).integrate(a, b);
}

double asymptotic_zeros_interval(double a, double b)
{
    if (!(a < b))
        throw std::domain_error("asymptotic_zeros_interval: need a < b");
    if (!(a > -1.0 && b < 1.0))
        throw std::domain_error("asymptotic_zeros_interval: need -1 < a < b < 1");
    return std::log(std::abs((1.0 - a) * (1.0 + b) / ((1.0 + a) * (1.0 - b)))) / (2.0 * std::numbers::pi);
}

}  // namespace perron
