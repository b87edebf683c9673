#include "perron/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace perron {

namespace {

void require_degree(int n)
{
    if (n < 1)
        throw std::domain_error("volume: degree must be at least 1");
}

// k!^2 2^{2k+1} / (2k+1)!
Rational fam_factor(unsigned long k)
{
    const BigInt f = factorial(k);
    return make_rational(f * f * pow_int(2, 2 * k + 1), factorial(2 * k + 1));
}

long double log_fam_factor(long k)
{
    const long double kk = static_cast<long double>(k);
    return 2.0L * std::lgamma(kk + 1.0L) + (2.0L * kk + 1.0L) * std::log(2.0L) - std::lgamma(2.0L * kk + 2.0L);
}

Rational volume_all(int n)
{
    const unsigned long m = static_cast<unsigned long>(n / 2);
    Rational d = 1;
    for (unsigned long k = 0; k < m; ++k) {
        const Rational f = fam_factor(k);
        d *= f * f;
    }
    if (n % 2 == 1)
        d *= fam_factor(m);
    return d;
}

Rational volume_real(int n)
{
    Rational d = 1;
    for (unsigned long k = 0; k < static_cast<unsigned long>(n); ++k) {
        const BigInt f = factorial(k);
        d *= make_rational(pow_int(2, k + 1) * f * f, factorial(2 * k + 1));
    }
    return d;
}

}  // namespace

VolumeClass parse_volume_class(std::string_view name)
{
    if (name == "all" || name == "D")
        return VolumeClass::all;
    if (name == "perron" || name == "DP")
        return VolumeClass::perron;
    if (name == "totally_real" || name == "Dplus")
        return VolumeClass::totally_real;
    if (name == "totally_complex" || name == "Dminus")
        return VolumeClass::totally_complex;
    throw std::invalid_argument("unknown volume class '" + std::string(name) + "'");
}

std::string_view to_string(VolumeClass c)
{
    switch (c) {
    case VolumeClass::all: return "all";
    case VolumeClass::perron: return "perron";
    case VolumeClass::totally_real: return "totally_real";
    case VolumeClass::totally_complex: return "totally_complex";
    }
    return "?";
}

Rational volume(VolumeClass c, int n)
{
    require_degree(n);
    switch (c) {
    case VolumeClass::all:
        return volume_all(n);
    case VolumeClass::perron:
        return volume_all(n) / (n % 2 == 0 ? n + 1 : n);
    case VolumeClass::totally_real:
        return volume_real(n);
    case VolumeClass::totally_complex: {
        if (n % 2 != 0)
            throw std::domain_error("totally complex volume needs an even degree");
        const unsigned long h = static_cast<unsigned long>(n / 2);
        return Rational(pow_int(2, 2 * h * (h - 1)) * binomial(2 * h, h)) * volume_real(n);
    }
    }
    throw std::logic_error("volume: bad class");
}

long double log_volume(VolumeClass c, int n)
{
    require_degree(n);
    const long double ln2 = std::log(2.0L);
    auto log_all = [&](int deg) {
        const long m = deg / 2;
        long double s = 0.0L;
        for (long k = 0; k < m; ++k)
            s += 2.0L * log_fam_factor(k);
        if (deg % 2 == 1)
            s += log_fam_factor(m);
        return s;
    };
    auto log_real = [&](int deg) {
        long double s = 0.0L;
        for (long k = 0; k < deg; ++k) {
            const long double kk = static_cast<long double>(k);
            s += (kk + 1.0L) * ln2 + 2.0L * std::lgamma(kk + 1.0L) - std::lgamma(2.0L * kk + 2.0L);
        }
        return s;
    };
    switch (c) {
    case VolumeClass::all:
        return log_all(n);
    case VolumeClass::perron:
        return log_all(n) - std::log(static_cast<long double>(n % 2 == 0 ? n + 1 : n));
    case VolumeClass::totally_real:
        return log_real(n);
    case VolumeClass::totally_complex: {
        if (n % 2 != 0)
            throw std::domain_error("totally complex volume needs an even degree");
        const long double h = static_cast<long double>(n / 2);
        return 2.0L * h * (h - 1.0L) * ln2 + std::lgamma(2.0L * h + 1.0L) - 2.0L * std::lgamma(h + 1.0L) + log_real(n);
    }
    }
    throw std::logic_error("log_volume: bad class");
}

Rational pochhammer(const Rational& a, unsigned k)
{
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i)
        r *= a + i;
    return r;
}

double smallest_X(VolumeClass c, int n)
{
    const long double dim = static_cast<long double>(n) * (n + 1) / 2.0L;
    return static_cast<double>(std::exp(-log_volume(c, n) / dim));
}

}  // namespace perron
