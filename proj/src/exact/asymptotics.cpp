#include "perron/exact.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perron {

double asymptotic_constant_probe(int n)
{
    if (n < 2)
        throw std::domain_error("asymptotic_constant_probe: N must be at least 2");
    const long double nn = static_cast<long double>(n);
    const long double log_ratio = log_volume(VolumeClass::totally_real, n) - log_volume(VolumeClass::all, n);
    return static_cast<double>(std::exp(nn * nn / 2.0L * std::log(2.0L) + log_ratio - std::log(nn) / 8.0L));
}

double asymptotic_constant_probe_complex(int n)
{
    if (n < 1)
        throw std::domain_error("asymptotic_constant_probe_complex: N must be at least 1");
    const long double two_n = 2.0L * n;
    const long double log_ratio =
        log_volume(VolumeClass::totally_complex, 2 * n) - log_volume(VolumeClass::all, 2 * n);
    const long double pi = std::numbers::pi_v<long double>;
    return static_cast<double>(std::sqrt(2.0L * pi) * std::pow(two_n, 0.375L) * std::exp(log_ratio) / 2.0L);
}

double constant_C()
{
    return 1.24514;
}

}  // namespace perron
