#include "perron/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace perron {

double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf)
{
    if (values.empty())
        throw std::invalid_argument("ks_statistic: no values");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    double d = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double f = cdf(values[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double ks_statistic_uniform(std::vector<double> values, double lo, double hi)
{
    return ks_statistic(std::move(values), [lo, hi](double x) { return std::clamp((x - lo) / (hi - lo), 0.0, 1.0); });
}

double ks_pvalue(double d, long n)
{
    if (n <= 0)
        throw std::invalid_argument("ks_pvalue: n must be positive");
    const double sn = std::sqrt(static_cast<double>(n));
    // Stephens' small-sample correction of the Kolmogorov limit.
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 0.2)
        return 1.0;
    double sum = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
        if (term < 1e-16)
            break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

}  // namespace perron
