#include "perron/stats.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace perron {

double integrated_autocorrelation_time(const std::vector<double>& x, double c)
{
    const std::size_t n = x.size();
    if (n < 2)
        return 1.0;
    double mean = 0.0;
    for (double v : x)
        mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0;
    for (double v : x)
        c0 += (v - mean) * (v - mean);
    c0 /= static_cast<double>(n);
    if (c0 == 0.0)
        return 1.0;
    double tau = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        double ck = 0.0;
        for (std::size_t i = 0; i + k < n; ++i)
            ck += (x[i] - mean) * (x[i + k] - mean);
        tau += 2.0 * ck / (static_cast<double>(n) * c0);
        if (static_cast<double>(k) >= c * tau)
            break;
    }
    return std::max(tau, 1.0);
}

MeanEstimate mean_estimate(const std::vector<double>& x)
{
    MeanEstimate m;
    m.n = static_cast<long>(x.size());
    if (x.empty())
        return m;
    for (double v : x)
        m.mean += v;
    m.mean /= static_cast<double>(x.size());
    if (x.size() > 1) {
        double var = 0.0;
        for (double v : x)
            var += (v - m.mean) * (v - m.mean);
        var /= static_cast<double>(x.size() - 1);
        m.se = std::sqrt(var / static_cast<double>(x.size()));
    }
    return m;
}

MeanEstimate correlated_mean_estimate(const std::vector<double>& x, const std::vector<int>& chain)
{
    if (x.size() != chain.size())
        throw std::invalid_argument("correlated_mean_estimate: size mismatch");
    std::map<int, std::vector<double>> by_chain;
    for (std::size_t i = 0; i < x.size(); ++i)
        by_chain[chain[i]].push_back(x[i]);

    MeanEstimate out;
    out.n = static_cast<long>(x.size());
    if (x.empty())
        return out;
    const double n = static_cast<double>(x.size());
    double pooled_var = 0.0;
    std::vector<double> chain_means;
    for (const auto& [id, v] : by_chain) {
        const MeanEstimate e = mean_estimate(v);
        const double tau = integrated_autocorrelation_time(v);
        const double w = static_cast<double>(v.size()) / n;
        out.mean += w * e.mean;
        pooled_var += w * w * e.se * e.se * tau;
        chain_means.push_back(e.mean);
    }
    double se = std::sqrt(pooled_var);
    if (chain_means.size() >= 4) {
        const MeanEstimate between = mean_estimate(chain_means);
        se = std::max(se, between.se);
    }
    out.se = se;
    const MeanEstimate plain = mean_estimate(x);
    out.tau = plain.se > 0 ? (se * se) / (plain.se * plain.se) : 1.0;
    return out;
}

MeanEstimate batch_mean(const SampleBatch& batch, const std::function<double(const Sample&)>& f)
{
    std::vector<double> v;
    std::vector<int> chain;
    v.reserve(batch.samples.size());
    for (const auto& s : batch.samples) {
        v.push_back(f(s));
        chain.push_back(s.chain);
    }
    if (batch.config.method == SamplerMethod::perron_mh)
        return correlated_mean_estimate(v, chain);
    return mean_estimate(v);
}

}  // namespace perron
