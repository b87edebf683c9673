#include "batch_runner.hpp"

#include <cmath>
#include <string>

namespace perron {

namespace {

std::optional<Sample> finish_perron(MonicPoly p, const SamplerConfig& config, AcceptanceStats& st)
{
    Sample s = detail::describe(std::move(p), config.tol);
    if (!s.perron || !is_in_omega(s.roots, config.tol)) {
        ++st.indeterminate;
        return std::nullopt;
    }
    ++st.accepted;
    return s;
}

}  // namespace

SampleBatch sample_perron_exact(int n, long count, const SamplerConfig& config)
{
    if (n < 2)
        throw std::invalid_argument("sample_perron_exact: degree must be at least 2");
    const double scale = std::ldexp(1.0, -(n - 1));
    SampleBatch batch = detail::run_indexed(n, count, config, [&](Rng& rng, AcceptanceStats& st) -> std::optional<Sample> {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        while (st.attempts < detail::attempt_budget) {
            ++st.attempts;
            // Q(1) in [0, 2^{N-1}] on Omega_{N-1}.
            const MonicPoly q = draw_omega(n - 1, rng);
            if (u(rng) >= q(1.0) * scale)
                continue;
            return finish_perron(perron_extend(q, draw_perron_root(n, config.positive_perron, rng)), config, st);
        }
        throw SamplerStarvation("sample_perron_exact: degree " + std::to_string(n) + " accepted nothing in " +
                                std::to_string(detail::attempt_budget) +
                                " attempts (acceptance rate below 1e-7); use the perron_weighted method");
    });
    if (batch.stats.attempts > 0 && batch.stats.rate() < starvation_rate)
        throw SamplerStarvation("sample_perron_exact: acceptance rate " + std::to_string(batch.stats.rate()) +
                                " below the starvation threshold");
    return batch;
}

SampleBatch sample_perron_weighted(int n, long count, const SamplerConfig& config)
{
    if (n < 2)
        throw std::invalid_argument("sample_perron_weighted: degree must be at least 2");
    return detail::run_indexed(n, count, config, [&](Rng& rng, AcceptanceStats& st) -> std::optional<Sample> {
        ++st.attempts;
        const MonicPoly q = draw_omega(n - 1, rng, true);
        return finish_perron(perron_extend(q, draw_perron_root(n, config.positive_perron, rng)), config, st);
    });
}

}  // namespace perron
