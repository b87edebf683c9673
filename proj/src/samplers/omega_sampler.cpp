#include "batch_runner.hpp"

#include <string>

namespace perron {

SampleBatch sample_omega(int n, long count, const SamplerConfig& config)
{
    if (n < 1)
        throw std::invalid_argument("sample_omega: degree must be at least 1");
    return detail::run_indexed(n, count, config, [&](Rng& rng, AcceptanceStats& st) -> std::optional<Sample> {
        ++st.attempts;
        Sample s = detail::describe(draw_omega(n, rng), config.tol);
        if (!is_in_omega(s.roots, config.tol)) {
            ++st.indeterminate;
            return std::nullopt;
        }
        ++st.accepted;
        return s;
    });
}

SampleBatch sample_signature(int n, int r, int s, long count, const SamplerConfig& config)
{
    if (n < 1 || r < 0 || s < 0 || r + 2 * s != n)
        throw std::invalid_argument("sample_signature: need R + 2S = N with R, S >= 0");
    const Signature want{r, s};
    SampleBatch batch = detail::run_indexed(n, count, config, [&](Rng& rng, AcceptanceStats& st) -> std::optional<Sample> {
        while (st.attempts < detail::attempt_budget) {
            ++st.attempts;
            Sample x = detail::describe(draw_omega(n, rng), config.tol);
            if (!x.signature || !is_in_omega(x.roots, config.tol)) {
                ++st.indeterminate;
                continue;
            }
            if (*x.signature == want) {
                ++st.accepted;
                return x;
            }
        }
        throw SamplerStarvation("sample_signature: no draw with signature (" + std::to_string(r) + "," +
                                std::to_string(s) + ") in " + std::to_string(detail::attempt_budget) +
                                " attempts; acceptance rate below " + std::to_string(1.0 / detail::attempt_budget));
    });
    if (batch.stats.attempts > 0 && batch.stats.rate() < starvation_rate)
        throw SamplerStarvation("sample_signature: acceptance rate " + std::to_string(batch.stats.rate()) +
                                " below the starvation threshold");
    return batch;
}

}  // namespace perron
