#pragma once

#include "perron/samplers.hpp"

#include <exception>

namespace perron::detail {

// Runs draw(rng, stats) for every index with its own substream, keeping the
// index order in the output.
template <class Draw>
SampleBatch run_indexed(int n, long count, const SamplerConfig& config, Draw draw)
{
    if (count < 0)
        throw std::invalid_argument("sample count must be non-negative");
    std::vector<std::optional<Sample>> slots(static_cast<std::size_t>(count));
    std::vector<AcceptanceStats> stats(static_cast<std::size_t>(count));
    std::exception_ptr failure;
    bool failed = false;

    auto one = [&](long i) {
        Rng rng = substream(config.seed, static_cast<std::uint64_t>(i));
        slots[static_cast<std::size_t>(i)] = draw(rng, stats[static_cast<std::size_t>(i)]);
    };
    if (config.execution == Execution::serial) {
        for (long i = 0; i < count; ++i)
            one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < count; ++i) {
            bool skip;
#pragma omp atomic read
            skip = failed;
            if (skip)
                continue;
            try {
                one(i);
            } catch (...) {
#pragma omp critical(perron_sampler_failure)
                {
                    if (!failure)
                        failure = std::current_exception();
                    failed = true;
                }
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    SampleBatch batch;
    batch.config = config;
    batch.degree = n;
    batch.requested = count;
    for (long i = 0; i < count; ++i) {
        batch.stats += stats[static_cast<std::size_t>(i)];
        if (auto& s = slots[static_cast<std::size_t>(i)])
            batch.samples.push_back(std::move(*s));
    }
    return batch;
}

// Roots, signature and Perron flag of a drawn polynomial.
inline Sample describe(MonicPoly p, double tol)
{
    Sample s;
    s.roots = find_roots(p);
    s.signature = signature(s.roots, tol);
    s.perron = perron_status(s.roots, tol) == PerronStatus::perron;
    s.poly = std::move(p);
    return s;
}

// Per-draw budget: beyond this many attempts the acceptance rate is below
// what a run of any useful size could afford.
constexpr long attempt_budget = 10000000;

}  // namespace perron::detail
