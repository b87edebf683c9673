#include "perron/exact.hpp"
#include "perron/samplers.hpp"

#include <cmath>
#include <exception>
#include <string>

namespace perron {

bool in_perron_region(const RootSet& rs, double tol)
{
    return house(rs) <= 1.0 && perron_status(rs, tol) == PerronStatus::perron;
}

bool in_perron_region(const MonicPoly& p, double tol)
{
    return in_perron_region(find_roots(p), tol);
}

MonicPoly mh_default_start(int n)
{
    if (n < 1)
        throw std::invalid_argument("mh_default_start: degree must be at least 1");
    std::vector<double> a(static_cast<std::size_t>(n), 0.0);
    a[0] = -0.5;
    return MonicPoly(std::move(a));
}

double mh_default_step(int n)
{
    // Tuned on degrees 5 and 21 against the integrated autocorrelation time
    // of |a_N|; proposals are in units of the Omega_N covariance.
    return 0.8 / static_cast<double>(n);
}

std::vector<std::vector<double>> coefficient_covariance_factor(int n)
{
    if (n < 1)
        throw std::invalid_argument("coefficient_covariance_factor: degree must be at least 1");
    const auto second = coeff_second_moment_table(n);
    const std::size_t m = static_cast<std::size_t>(n);
    std::vector<std::vector<double>> c(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            c[i][j] = to_double(second[i + 1][j + 1] - second[0][i + 1] * second[0][j + 1]);
    // Plain Cholesky; the covariance of a full-dimensional body is definite.
    std::vector<std::vector<double>> l(m, std::vector<double>(m, 0.0));
    for (std::size_t j = 0; j < m; ++j) {
        double d = c[j][j];
        for (std::size_t k = 0; k < j; ++k)
            d -= l[j][k] * l[j][k];
        if (!(d > 0))
            throw std::runtime_error("coefficient covariance is not positive definite");
        l[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < m; ++i) {
            double s = c[i][j];
            for (std::size_t k = 0; k < j; ++k)
                s -= l[i][k] * l[j][k];
            l[i][j] = s / l[j][j];
        }
    }
    return l;
}

namespace {

struct ChainResult {
    std::vector<Sample> samples;
    AcceptanceStats stats;
};

ChainResult run_chain(int n, long emit, int chain, const MonicPoly& start, const std::vector<std::vector<double>>& l,
                      double step, const SamplerConfig& config)
{
    Rng rng = substream(config.seed, static_cast<std::uint64_t>(chain));
    std::normal_distribution<double> gauss;
    const long thin = std::max(1L, config.mh_thin);
    const long total = config.mh_burnin + emit * thin;
    const std::size_t m = static_cast<std::size_t>(n);

    ChainResult out;
    out.samples.reserve(static_cast<std::size_t>(emit));
    MonicPoly x = start;
    RootSet roots = find_roots(x);
    std::vector<double> z(m);
    for (long it = 1; it <= total; ++it) {
        for (auto& v : z)
            v = gauss(rng);
        MonicPoly y = x;
        for (std::size_t i = 0; i < m; ++i) {
            double d = 0.0;
            for (std::size_t k = 0; k <= i; ++k)
                d += l[i][k] * z[k];
            y.coeffs[i] += step * d;
        }
        ++out.stats.attempts;
        // Most proposals leave the disk; the floating recursion spots that
        // without a root solve.
        if (!schur_cohn_rejects(y)) {
            try {
                RootSet ry = find_roots(y, roots.roots);
                if (house(ry) <= 1.0) {
                    const PerronStatus st = perron_status(ry, config.tol);
                    if (st == PerronStatus::perron) {
                        ++out.stats.accepted;
                        x = std::move(y);
                        roots = std::move(ry);
                    } else if (st == PerronStatus::indeterminate) {
                        ++out.stats.indeterminate;
                    }
                }
            } catch (const RootFindingError&) {
                ++out.stats.indeterminate;
            }
        }
        if (it > config.mh_burnin && (it - config.mh_burnin) % thin == 0) {
            Sample s;
            s.poly = x;
            s.roots = roots;
            s.signature = signature(roots, config.tol);
            s.perron = true;
            s.chain = chain;
            out.samples.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

SampleBatch sample_perron_mh(int n, long count, const SamplerConfig& config, std::optional<MonicPoly> start)
{
    if (n < 1)
        throw std::invalid_argument("sample_perron_mh: degree must be at least 1");
    if (count < 0 || config.mh_burnin < 0 || config.mh_thin < 0 || config.mh_chains < 1)
        throw std::invalid_argument("sample_perron_mh: count, burnin, thin must be >= 0 and chains >= 1");
    if (config.mh_step < 0 || !std::isfinite(config.mh_step))
        throw std::invalid_argument("sample_perron_mh: mh_step must be positive");
    const MonicPoly x0 = start ? *start : mh_default_start(n);
    if (x0.degree() != n)
        throw std::invalid_argument("sample_perron_mh: start has the wrong degree");
    if (!in_perron_region(x0, config.tol))
        throw std::invalid_argument("sample_perron_mh: initial state is not a Perron member of Omega_N");

    const double step = config.mh_step > 0 ? config.mh_step : mh_default_step(n);
    const auto l = coefficient_covariance_factor(n);
    const int chains = config.mh_chains;
    std::vector<ChainResult> results(static_cast<std::size_t>(chains));
    auto emit_of = [&](int c) { return count / chains + (c < count % chains ? 1 : 0); };

    if (config.execution == Execution::serial || chains == 1) {
        for (int c = 0; c < chains; ++c)
            results[static_cast<std::size_t>(c)] = run_chain(n, emit_of(c), c, x0, l, step, config);
    } else {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (int c = 0; c < chains; ++c) {
            try {
                results[static_cast<std::size_t>(c)] = run_chain(n, emit_of(c), c, x0, l, step, config);
            } catch (...) {
#pragma omp critical(perron_mh_failure)
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    SampleBatch batch;
    batch.config = config;
    batch.config.mh_step = step;
    batch.degree = n;
    batch.requested = count;
    for (auto& r : results) {
        batch.stats += r.stats;
        for (auto& s : r.samples)
            batch.samples.push_back(std::move(s));
    }
    return batch;
}

}  // namespace perron
