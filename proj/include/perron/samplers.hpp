#pragma once

#include "perron/execution.hpp"
#include "perron/poly.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace perron {

using Rng = std::mt19937_64;

/// Independent generator for sample `index` of a run seeded with `seed`.
Rng substream(std::uint64_t seed, std::uint64_t index);

enum class SamplerMethod {
    fam_exact,
    perron_exact,
    /// Rejection-free Perron sampler: Q drawn from Omega_{N-1} with density
    /// proportional to Q(1), which factors over the Fam recursion.
    perron_weighted,
    perron_mh,
    signature_reject,
};

SamplerMethod parse_sampler_method(std::string_view name);
std::string_view to_string(SamplerMethod m);

struct SamplerConfig {
    std::uint64_t seed = 0;
    SamplerMethod method = SamplerMethod::fam_exact;
    /// Proposal scale relative to the Omega_N coefficient covariance. Zero
    /// picks mh_default_step(N).
    double mh_step = 0.0;
    long mh_burnin = 10000;
    long mh_thin = 100;
    int mh_chains = 1;
    bool positive_perron = false;
    double tol = default_class_tol;
    Execution execution = Execution::parallel;
};

double mh_default_step(int n);

struct Sample {
    MonicPoly poly;
    RootSet roots;
    std::optional<Signature> signature;
    bool perron = false;
    int chain = 0;
};

struct AcceptanceStats {
    long attempts = 0;
    long accepted = 0;
    /// Draws dropped because the Perron or signature test could not decide.
    long indeterminate = 0;

    double rate() const { return attempts > 0 ? static_cast<double>(accepted) / static_cast<double>(attempts) : 0.0; }
    AcceptanceStats& operator+=(const AcceptanceStats& o);
};

struct SampleBatch {
    SamplerConfig config;
    int degree = 0;
    long requested = 0;
    std::vector<Sample> samples;
    AcceptanceStats stats;
};

/// Acceptance rate collapsed below 1e-6, or a single draw exhausted its
/// attempt budget.
class SamplerStarvation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double starvation_rate = 1e-6;

/// a_n for the step from degree n-1 to n: density prop. to (1-t^2)^{(n-1)/2}
/// for odd n, (1-t^2)^{(n-2)/2}(1+t) for even n. weighted multiplies by (1+t).
double draw_fam_coefficient(int n, bool weighted, Rng& rng);
/// Uniform point of Omega_n (or Q(1)-weighted).
MonicPoly draw_omega(int n, Rng& rng, bool weighted = false);
/// t with density prop. to |t|^{(N-1)(N+2)/2} on [-1, 1] or [0, 1].
double draw_perron_root(int n, bool positive, Rng& rng);

SampleBatch sample_omega(int n, long count, const SamplerConfig& config);
SampleBatch sample_perron_exact(int n, long count, const SamplerConfig& config);
SampleBatch sample_perron_weighted(int n, long count, const SamplerConfig& config);
SampleBatch sample_perron_mh(int n, long count, const SamplerConfig& config,
                             std::optional<MonicPoly> start = std::nullopt);
SampleBatch sample_signature(int n, int r, int s, long count, const SamplerConfig& config);

/// Dispatch on config.method; signature_reject needs `signature`.
SampleBatch sample(int n, long count, const SamplerConfig& config,
                   std::optional<Signature> signature = std::nullopt);

/// MH acceptance predicate: house <= 1 and a clear Perron root.
bool in_perron_region(const RootSet& rs, double tol = default_class_tol);
bool in_perron_region(const MonicPoly& p, double tol = default_class_tol);

/// x^{N-1}(x - 1/2).
MonicPoly mh_default_start(int n);

/// Lower Cholesky factor of the coefficient covariance over Omega_N.
std::vector<std::vector<double>> coefficient_covariance_factor(int n);

}  // namespace perron
