#include "perron/samplers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace perron {

Rng substream(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

SamplerMethod parse_sampler_method(std::string_view name)
{
    if (name == "fam_exact" || name == "fam" || name == "exact")
        return SamplerMethod::fam_exact;
    if (name == "perron_exact")
        return SamplerMethod::perron_exact;
    if (name == "perron_weighted" || name == "weighted")
        return SamplerMethod::perron_weighted;
    if (name == "perron_mh" || name == "mh")
        return SamplerMethod::perron_mh;
    if (name == "signature_reject" || name == "signature")
        return SamplerMethod::signature_reject;
    throw std::invalid_argument("unknown sampler method: " + std::string(name));
}

std::string_view to_string(SamplerMethod m)
{
    switch (m) {
    case SamplerMethod::fam_exact:
        return "fam_exact";
    case SamplerMethod::perron_exact:
        return "perron_exact";
    case SamplerMethod::perron_weighted:
        return "perron_weighted";
    case SamplerMethod::perron_mh:
        return "perron_mh";
    case SamplerMethod::signature_reject:
        return "signature_reject";
    }
    return "unknown";
}

AcceptanceStats& AcceptanceStats::operator+=(const AcceptanceStats& o)
{
    attempts += o.attempts;
    accepted += o.accepted;
    indeterminate += o.indeterminate;
    return *this;
}

namespace {

double beta_variate(double a, double b, Rng& rng)
{
    std::gamma_distribution<double> ga(a, 1.0), gb(b, 1.0);
    const double x = ga(rng);
    const double y = gb(rng);
    return x / (x + y);
}

}  // namespace

double draw_fam_coefficient(int n, bool weighted, Rng& rng)
{
    if (n < 1)
        throw std::invalid_argument("draw_fam_coefficient: n must be positive");
    // B = (1 + t)/2 carries the (1+t) powers as its first shape parameter.
    double a, b;
    if (n % 2 == 1) {
        const double m = (n - 1) / 2;
        a = m + 1;
        b = m + 1;
    } else {
        const double m = (n - 2) / 2;
        a = m + 2;
        b = m + 1;
    }
    if (weighted)
        a += 1;
    return 2.0 * beta_variate(a, b, rng) - 1.0;
}

MonicPoly draw_omega(int n, Rng& rng, bool weighted)
{
    if (n < 0)
        throw std::invalid_argument("draw_omega: negative degree");
    MonicPoly p;
    for (int k = 1; k <= n; ++k)
        p = fam_extend(p, draw_fam_coefficient(k, weighted, rng));
    return p;
}

double draw_perron_root(int n, bool positive, Rng& rng)
{
    const double e = 0.5 * (n - 1) * (n + 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double t = std::pow(1.0 - u(rng), 1.0 / (e + 1.0));
    if (positive)
        return t;
    return u(rng) < 0.5 ? -t : t;
}

}  // namespace perron
