#include "perron/samplers.hpp"

namespace perron {

SampleBatch sample(int n, long count, const SamplerConfig& config, std::optional<Signature> signature)
{
    switch (config.method) {
    case SamplerMethod::fam_exact:
        return sample_omega(n, count, config);
    case SamplerMethod::perron_exact:
        return sample_perron_exact(n, count, config);
    case SamplerMethod::perron_weighted:
        return sample_perron_weighted(n, count, config);
    case SamplerMethod::perron_mh:
        return sample_perron_mh(n, count, config);
    case SamplerMethod::signature_reject:
        if (!signature)
            throw std::invalid_argument("signature_reject needs a target signature");
        return sample_signature(n, signature->R, signature->S, count, config);
    }
    throw std::invalid_argument("unknown sampler method");
}

}  // namespace perron
