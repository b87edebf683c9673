#include "commands.hpp"

#include "perron/io.hpp"
#include "perron/samplers.hpp"

#include <fstream>
#include <iostream>

namespace lab {

namespace {

struct SampleArgs {
    std::string space = "omega";
    int degree = 0;
    long count = 0;
    std::optional<std::uint64_t> seed;
    std::string method;
    std::vector<int> signature;
    double mh_step = 0.0;
    long burnin = 10000;
    long thin = 100;
    int chains = 1;
    bool positive = false;
    bool figure2 = false;
    double scale = 5.0;
    std::string out;
};

// Short names depend on the space: "exact" is the Fam sampler on Omega_N
// and the rejection sampler on the Perron subset.
perron::SamplerMethod resolve_method(const SampleArgs& a)
{
    if (a.space == "signature") {
        if (a.method != "reject" && a.method != "signature_reject")
            throw UsageError("--space signature only supports --method reject");
        return perron::SamplerMethod::signature_reject;
    }
    if (a.method == "exact")
        return a.space == "perron" ? perron::SamplerMethod::perron_exact : perron::SamplerMethod::fam_exact;
    if (a.method == "weighted")
        return perron::SamplerMethod::perron_weighted;
    if (a.method == "mh")
        return perron::SamplerMethod::perron_mh;
    try {
        return perron::parse_sampler_method(a.method);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

void add_sample(CLI::App& app, const Globals& g, int& status)
{
    auto a = std::make_shared<SampleArgs>();
    CLI::App* cmd = app.add_subcommand("sample", "Draw random polynomials from Omega_N or a subset of it");
    cmd->add_option("--space", a->space, "omega, perron or signature")
        ->check(CLI::IsMember({"omega", "perron", "signature"}));
    cmd->add_option("--degree,-N", a->degree, "Degree N")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--count", a->count, "Number of samples")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--seed", a->seed, "Seed (falls back to PERRON_LAB_SEED)");
    cmd->add_option("--method", a->method, "exact, weighted, mh, reject, or a full method name")->required();
    cmd->add_option("--signature", a->signature, "R S for --space signature")->expected(2);
    cmd->add_option("--mh-step", a->mh_step, "MH step scale (0: default for the degree)");
    cmd->add_option("--burnin", a->burnin, "MH burn-in steps per chain");
    cmd->add_option("--thin", a->thin, "MH steps between emitted states")->check(CLI::PositiveNumber);
    cmd->add_option("--chains", a->chains, "Independent MH chains")->check(CLI::PositiveNumber);
    cmd->add_flag("--positive", a->positive, "Perron root in [0, 1] only");
    cmd->add_flag("--figure2", a->figure2, "Write root coordinates as CSV instead of JSON lines");
    cmd->add_option("--scale", a->scale, "Root scale for --figure2");
    cmd->add_option("--out,-o", a->out, "Output file (default stdout, no manifest)");

    cmd->callback([a, &g, &status] {
        apply_workers(g);
        const auto seed = resolve_seed(a->seed);
        if (!seed)
            throw UsageError("sample needs --seed or PERRON_LAB_SEED");
        perron::SamplerConfig c;
        c.seed = *seed;
        c.method = resolve_method(*a);
        c.mh_step = a->mh_step;
        c.mh_burnin = a->burnin;
        c.mh_thin = a->thin;
        c.mh_chains = a->chains;
        c.positive_perron = a->positive;
        c.execution = g.execution();
        if (a->space == "perron" && c.method == perron::SamplerMethod::fam_exact)
            throw UsageError("--space perron needs a Perron method");
        if (a->space == "omega" && c.method != perron::SamplerMethod::fam_exact)
            throw UsageError("--space omega only supports --method exact");
        std::optional<perron::Signature> sig;
        if (c.method == perron::SamplerMethod::signature_reject) {
            if (a->signature.size() != 2)
                throw UsageError("--space signature needs --signature R S");
            sig = perron::Signature{a->signature[0], a->signature[1]};
        }

        perron::SampleBatch batch;
        try {
            batch = perron::sample(a->degree, a->count, c, sig);
        } catch (const perron::SamplerStarvation& e) {
            std::cerr << "perron_lab sample: " << e.what() << '\n';
            status = 1;
            return;
        } catch (const std::invalid_argument& e) {
            std::cerr << "perron_lab sample: " << e.what() << '\n';
            status = 1;
            return;
        }

        std::ofstream file;
        if (!a->out.empty()) {
            file.open(a->out);
            if (!file) {
                std::cerr << "perron_lab sample: cannot open " << a->out << '\n';
                status = 1;
                return;
            }
        }
        std::ostream& out = a->out.empty() ? std::cout : file;
        if (a->figure2)
            perron::write_root_csv(out, batch, a->scale);
        else
            perron::write_jsonl(out, batch);
        if (!out) {
            std::cerr << "perron_lab sample: write failed\n";
            status = 1;
            return;
        }
        std::cerr << "accepted " << batch.stats.accepted << " of " << batch.stats.attempts << " proposals, "
                  << batch.stats.indeterminate << " indeterminate\n";

        if (!a->out.empty()) {
            perron::RunManifest m;
            m.subcommand = "sample";
            m.seed = *seed;
            m.timestamp = perron::utc_timestamp();
            m.outputs = {a->out};
            m.parameters = {{"space", a->space},
                            {"degree", std::to_string(a->degree)},
                            {"count", std::to_string(a->count)},
                            {"method", std::string(perron::to_string(c.method))},
                            {"mh_step", std::to_string(c.mh_step > 0 ? c.mh_step : perron::mh_default_step(a->degree))},
                            {"burnin", std::to_string(a->burnin)},
                            {"thin", std::to_string(a->thin)},
                            {"chains", std::to_string(a->chains)},
                            {"positive", a->positive ? "true" : "false"},
                            {"format", a->figure2 ? "figure2-csv" : "jsonl"},
                            {"scale", std::to_string(a->scale)},
                            {"execution", g.serial ? "serial" : "parallel"}};
            if (sig)
                m.parameters["signature"] = std::to_string(sig->R) + "," + std::to_string(sig->S);
            m.parameters["accepted"] = std::to_string(batch.stats.accepted);
            m.parameters["attempts"] = std::to_string(batch.stats.attempts);
            m.parameters["indeterminate"] = std::to_string(batch.stats.indeterminate);
            perron::write_manifest(m, a->out);
        }
    });
}

}  // namespace lab
