#include "commands.hpp"

#include "perron/io.hpp"
#include "perron/stats.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

namespace lab {

namespace {

struct HistArgs {
    std::string input;
    std::string space = "omega";
    int degree = 0;
    long count = 0;
    std::optional<std::uint64_t> seed;
    std::string method = "exact";
    std::string quantity = "arg";
    int bins = 50;
    std::optional<double> lo, hi;
    bool normalized = false;
    std::string report;
    std::string out;
};

struct Range {
    double lo, hi;
};

Range default_range(const std::string& q, int n)
{
    if (q == "arg")
        return {0.0, 2.0 * std::numbers::pi};
    if (q == "modulus" || q == "abs-aN")
        return {0.0, 1.0};
    if (q == "aN")
        return {-1.0, 1.0};
    if (q == "log-aN")
        return {-10.0, 0.0};
    if (q == "F")
        return {0.0, 100.0 * std::log(std::max(n, 2))};
    return {-0.5, n + 0.5};
}

std::vector<double> values(const perron::SampleBatch& b, const std::string& q)
{
    std::vector<double> v;
    for (const auto& s : b.samples) {
        const double an = s.poly.a(s.poly.degree());
        if (q == "arg" || q == "modulus") {
            for (const perron::Complex& z : s.roots.roots) {
                if (q == "modulus") {
                    v.push_back(std::abs(z));
                } else if (z != perron::Complex(0.0, 0.0)) {
                    const double t = std::arg(z);
                    v.push_back(t < 0 ? t + 2.0 * std::numbers::pi : t);
                }
            }
        } else if (q == "aN") {
            v.push_back(an);
        } else if (q == "abs-aN") {
            v.push_back(std::abs(an));
        } else if (q == "log-aN") {
            if (an != 0.0)
                v.push_back(std::log(std::abs(an)));
        } else if (q == "F") {
            const double f = perron::f_statistic(s.poly);
            if (std::isfinite(f))
                v.push_back(f);
        } else if (s.signature) {
            v.push_back(s.signature->R);
        }
    }
    return v;
}

}  // namespace

void add_hist(CLI::App& app, const Globals& g, int& status)
{
    auto a = std::make_shared<HistArgs>();
    CLI::App* cmd = app.add_subcommand("hist", "Histogram of a root or coefficient statistic, with test reports");
    cmd->add_option("--input,-i", a->input, "JSON-lines file written by sample (otherwise sample afresh)");
    cmd->add_option("--space", a->space, "omega or perron: the reference distribution")
        ->check(CLI::IsMember({"omega", "perron"}));
    cmd->add_option("--degree,-N", a->degree, "Degree when sampling afresh")->check(CLI::PositiveNumber);
    cmd->add_option("--count", a->count, "Samples when sampling afresh")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", a->seed, "Seed (falls back to PERRON_LAB_SEED)");
    cmd->add_option("--method", a->method, "exact, weighted or mh")->check(CLI::IsMember({"exact", "weighted", "mh"}));
    cmd->add_option("--quantity", a->quantity, "Statistic to bin")
        ->check(CLI::IsMember({"arg", "modulus", "aN", "abs-aN", "log-aN", "F", "real-roots"}));
    CLI::Option* bins = cmd->add_option("--bins", a->bins, "Number of bins (real-roots: one per count)");
    bins->check(CLI::PositiveNumber);
    cmd->add_option("--lo", a->lo, "Left edge");
    cmd->add_option("--hi", a->hi, "Right edge");
    cmd->add_flag("--normalized", a->normalized, "Densities instead of counts");
    cmd->add_option("--report", a->report, "Write test reports (JSON array) to this file");
    cmd->add_option("--out,-o", a->out, "CSV output (default stdout)");

    cmd->callback([a, bins, &g, &status] {
        apply_workers(g);
        perron::SampleBatch batch;
        const bool perron_space = a->space == "perron";
        std::optional<std::uint64_t> seed;
        if (!a->input.empty()) {
            std::ifstream in(a->input);
            if (!in) {
                std::cerr << "perron_lab hist: cannot open " << a->input << '\n';
                status = 1;
                return;
            }
            try {
                batch.samples = perron::read_jsonl(in);
            } catch (const std::exception& e) {
                std::cerr << "perron_lab hist: " << a->input << ": " << e.what() << '\n';
                status = 1;
                return;
            }
            if (batch.samples.empty()) {
                std::cerr << "perron_lab hist: no samples in " << a->input << '\n';
                status = 1;
                return;
            }
            batch.degree = batch.samples.front().poly.degree();
            batch.requested = static_cast<long>(batch.samples.size());
            batch.config.method = perron_space ? perron::SamplerMethod::perron_weighted : perron::SamplerMethod::fam_exact;
        } else {
            if (a->degree <= 0 || a->count <= 0)
                throw UsageError("hist needs --input, or --degree and --count to sample");
            seed = resolve_seed(a->seed);
            if (!seed)
                throw UsageError("hist needs --seed or PERRON_LAB_SEED when sampling");
            perron::SamplerConfig c;
            c.seed = *seed;
            c.execution = g.execution();
            if (!perron_space)
                c.method = perron::SamplerMethod::fam_exact;
            else if (a->method == "mh")
                c.method = perron::SamplerMethod::perron_mh;
            else if (a->method == "weighted")
                c.method = perron::SamplerMethod::perron_weighted;
            else
                c.method = perron::SamplerMethod::perron_exact;
            batch = perron::sample(a->degree, a->count, c);
        }

        const Range r = default_range(a->quantity, batch.degree);
        if (a->quantity == "real-roots" && bins->count() == 0)
            a->bins = batch.degree + 1;
        const perron::Histogram h =
            perron::make_histogram(values(batch, a->quantity), a->lo.value_or(r.lo), a->hi.value_or(r.hi), a->bins,
                                   a->normalized);
        std::vector<std::string> outputs;
        if (a->out.empty()) {
            std::cout << perron::to_csv(h);
        } else {
            std::ofstream f(a->out);
            f << perron::to_csv(h);
            if (!f) {
                std::cerr << "perron_lab hist: cannot write " << a->out << '\n';
                status = 1;
                return;
            }
            outputs.push_back(a->out);
        }

        if (!a->report.empty()) {
            std::vector<perron::TestReport> reports;
            reports.push_back(perron::angular_ks(batch));
            reports.push_back(perron::radial_summary(batch));
            reports.push_back(perron::empirical_moment(batch, perron::make_rational(2)));
            reports.push_back(perron::empirical_log_aN(batch));
            std::ofstream f(a->report);
            f << perron::to_json(reports) << '\n';
            if (!f) {
                std::cerr << "perron_lab hist: cannot write " << a->report << '\n';
                status = 1;
                return;
            }
            outputs.push_back(a->report);
        }
        if (!outputs.empty()) {
            perron::RunManifest m;
            m.subcommand = "hist";
            m.seed = seed.value_or(0);
            m.timestamp = perron::utc_timestamp();
            m.outputs = outputs;
            m.parameters = {{"input", a->input},
                            {"space", a->space},
                            {"degree", std::to_string(batch.degree)},
                            {"count", std::to_string(batch.samples.size())},
                            {"method", a->input.empty() ? a->method : "from input"},
                            {"quantity", a->quantity},
                            {"bins", std::to_string(a->bins)},
                            {"lo", std::to_string(a->lo.value_or(r.lo))},
                            {"hi", std::to_string(a->hi.value_or(r.hi))},
                            {"normalized", a->normalized ? "true" : "false"}};
            for (const auto& path : outputs)
                perron::write_manifest(m, path);
        }
    });
}

}  // namespace lab
