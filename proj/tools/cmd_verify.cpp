#include "commands.hpp"

#include "perron/verify.hpp"

#include <iostream>

namespace lab {

void add_verify(CLI::App& app, const Globals& g, int& status)
{
    struct Args {
        std::string suite = "all";
        std::optional<int> degree;
        std::optional<long> samples;
        std::optional<std::uint64_t> seed;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = app.add_subcommand("verify", "Run verification suites against exact values");
    std::vector<std::string> names = perron::suite_names();
    names.push_back("all");
    cmd->add_option("--suite", a->suite, "Suite name or all")->check(CLI::IsMember(names));
    cmd->add_option("--degree,-N", a->degree, "Degree override for single-degree suites")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", a->samples, "Sample count override")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", a->seed, "Seed (falls back to PERRON_LAB_SEED, then 1)");

    cmd->callback([a, &g, &status] {
        apply_workers(g);
        perron::SuiteOptions o;
        o.degree = a->degree;
        o.samples = a->samples;
        o.seed = resolve_seed(a->seed).value_or(1);
        o.execution = g.execution();

        const std::vector<std::string> which =
            a->suite == "all" ? perron::criterion_suite_names() : std::vector<std::string>{a->suite};
        std::vector<std::string> warnings;
        bool failed = false;
        for (const auto& name : which) {
            const perron::SuiteResult r = perron::run_suite(name, o);
            failed = failed || !r.passed();
            for (const auto& c : r.checks)
                if (!c.passed && c.conjectural)
                    warnings.push_back(r.suite + ": " + c.name + ": " + c.detail);
            if (g.json)
                std::cout << perron::to_json(r) << '\n';
            else
                std::cout << perron::to_text(r);
            std::cout.flush();
        }
        if (!warnings.empty()) {
            std::cerr << "warning: checks that rest on the conjectured formula failed:\n";
            for (const auto& w : warnings)
                std::cerr << "  " << w << '\n';
        }
        status = failed ? 1 : 0;
    });
}

}  // namespace lab
