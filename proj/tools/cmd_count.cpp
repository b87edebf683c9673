#include "commands.hpp"

#include "perron/io.hpp"
#include "perron/lattice.hpp"

#include <fstream>
#include <iostream>

namespace lab {

void add_count(CLI::App& app, const Globals& g, int& status)
{
    struct Args {
        int degree = 0;
        std::string house;
        double budget = 1e10;
        int cap = perron::default_irreducibility_cap;
        std::string out;
        std::string csv;
    };
    auto a = std::make_shared<Args>();
    CLI::App* cmd = app.add_subcommand("count", "Count integer monic polynomials with house below X");
    cmd->add_option("--degree,-N", a->degree, "Degree N")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--house,-X", a->house, "House bound X as p/q")->required();
    cmd->add_option("--budget", a->budget, "Refuse searches above this many nodes");
    cmd->add_option("--irreducibility-cap", a->cap, "Largest degree tested for irreducibility");
    cmd->add_option("--out,-o", a->out, "Write the report here instead of stdout");
    cmd->add_option("--csv", a->csv, "Also write every classified polynomial to this CSV");

    cmd->callback([a, &g, &status] {
        apply_workers(g);
        perron::Rational x;
        try {
            x = perron::parse_rational(a->house);
        } catch (const std::exception& e) {
            throw UsageError(std::string("--house: ") + e.what());
        }
        perron::LatticeOptions lo;
        lo.budget = a->budget;
        lo.irreducibility_cap = a->cap;
        lo.execution = g.execution();

        perron::CountReport r;
        try {
            r = perron::count_classes(a->degree, x, lo);
        } catch (const perron::BudgetExceeded& e) {
            std::cerr << "perron_lab count: " << e.what() << '\n';
            status = 1;
            return;
        } catch (const std::domain_error& e) {
            std::cerr << "perron_lab count: " << e.what() << '\n';
            status = 1;
            return;
        }
        const std::string report = perron::to_json(r);
        std::vector<std::string> outputs;
        if (a->out.empty()) {
            std::cout << report << '\n';
        } else {
            std::ofstream f(a->out);
            f << report << '\n';
            if (!f) {
                std::cerr << "perron_lab count: cannot write " << a->out << '\n';
                status = 1;
                return;
            }
            outputs.push_back(a->out);
        }
        if (!a->csv.empty()) {
            std::ofstream f(a->csv);
            perron::write_lattice_csv(f, a->degree, x, lo);
            if (!f) {
                std::cerr << "perron_lab count: cannot write " << a->csv << '\n';
                status = 1;
                return;
            }
            outputs.push_back(a->csv);
        }
        if (!outputs.empty()) {
            perron::RunManifest m;
            m.subcommand = "count";
            m.timestamp = perron::utc_timestamp();
            m.outputs = outputs;
            m.parameters = {{"degree", std::to_string(a->degree)},
                            {"house", perron::to_fraction_string(x)},
                            {"budget", std::to_string(a->budget)},
                            {"irreducibility_cap", std::to_string(a->cap)}};
            for (const auto& path : outputs)
                perron::write_manifest(m, path);
        }
    });
}

}  // namespace lab
