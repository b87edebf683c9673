// Runs the twelve criterion suites and prints one verdict line each.
#include "perron/verify.hpp"

#include <cstdlib>
#include <exception>
#include <iostream>

int main(int argc, char** argv)
{
    perron::SuiteOptions opts;
    if (const char* s = std::getenv("PERRON_LAB_SEED"))
        opts.seed = std::strtoull(s, nullptr, 10);
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";

    int failures = 0, index = 0;
    for (const auto& name : perron::criterion_suite_names()) {
        const int criterion = ++index;
        perron::SuiteResult r;
        try {
            r = perron::run_suite(name, opts);
        } catch (const std::exception& e) {
            r.suite = name;
            r.criterion = criterion;
            r.checks.push_back({"suite raised", false, false, e.what()});
        }
        const bool ok = r.passed();
        failures += !ok;
        std::cout << "criterion " << r.criterion << " (" << r.suite << "): " << (ok ? "PASS" : "FAIL");
        if (ok && r.conjectural_failures())
            std::cout << " with conjectural warnings";
        std::cout << "  [" << r.seconds << " s]\n";
        if (verbose || !ok || r.conjectural_failures())
            for (const auto& c : r.checks)
                if (verbose || !c.passed)
                    std::cout << "    " << (c.passed ? "ok   " : (c.conjectural ? "warn " : "FAIL ")) << c.name << ": "
                              << c.detail << '\n';
        std::cout.flush();
    }
    return failures == 0 ? 0 : 1;
}
