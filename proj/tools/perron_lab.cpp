#include "commands.hpp"

#include <omp.h>

#include <cstdlib>
#include <iostream>

namespace lab {

std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag)
{
    if (flag)
        return flag;
    if (const char* env = std::getenv("PERRON_LAB_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw UsageError("PERRON_LAB_SEED is not an unsigned integer: " + std::string(env));
        return v;
    }
    return std::nullopt;
}

void apply_workers(const Globals& g)
{
    if (g.workers > 0)
        omp_set_num_threads(g.workers);
}

}  // namespace lab

int main(int argc, char** argv)
{
    CLI::App app{"Volumes, samplers and lattice counts for polynomials with roots in the unit disk"};
    app.require_subcommand(1);
    app.fallthrough();

    lab::Globals g;
    app.add_option("--workers", g.workers, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--serial", g.serial, "Use the serial reference kernels");
    app.add_flag("--json", g.json, "Machine-readable output");

    int status = 0;
    lab::add_formulas(app, g, status);
    lab::add_sample(app, g, status);
    lab::add_count(app, g, status);
    lab::add_verify(app, g, status);
    lab::add_hist(app, g, status);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const lab::UsageError& e) {
        std::cerr << "perron_lab: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "perron_lab: " << e.what() << '\n';
        return 1;
    }
    return status;
}
