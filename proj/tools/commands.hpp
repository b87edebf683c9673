#pragma once

#include "perron/execution.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lab {

/// Thrown for arguments that parse but make no sense together (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    int workers = 0;
    bool serial = false;
    bool json = false;

    perron::Execution execution() const
    {
        return serial ? perron::Execution::serial : perron::Execution::parallel;
    }
};

/// --seed, else PERRON_LAB_SEED, else nothing.
std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t>& flag);
/// Applies --workers to the OpenMP runtime.
void apply_workers(const Globals& g);

// Each registers a subcommand whose callback stores its exit code in status.
void add_formulas(CLI::App& app, const Globals& g, int& status);
void add_sample(CLI::App& app, const Globals& g, int& status);
void add_count(CLI::App& app, const Globals& g, int& status);
void add_verify(CLI::App& app, const Globals& g, int& status);
void add_hist(CLI::App& app, const Globals& g, int& status);

}  // namespace lab
