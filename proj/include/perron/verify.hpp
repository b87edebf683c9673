#pragma once

#include "perron/execution.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perron {

struct CheckResult {
    std::string name;
    bool passed = false;
    /// Depends on a conjectured formula: reported, never fatal.
    bool conjectural = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    /// Acceptance criterion number, 0 for auxiliary suites.
    int criterion = 0;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    /// Every non-conjectural check passed.
    bool passed() const;
    bool conjectural_failures() const;
};

struct SuiteOptions {
    /// Overrides for suites that take a single degree or sample size.
    std::optional<int> degree;
    std::optional<long> samples;
    std::uint64_t seed = 1;
    Execution execution = Execution::parallel;
};

/// Suites in criterion order, then auxiliary ones.
std::vector<std::string> suite_names();
/// Only the twelve criterion suites, in order.
std::vector<std::string> criterion_suite_names();
SuiteResult run_suite(std::string_view name, const SuiteOptions& options = {});
/// The twelve criterion suites.
std::vector<SuiteResult> run_all(const SuiteOptions& options = {});

std::string to_json(const SuiteResult& r);
/// One line per check, then a summary line.
std::string to_text(const SuiteResult& r);

}  // namespace perron
