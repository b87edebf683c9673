#pragma once

#include "perron/lattice.hpp"
#include "perron/samplers.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace perron {

inline constexpr const char* tool_version = "0.3.0";

/// {"coeffs": [...], "roots": [[re, im], ...], "signature": [R, S], "perron": bool}.
/// The signature is null when it could not be decided.
std::string sample_record(const Sample& s);

/// Inverse of sample_record. Chain ids are not stored, so records read back
/// count as independent draws.
Sample sample_from_record(const std::string& line);
/// Reads records until end of input; blank lines are skipped.
std::vector<Sample> read_jsonl(std::istream& in);

/// One record per line, flushed as it goes so that a cut-off file still
/// parses line by line.
void write_jsonl(std::ostream& out, const SampleBatch& batch);

/// "re,im" per root, every root multiplied by scale.
void write_root_csv(std::ostream& out, const SampleBatch& batch, double scale = 5.0);

/// "coeffs,strict,R,S,perron,irreducible" for every lattice point; the
/// irreducibility column is empty above the cap.
void write_lattice_csv(std::ostream& out, int n, const Rational& x, const LatticeOptions& options = {});

struct RunManifest {
    std::string subcommand;
    /// Every parameter as it was parsed, rendered as text.
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string version = tool_version;
    std::string timestamp;
    std::vector<std::string> outputs;
};

std::string to_json(const RunManifest& m);
/// UTC, ISO 8601.
std::string utc_timestamp();
/// Writes <data_path>.manifest.json next to the data file.
std::string write_manifest(const RunManifest& m, const std::string& data_path);

}  // namespace perron
