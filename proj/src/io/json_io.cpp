#include "perron/io.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace perron {

std::string sample_record(const Sample& s)
{
    nlohmann::json j;
    j["coeffs"] = s.poly.coeffs;
    auto& roots = j["roots"] = nlohmann::json::array();
    for (const Complex& z : s.roots.roots)
        roots.push_back({z.real(), z.imag()});
    if (s.signature)
        j["signature"] = {s.signature->R, s.signature->S};
    else
        j["signature"] = nullptr;
    j["perron"] = s.perron;
    return j.dump();
}

Sample sample_from_record(const std::string& line)
{
    const nlohmann::json j = nlohmann::json::parse(line);
    Sample s;
    s.poly = MonicPoly(j.at("coeffs").get<std::vector<double>>());
    for (const auto& z : j.at("roots"))
        s.roots.roots.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
    if (s.roots.roots.size() != static_cast<std::size_t>(s.poly.degree()))
        throw std::invalid_argument("sample record: root count does not match the degree");
    const auto& sig = j.at("signature");
    if (!sig.is_null())
        s.signature = Signature{sig.at(0).get<int>(), sig.at(1).get<int>()};
    s.perron = j.at("perron").get<bool>();
    return s;
}

std::vector<Sample> read_jsonl(std::istream& in)
{
    std::vector<Sample> out;
    std::string line;
    long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(sample_from_record(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

void write_jsonl(std::ostream& out, const SampleBatch& batch)
{
    for (const auto& s : batch.samples)
        out << sample_record(s) << std::endl;
}

void write_root_csv(std::ostream& out, const SampleBatch& batch, double scale)
{
    std::ostringstream line;
    line.precision(17);
    out << "re,im\n";
    for (const auto& s : batch.samples)
        for (const Complex& z : s.roots.roots) {
            line.str({});
            line << scale * z.real() << ',' << scale * z.imag() << '\n';
            out << line.str();
        }
    out.flush();
}

void write_lattice_csv(std::ostream& out, int n, const Rational& x, const LatticeOptions& options)
{
    out << "coeffs,strict,R,S,perron,irreducible\n";
    for (const auto& hit : lattice_points(n, x, options)) {
        const LatticeClassification c = classify(hit.poly, x, options.irreducibility_cap);
        out << '"';
        for (std::size_t i = 0; i < hit.poly.coeffs.size(); ++i)
            out << (i ? " " : "") << hit.poly.coeffs[i].get_str();
        out << "\"," << hit.strict << ',' << c.signature.R << ',' << c.signature.S << ',' << c.perron << ',';
        if (n <= options.irreducibility_cap)
            out << c.irreducible;
        out << '\n';
    }
    out.flush();
}

std::string to_json(const RunManifest& m)
{
    nlohmann::json j;
    j["subcommand"] = m.subcommand;
    j["parameters"] = m.parameters;
    j["seed"] = m.seed;
    j["version"] = m.version;
    j["timestamp"] = m.timestamp;
    j["outputs"] = m.outputs;
    return j.dump(2);
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream o;
    o << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return o.str();
}

std::string write_manifest(const RunManifest& m, const std::string& data_path)
{
    const std::string path = data_path + ".manifest.json";
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path + " for writing");
    f << to_json(m) << '\n';
    if (!f)
        throw std::runtime_error("write failed: " + path);
    return path;
}

}  // namespace perron
