#include "perron/io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

using namespace perron;

TEST(Jsonl, RoundTrip)
{
    SamplerConfig c;
    c.seed = 3;
    c.method = SamplerMethod::perron_exact;
    const SampleBatch b = sample(4, 20, c);
    std::stringstream s;
    write_jsonl(s, b);
    std::string line;
    long lines = 0;
    while (std::getline(s, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["coeffs"].size(), 4u);
        EXPECT_EQ(j["roots"].size(), 4u);
        EXPECT_TRUE(j["perron"].get<bool>());
        ++lines;
    }
    EXPECT_EQ(lines, 20);

    std::stringstream again;
    write_jsonl(again, b);
    const std::vector<Sample> back = read_jsonl(again);
    ASSERT_EQ(back.size(), b.samples.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].poly.coeffs, b.samples[i].poly.coeffs);
        EXPECT_EQ(back[i].roots.roots, b.samples[i].roots.roots);
        EXPECT_EQ(back[i].signature, b.samples[i].signature);
    }
}

TEST(Jsonl, TruncatedStreamKeepsWholeLines)
{
    SamplerConfig c;
    c.seed = 5;
    const SampleBatch b = sample(3, 5, c);
    std::stringstream s;
    write_jsonl(s, b);
    std::string text = s.str();
    const std::size_t cut = text.find('\n', text.size() / 2);
    std::stringstream head(text.substr(0, cut + 1));
    EXPECT_NO_THROW(read_jsonl(head));
    std::stringstream broken(text.substr(0, cut + 5));
    EXPECT_THROW(read_jsonl(broken), std::invalid_argument);
}

TEST(RootCsv, ScaledCoordinates)
{
    SamplerConfig c;
    c.seed = 6;
    const SampleBatch b = sample(2, 3, c);
    std::stringstream s;
    write_root_csv(s, b, 5.0);
    std::string line;
    std::getline(s, line);
    EXPECT_EQ(line, "re,im");
    long rows = 0;
    while (std::getline(s, line)) {
        const double re = std::stod(line.substr(0, line.find(',')));
        const double im = std::stod(line.substr(line.find(',') + 1));
        EXPECT_LE(std::hypot(re, im), 5.0 + 1e-9);
        ++rows;
    }
    EXPECT_EQ(rows, 6);
}

TEST(Manifest, Fields)
{
    RunManifest m;
    m.subcommand = "sample";
    m.seed = 7;
    m.parameters = {{"degree", "21"}};
    m.outputs = {"roots.csv"};
    m.timestamp = utc_timestamp();
    const auto j = nlohmann::json::parse(to_json(m));
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["parameters"]["degree"], "21");
    EXPECT_EQ(j["version"], tool_version);
    EXPECT_EQ(j["timestamp"].get<std::string>().size(), 20u);
}

TEST(LatticeCsv, Rows)
{
    std::stringstream s;
    write_lattice_csv(s, 2, make_rational(1));
    std::string line;
    long rows = -1;
    while (std::getline(s, line))
        ++rows;
    EXPECT_EQ(rows, 9);
}
