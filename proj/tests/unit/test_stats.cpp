#include "perron/exact.hpp"
#include "perron/stats.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>

using namespace perron;

namespace {

SampleBatch omega_batch(int n, long count, std::uint64_t seed)
{
    SamplerConfig c;
    c.seed = seed;
    return sample_omega(n, count, c);
}

}  // namespace

TEST(FStatistic, PlugIn)
{
    EXPECT_NEAR(f_statistic(MonicPoly({0.0, 0.5})), std::log(1.5) + std::log(2.0) / 2, 1e-15);
    EXPECT_NEAR(f_statistic(MonicPoly({-1.0})), std::log(2.0), 1e-15);
    EXPECT_TRUE(std::isinf(f_statistic(MonicPoly({0.5, 0.0}))));
}

TEST(FStatistic, NonNegativeAndLogarithmicOnOmega)
{
    for (int n : {16, 32, 64}) {
        const SampleBatch b = omega_batch(n, 500, 70 + n);
        for (const auto& s : b.samples) {
            const double f = f_statistic(s.poly);
            if (std::isfinite(f)) {
                ASSERT_GE(f, -1e-12);
            }
        }
        const FStatisticSummary f = f_statistic_summary(b);
        EXPECT_LE(f.mean, 100.0 * std::log(n));
        EXPECT_LT(f.tail_fraction, 0.01);
    }
}

TEST(Histogram, TotalsAndEdges)
{
    const Histogram h = make_histogram({0.0, 0.1, 0.5, 0.99, 1.0, 1.5, -0.2}, 0.0, 1.0, 4);
    ASSERT_EQ(h.edges.size(), 5u);
    for (std::size_t i = 1; i < h.edges.size(); ++i)
        EXPECT_LT(h.edges[i - 1], h.edges[i]);
    long sum = 0;
    for (long c : h.counts)
        sum += c;
    EXPECT_EQ(sum + h.outside, h.total);
    EXPECT_EQ(h.total, 7);
    EXPECT_EQ(h.outside, 2);
    EXPECT_EQ(h.counts.back(), 2);  // 0.99 and the closed right edge
    const std::string csv = to_csv(h);
    EXPECT_EQ(csv.substr(0, 15), "edge,count\n0,2\n");
    EXPECT_THROW(make_histogram({}, 1.0, 0.0, 3), std::invalid_argument);
}

TEST(KolmogorovSmirnov, StatisticAndTail)
{
    std::vector<double> grid;
    for (int i = 0; i < 1000; ++i)
        grid.push_back((i + 0.5) / 1000.0);
    EXPECT_NEAR(ks_statistic_uniform(grid, 0.0, 1.0), 0.0005, 1e-12);
    EXPECT_NEAR(ks_statistic({0.5}, [](double x) { return x; }), 0.5, 1e-12);
    EXPECT_DOUBLE_EQ(ks_pvalue(0.0, 100), 1.0);
    EXPECT_GT(ks_pvalue(0.02, 1000), ks_pvalue(0.05, 1000));
    // Kolmogorov's 5% point 1.358 / sqrt(n).
    EXPECT_NEAR(ks_pvalue(1.358 / std::sqrt(1e6), 1000000), 0.05, 0.002);
}

TEST(Autocorrelation, IndependentAndAutoregressive)
{
    Rng rng = substream(3, 0);
    std::normal_distribution<double> z;
    std::vector<double> iid, ar;
    double x = 0.0;
    const double rho = 0.9;
    for (int i = 0; i < 200000; ++i) {
        iid.push_back(z(rng));
        x = rho * x + std::sqrt(1 - rho * rho) * z(rng);
        ar.push_back(x);
    }
    EXPECT_NEAR(integrated_autocorrelation_time(iid), 1.0, 0.1);
    EXPECT_NEAR(integrated_autocorrelation_time(ar), (1 + rho) / (1 - rho), 2.0);

    std::vector<int> chain(ar.size(), 0);
    const MeanEstimate naive = mean_estimate(ar);
    const MeanEstimate adj = correlated_mean_estimate(ar, chain);
    EXPECT_NEAR(adj.se / naive.se, std::sqrt(19.0), 0.6);
}

TEST(Reports, MomentsAgainstExactValues)
{
    const SampleBatch b = omega_batch(5, 50000, 17);
    const TestReport one = empirical_moment(b, make_rational(1));
    EXPECT_DOUBLE_EQ(one.empirical, 1.0);
    EXPECT_TRUE(one.passed);
    EXPECT_TRUE(empirical_moment(b, make_rational(2)).passed);
    EXPECT_TRUE(empirical_log_aN(b).passed);
    const TestReport radial = radial_summary(b);
    EXPECT_NEAR(radial.reference, -23.0 / 75.0, 1e-15);
    EXPECT_TRUE(radial.passed);
}

TEST(Reports, RealRootsAreConjectural)
{
    const SampleBatch two = omega_batch(2, 50000, 18);
    const TestReport r = empirical_real_roots(two);
    EXPECT_TRUE(r.conjectural);
    EXPECT_NEAR(r.reference, 2.0 / 3.0, 1e-15);
    EXPECT_TRUE(r.passed);
    // 43/35 is the sixth table entry, which belongs to degree 5.
    const TestReport five = empirical_real_roots(omega_batch(5, 50000, 19));
    EXPECT_NEAR(five.reference, 43.0 / 35.0, 1e-15);
    EXPECT_TRUE(five.passed);
}

TEST(Reports, AbsoluteValueAtPoint)
{
    const SampleBatch two = omega_batch(2, 50000, 21);
    const TestReport at0 = empirical_abs_PT(two, make_rational(0));
    EXPECT_NEAR(at0.reference, 0.5, 1e-15);
    EXPECT_TRUE(at0.passed);
    const TestReport at1 = empirical_abs_PT(two, make_rational(1));
    EXPECT_NEAR(at1.reference, 4.0 / 3.0, 1e-15);
    EXPECT_TRUE(at1.passed);
    const TestReport four = empirical_abs_PT(omega_batch(4, 50000, 22), make_rational(1, 2));
    EXPECT_TRUE(four.conjectural);
    EXPECT_TRUE(four.passed) << four.empirical << " vs " << four.reference;
    EXPECT_THROW(empirical_abs_PT(two, make_rational(2)), std::domain_error);
}

TEST(Reports, ZerosInInterval)
{
    const SampleBatch b = omega_batch(6, 50000, 23);
    const TestReport r = empirical_zeros_in_interval(b, make_rational(-1, 2), make_rational(1, 2));
    EXPECT_TRUE(r.conjectural);
    EXPECT_TRUE(r.passed) << r.empirical << " vs " << r.reference;
}

TEST(Reports, FractionsAndDomain)
{
    const SampleBatch b = omega_batch(3, 30000, 24);
    EXPECT_TRUE(perron_fraction(b).passed);
    EXPECT_TRUE(signature_fraction(b, {3, 0}).passed);
    EXPECT_TRUE(signature_fraction(b, {1, 1}).passed);
    EXPECT_THROW(signature_fraction(omega_batch(5, 10, 1), {3, 1}), std::domain_error);

    SamplerConfig c;
    c.seed = 4;
    c.method = SamplerMethod::perron_exact;
    const SampleBatch p = sample_perron_exact(3, 100, c);
    EXPECT_THROW(empirical_real_roots(p), std::invalid_argument);
}

TEST(Angles, ConjugationSymmetry)
{
    const SampleBatch b = omega_batch(8, 5000, 25);
    std::vector<double> args;
    for (const auto& s : b.samples)
        for (const Complex& z : s.roots.roots)
            if (z.imag() != 0.0)
                args.push_back(std::arg(z) < 0 ? std::arg(z) + 2 * std::numbers::pi : std::arg(z));
    const Histogram h = make_histogram(args, 0.0, 2.0 * std::numbers::pi, 40);
    for (std::size_t i = 0; i < 20; ++i)
        EXPECT_EQ(h.counts[i], h.counts[39 - i]);
}

TEST(Angles, SingleEquimodularSample)
{
    const int n = 200;
    std::vector<double> coeffs(n, 0.0);
    coeffs.back() = -0.5;
    SampleBatch b;
    b.degree = n;
    Sample s;
    s.poly = MonicPoly(coeffs);
    s.roots = find_roots(s.poly);
    b.samples.push_back(s);
    for (const Complex& z : s.roots.roots)
        EXPECT_NEAR(std::abs(z), std::pow(0.5, 1.0 / n), 1e-12);
    EXPECT_LT(angular_ks(b).empirical, 0.01);
}

TEST(Reports, JsonShape)
{
    const TestReport r = z_report("x", 1.0, 0.1, 1.2);
    EXPECT_TRUE(r.passed);
    const auto j = nlohmann::json::parse(to_json(std::vector<TestReport>{r, r}));
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j[0]["name"], "x");
    EXPECT_EQ(j[1]["conjectural"], false);
}
