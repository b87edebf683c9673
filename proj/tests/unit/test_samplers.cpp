#include "perron/exact.hpp"
#include "perron/samplers.hpp"
#include "perron/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace perron;

namespace {

SamplerConfig config(std::uint64_t seed, SamplerMethod m = SamplerMethod::fam_exact)
{
    SamplerConfig c;
    c.seed = seed;
    c.method = m;
    return c;
}

MeanEstimate mean_of(const SampleBatch& b, double (*f)(const Sample&))
{
    std::vector<double> v;
    for (const auto& s : b.samples)
        v.push_back(f(s));
    return mean_estimate(v);
}

double abs_last(const Sample& s)
{
    return std::abs(s.poly.a(s.poly.degree()));
}

void expect_within_3se(const MeanEstimate& m, double reference)
{
    EXPECT_LE(std::abs(m.mean - reference), 3.0 * m.se) << "mean " << m.mean << " reference " << reference << " se " << m.se;
}

}  // namespace

TEST(OmegaSampler, LinearIsUniform)
{
    const SampleBatch b = sample_omega(1, 20000, config(11));
    std::vector<double> a;
    for (const auto& s : b.samples)
        a.push_back(s.poly.a(1));
    EXPECT_GT(ks_pvalue(ks_statistic_uniform(a, -1.0, 1.0), static_cast<long>(a.size())), 1e-3);
}

// Settles the product range of the moment formula for even degree.
TEST(OmegaSampler, EvenDegreeMomentsMatchMonteCarlo)
{
    for (int n : {2, 4}) {
        const SampleBatch b = sample_omega(n, 200000, config(20 + n));
        expect_within_3se(mean_of(b, abs_last), to_double(moment_M(make_rational(2), n)));
        std::vector<double> a1, a1sq, an;
        for (const auto& s : b.samples) {
            a1.push_back(s.poly.a(1));
            a1sq.push_back(s.poly.a(1) * s.poly.a(1));
            an.push_back(s.poly.a(n));
        }
        expect_within_3se(mean_estimate(a1), to_double(coeff_mean_A(n, 1)));
        expect_within_3se(mean_estimate(an), to_double(coeff_mean_A(n, n)));
        expect_within_3se(mean_estimate(a1sq), to_double(coeff_second_moment_A(n, 1, 1)));
    }
}

TEST(OmegaSampler, MeanAbsoluteConstantTermDegreeFive)
{
    const SampleBatch b = sample_omega(5, 100000, config(5));
    expect_within_3se(mean_of(b, abs_last), 5.0 / 16.0);
    EXPECT_EQ(b.samples.size(), 100000u);
    for (const auto& s : b.samples)
        ASSERT_TRUE(is_in_omega(s.roots));
}

TEST(OmegaSampler, ConstantTermLawMatchesClosedForm)
{
    for (int n : {3, 6, 11}) {
        const SampleBatch b = sample_omega(n, 100000, config(300 + n));
        std::vector<double> v;
        for (const auto& s : b.samples)
            v.push_back(abs_last(s));
        const double d = ks_statistic(v, [n](double x) { return cdf_H(x, n); });
        EXPECT_GT(ks_pvalue(d, static_cast<long>(v.size())), 1e-3) << "N = " << n << ", D = " << d;
    }
}

TEST(PerronSampler, ExactMatchesMoments)
{
    const SampleBatch b = sample_perron_exact(5, 100000, config(7, SamplerMethod::perron_exact));
    for (const auto& s : b.samples)
        ASSERT_TRUE(s.perron && is_in_omega(s.roots));
    expect_within_3se(mean_of(b, abs_last), to_double(perron_moment(make_rational(2), 5)));
}

TEST(PerronSampler, QuadraticMomentIsThreeTenths)
{
    const SampleBatch b = sample_perron_exact(2, 200000, config(8, SamplerMethod::perron_exact));
    expect_within_3se(mean_of(b, abs_last), 0.3);
    // Acceptance of the Q(1)/2 step is E Q(1)/2 over Omega_1.
    EXPECT_NEAR(b.stats.rate(), 0.5, 0.01);
}

TEST(PerronSampler, WeightedMatchesExact)
{
    for (int n : {4, 7}) {
        const SampleBatch b = sample_perron_weighted(n, 60000, config(40 + n, SamplerMethod::perron_weighted));
        for (const auto& s : b.samples)
            ASSERT_TRUE(s.perron);
        expect_within_3se(mean_of(b, abs_last), to_double(perron_moment(make_rational(2), n)));
    }
}

TEST(PerronSampler, PositiveConvention)
{
    SamplerConfig c = config(9, SamplerMethod::perron_weighted);
    c.positive_perron = true;
    const SampleBatch b = sample_perron_weighted(6, 2000, c);
    for (const auto& s : b.samples) {
        double top = 0.0, top_re = 0.0;
        for (const Complex& z : s.roots.roots)
            if (std::abs(z) > top) {
                top = std::abs(z);
                top_re = z.real();
            }
        ASSERT_GT(top_re, 0.0);
    }
}

TEST(PerronSampler, RootDensityExponent)
{
    Rng rng = substream(1, 0);
    // |t| = U^{1/(e+1)}, e = (N-1)(N+2)/2, so E|t| = (e+1)/(e+2).
    const int n = 4;
    const double e = (n - 1) * (n + 2) / 2.0;
    std::vector<double> v;
    for (int i = 0; i < 50000; ++i)
        v.push_back(std::abs(draw_perron_root(n, false, rng)));
    expect_within_3se(mean_estimate(v), (e + 1) / (e + 2));
}

TEST(MetropolisHastings, RejectsOutsideRegion)
{
    EXPECT_FALSE(in_perron_region(MonicPoly({-1.0, -1.0})));
    EXPECT_TRUE(in_perron_region(mh_default_start(21)));
    EXPECT_THROW(sample_perron_mh(2, 10, config(1, SamplerMethod::perron_mh), MonicPoly({0.0, 0.5})),
                 std::invalid_argument);
}

TEST(MetropolisHastings, AgreesWithExactSampler)
{
    SamplerConfig c = config(12, SamplerMethod::perron_mh);
    c.mh_chains = 4;
    c.mh_burnin = 20000;
    c.mh_thin = 20;
    const SampleBatch mh = sample_perron_mh(5, 4 * 15000, c);
    const SampleBatch ex = sample_perron_exact(5, 60000, config(13, SamplerMethod::perron_exact));
    for (const auto& s : mh.samples)
        ASSERT_TRUE(s.perron && is_in_omega(s.roots));

    auto compare = [&](const std::function<double(const Sample&)>& f, const char* what) {
        const MeanEstimate a = batch_mean(mh, f);
        const MeanEstimate b = batch_mean(ex, f);
        EXPECT_LE(std::abs(a.mean - b.mean), 3.0 * std::hypot(a.se, b.se))
            << what << ": mh " << a.mean << " +- " << a.se << ", exact " << b.mean << " +- " << b.se;
    };
    compare([](const Sample& s) { return s.poly.a(1); }, "a_1");
    compare([](const Sample& s) { return std::abs(s.poly.a(5)); }, "|a_5|");
    compare([](const Sample& s) { return s.signature ? static_cast<double>(s.signature->R) : NAN; }, "real roots");
}

TEST(SignatureSampler, AcceptanceMatchesVolumeRatios)
{
    const struct {
        int n, r, s;
        double p;
    } cases[] = {{2, 2, 0, 1.0 / 3.0}, {2, 0, 1, 2.0 / 3.0}, {3, 3, 0, 1.0 / 15.0}};
    for (const auto& c : cases) {
        const SampleBatch b = sample_signature(c.n, c.r, c.s, 5000, config(50 + c.r));
        const double n = static_cast<double>(b.stats.attempts);
        const double se = std::sqrt(c.p * (1 - c.p) / n);
        EXPECT_LE(std::abs(b.stats.rate() - c.p), 3.0 * se) << c.n << "," << c.r << "," << c.s;
        for (const auto& s : b.samples)
            ASSERT_EQ(*s.signature, (Signature{c.r, c.s}));
    }
    EXPECT_THROW(sample_signature(3, 2, 0, 1, config(1)), std::invalid_argument);
}

TEST(Determinism, SerialAndParallelAgreeBitForBit)
{
    for (SamplerMethod m : {SamplerMethod::fam_exact, SamplerMethod::perron_exact, SamplerMethod::perron_weighted,
                            SamplerMethod::perron_mh}) {
        SamplerConfig c = config(99, m);
        c.mh_chains = 3;
        c.mh_burnin = 100;
        c.mh_thin = 5;
        c.execution = Execution::serial;
        const SampleBatch a = sample(6, 300, c);
        c.execution = Execution::parallel;
        const SampleBatch b = sample(6, 300, c);
        ASSERT_EQ(a.samples.size(), b.samples.size());
        for (std::size_t i = 0; i < a.samples.size(); ++i)
            ASSERT_EQ(a.samples[i].poly.coeffs, b.samples[i].poly.coeffs) << to_string(m) << " sample " << i;
        EXPECT_EQ(a.stats.attempts, b.stats.attempts);
    }
}

TEST(Determinism, SeedsSelectStreams)
{
    const SampleBatch a = sample_omega(4, 50, config(1));
    const SampleBatch b = sample_omega(4, 50, config(1));
    const SampleBatch c = sample_omega(4, 50, config(2));
    EXPECT_EQ(a.samples.front().poly.coeffs, b.samples.front().poly.coeffs);
    EXPECT_NE(a.samples.front().poly.coeffs, c.samples.front().poly.coeffs);
    // A longer batch extends a shorter one.
    const SampleBatch d = sample_omega(4, 80, config(1));
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        ASSERT_EQ(a.samples[i].poly.coeffs, d.samples[i].poly.coeffs);
}

TEST(Methods, ParseRoundTrip)
{
    for (SamplerMethod m : {SamplerMethod::fam_exact, SamplerMethod::perron_exact, SamplerMethod::perron_weighted,
                            SamplerMethod::perron_mh, SamplerMethod::signature_reject})
        EXPECT_EQ(parse_sampler_method(to_string(m)), m);
    EXPECT_THROW(parse_sampler_method("gibbs"), std::invalid_argument);
}
