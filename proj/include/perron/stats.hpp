#pragma once

#include "perron/samplers.hpp"

#include <functional>
#include <string>
#include <vector>

namespace perron {

struct Histogram {
    std::vector<double> edges;
    std::vector<long> counts;
    long total = 0;
    /// Values that fell outside [edges.front(), edges.back()].
    long outside = 0;
    bool normalized = false;

    /// Density (count / (total * width)) of bin i.
    double density(std::size_t i) const;
};

/// Equal-width bins over [lo, hi]; the last bin is closed.
Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins, bool normalized = false);
/// "edge,count" lines (left edges) plus the final right edge with an empty count.
std::string to_csv(const Histogram& h);

struct TestReport {
    std::string name;
    double empirical = 0.0;
    double reference = 0.0;
    /// One standard error, or zero for statistics compared to a fixed band.
    double dispersion = 0.0;
    double threshold = 0.0;
    bool passed = false;
    bool conjectural = false;
    std::string note;
};

/// |empirical - reference| <= k * se.
TestReport z_report(std::string name, double empirical, double se, double reference, double k = 3.0,
                    bool conjectural = false);

/// sup |F_n - F| against a continuous CDF.
double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf);
double ks_statistic_uniform(std::vector<double> values, double lo, double hi);
/// Asymptotic Kolmogorov tail P(D_n >= d).
double ks_pvalue(double d, long n);

/// Sokal's windowed estimate: tau = 1 + 2 sum_{k<=W} rho_k with the first W
/// satisfying W >= c tau.
double integrated_autocorrelation_time(const std::vector<double>& x, double c = 5.0);

struct MeanEstimate {
    double mean = 0.0;
    double se = 0.0;
    double tau = 1.0;
    long n = 0;
};

/// Plain mean and standard error.
MeanEstimate mean_estimate(const std::vector<double>& x);
/// Per-chain Sokal errors pooled over chains. With four or more chains the
/// spread of the chain means is also an estimate of the error; the larger of
/// the two is reported.
MeanEstimate correlated_mean_estimate(const std::vector<double>& x, const std::vector<int>& chain);

/// Mean of a per-sample statistic with the error model matching the batch
/// (independent draws, or correlated MH chains).
MeanEstimate batch_mean(const SampleBatch& batch, const std::function<double(const Sample&)>& f);

/// log(sum |a_i|) - log|a_0|/2 - log|a_N|/2 with a_0 = 1; +inf when a_N = 0.
double f_statistic(const MonicPoly& p);

/// Whether the batch targets the Perron subset.
bool is_perron_batch(const SampleBatch& batch);

/// KS distance of all root arguments against uniform on [0, 2 pi).
TestReport angular_ks(const SampleBatch& batch, double threshold = 0.02);
/// Mean log|root| against E(log|a_N|)/N.
TestReport radial_summary(const SampleBatch& batch);
/// Mean of |a_N|^{alpha-1} against moment_M or perron_moment.
TestReport empirical_moment(const SampleBatch& batch, const Rational& alpha);
/// Mean log|a_N| against E_log_aN or its Perron version.
TestReport empirical_log_aN(const SampleBatch& batch);
/// Mean number of real roots against r_N. Conjectural.
TestReport empirical_real_roots(const SampleBatch& batch);
/// Mean number of real roots in [a, b] against the conjectured formula.
TestReport empirical_zeros_in_interval(const SampleBatch& batch, const Rational& a, const Rational& b);
/// Mean |P(T)| against conj_absolute(N)(T). Conjectural.
TestReport empirical_abs_PT(const SampleBatch& batch, const Rational& t);
/// Fraction of Perron members against 1/N or 1/(N+1).
TestReport perron_fraction(const SampleBatch& batch);
/// Fraction with the given signature against the exact volume ratio when
/// one is known (all real, or all complex for even N).
TestReport signature_fraction(const SampleBatch& batch, Signature s);

struct FStatisticSummary {
    double mean = 0.0;
    double bound = 0.0;
    /// Fraction of samples above the bound (a_N = 0 counts as above).
    double tail_fraction = 0.0;
    long excluded = 0;
};

/// Mean F_N over the samples below 100 log N and the share above it.
FStatisticSummary f_statistic_summary(const SampleBatch& batch, double bound_factor = 100.0);

std::string to_json(const TestReport& r);
std::string to_json(const std::vector<TestReport>& reports);

}  // namespace perron
