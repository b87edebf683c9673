#include "perron/exact.hpp"
#include "perron/stats.hpp"

#include <json.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace perron {

TestReport z_report(std::string name, double empirical, double se, double reference, double k, bool conjectural)
{
    TestReport r;
    r.name = std::move(name);
    r.empirical = empirical;
    r.reference = reference;
    r.dispersion = se;
    r.threshold = k * se;
    r.passed = std::abs(empirical - reference) <= r.threshold;
    r.conjectural = conjectural;
    return r;
}

double f_statistic(const MonicPoly& p)
{
    const int n = p.degree();
    if (n < 1)
        throw std::invalid_argument("f_statistic: degree must be at least 1");
    const double an = std::abs(p.a(n));
    if (an == 0.0)
        return std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = 0; k <= n; ++k)
        sum += std::abs(p.a(k));
    return std::log(sum) - 0.5 * std::log(an);
}

bool is_perron_batch(const SampleBatch& batch)
{
    switch (batch.config.method) {
    case SamplerMethod::perron_exact:
    case SamplerMethod::perron_weighted:
    case SamplerMethod::perron_mh:
        return true;
    default:
        return false;
    }
}

namespace {

void require_samples(const SampleBatch& batch, const char* what)
{
    if (batch.samples.empty())
        throw std::invalid_argument(std::string(what) + ": empty batch");
}

void require_omega(const SampleBatch& batch, const char* what)
{
    require_samples(batch, what);
    if (is_perron_batch(batch) || batch.config.method == SamplerMethod::signature_reject)
        throw std::invalid_argument(std::string(what) + ": needs a batch that is uniform on Omega_N");
}

// Finite values of f, keeping chain ids for the correlated error model.
MeanEstimate collect(const SampleBatch& batch, const std::function<double(const Sample&)>& f, long& excluded)
{
    std::vector<double> v;
    std::vector<int> chain;
    excluded = 0;
    for (const auto& s : batch.samples) {
        const double x = f(s);
        if (!std::isfinite(x)) {
            ++excluded;
            continue;
        }
        v.push_back(x);
        chain.push_back(s.chain);
    }
    if (v.empty())
        throw std::invalid_argument("no usable samples");
    if (batch.config.method == SamplerMethod::perron_mh)
        return correlated_mean_estimate(v, chain);
    return mean_estimate(v);
}

std::string excluded_note(long excluded)
{
    return excluded > 0 ? std::to_string(excluded) + " samples excluded" : std::string();
}

}  // namespace

TestReport angular_ks(const SampleBatch& batch, double threshold)
{
    require_samples(batch, "angular_ks");
    std::vector<double> args;
    for (const auto& s : batch.samples)
        for (const Complex& z : s.roots.roots) {
            if (z == Complex(0.0, 0.0))
                continue;
            double t = std::arg(z);
            if (t < 0)
                t += 2.0 * std::numbers::pi;
            args.push_back(t);
        }
    TestReport r;
    r.name = "angular KS distance";
    r.empirical = ks_statistic_uniform(std::move(args), 0.0, 2.0 * std::numbers::pi);
    r.reference = 0.0;
    r.threshold = threshold;
    r.passed = r.empirical < threshold;
    return r;
}

TestReport radial_summary(const SampleBatch& batch)
{
    require_samples(batch, "radial_summary");
    const int n = batch.degree;
    long excluded = 0;
    const MeanEstimate m = collect(
        batch,
        [n](const Sample& s) {
            double acc = 0.0;
            for (const Complex& z : s.roots.roots)
                acc += std::log(std::abs(z));
            return acc / n;
        },
        excluded);
    const Rational ref = (is_perron_batch(batch) ? perron_E_log_aN(n) : E_log_aN(n)) / n;
    TestReport r = z_report("mean log|root|", m.mean, m.se, to_double(ref));
    r.note = excluded_note(excluded);
    return r;
}

TestReport empirical_moment(const SampleBatch& batch, const Rational& alpha)
{
    require_samples(batch, "empirical_moment");
    if (alpha <= 0)
        throw std::domain_error("empirical_moment: alpha must be positive");
    const int n = batch.degree;
    const double e = to_double(alpha) - 1.0;
    long excluded = 0;
    const MeanEstimate m = collect(
        batch, [n, e](const Sample& s) { return e == 0.0 ? 1.0 : std::pow(std::abs(s.poly.a(n)), e); }, excluded);
    const Rational ref = is_perron_batch(batch) ? perron_moment(alpha, n) : moment_M(alpha, n);
    TestReport r = z_report("E|a_N|^(alpha-1), alpha=" + to_fraction_string(alpha), m.mean, m.se, to_double(ref));
    r.note = excluded_note(excluded);
    return r;
}

TestReport empirical_log_aN(const SampleBatch& batch)
{
    require_samples(batch, "empirical_log_aN");
    const int n = batch.degree;
    long excluded = 0;
    const MeanEstimate m = collect(batch, [n](const Sample& s) { return std::log(std::abs(s.poly.a(n))); }, excluded);
    const Rational ref = is_perron_batch(batch) ? perron_E_log_aN(n) : E_log_aN(n);
    TestReport r = z_report("E log|a_N|", m.mean, m.se, to_double(ref));
    r.note = excluded_note(excluded);
    return r;
}

TestReport empirical_real_roots(const SampleBatch& batch)
{
    require_omega(batch, "empirical_real_roots");
    long excluded = 0;
    const MeanEstimate m = collect(
        batch,
        [](const Sample& s) {
            return s.signature ? static_cast<double>(s.signature->R) : std::numeric_limits<double>::quiet_NaN();
        },
        excluded);
    TestReport r = z_report("mean real roots", m.mean, m.se, to_double(expected_real_roots(batch.degree)), 3.0, true);
    r.note = excluded_note(excluded);
    return r;
}

TestReport empirical_zeros_in_interval(const SampleBatch& batch, const Rational& a, const Rational& b)
{
    require_omega(batch, "empirical_zeros_in_interval");
    const double lo = to_double(a), hi = to_double(b);
    long excluded = 0;
    const MeanEstimate m = collect(
        batch,
        [lo, hi](const Sample& s) {
            if (!s.signature)
                return std::numeric_limits<double>::quiet_NaN();
            double c = 0.0;
            for (const Complex& z : s.roots.roots)
                if (z.imag() == 0.0 && z.real() >= lo && z.real() <= hi)
                    c += 1.0;
            return c;
        },
        excluded);
    TestReport r = z_report("mean real roots in [" + to_fraction_string(a) + ", " + to_fraction_string(b) + "]",
                            m.mean, m.se, to_double(expected_zeros_interval(batch.degree, a, b)), 3.0, true);
    r.note = excluded_note(excluded);
    return r;
}

TestReport empirical_abs_PT(const SampleBatch& batch, const Rational& t)
{
    require_omega(batch, "empirical_abs_PT");
    if (t < -1 || t > 1)
        throw std::domain_error("empirical_abs_PT: T must lie in [-1, 1]");
    const double x = to_double(t);
    long excluded = 0;
    const MeanEstimate m = collect(batch, [x](const Sample& s) { return std::abs(s.poly(x)); }, excluded);
    TestReport r = z_report("E|P(T)|, T=" + to_fraction_string(t), m.mean, m.se,
                            to_double(conj_absolute(batch.degree)(t)), 3.0, true);
    r.note = excluded_note(excluded);
    return r;
}

namespace {

TestReport fraction_report(std::string name, long hits, long total, double p)
{
    if (total <= 0)
        throw std::invalid_argument("fraction report: no samples");
    const double f = static_cast<double>(hits) / static_cast<double>(total);
    return z_report(std::move(name), f, std::sqrt(p * (1.0 - p) / static_cast<double>(total)), p);
}

}  // namespace

TestReport perron_fraction(const SampleBatch& batch)
{
    require_omega(batch, "perron_fraction");
    long hits = 0;
    for (const auto& s : batch.samples)
        hits += s.perron ? 1 : 0;
    const int n = batch.degree;
    return fraction_report("Perron fraction", hits, static_cast<long>(batch.samples.size()),
                           to_double(volume(VolumeClass::perron, n) / volume(VolumeClass::all, n)));
}

TestReport signature_fraction(const SampleBatch& batch, Signature sig)
{
    require_omega(batch, "signature_fraction");
    const int n = batch.degree;
    if (sig.R + 2 * sig.S != n || sig.R < 0 || sig.S < 0)
        throw std::invalid_argument("signature_fraction: need R + 2S = N");
    const Rational d = volume(VolumeClass::all, n);
    Rational p;
    if (sig.R == n)
        p = volume(VolumeClass::totally_real, n) / d;
    else if (sig.R == 0)
        p = volume(VolumeClass::totally_complex, n) / d;
    else if (n == 3)
        p = 1 - volume(VolumeClass::totally_real, n) / d;
    else
        throw std::domain_error("signature_fraction: no closed-form volume for a mixed signature");
    long hits = 0, total = 0;
    for (const auto& s : batch.samples) {
        if (!s.signature)
            continue;
        ++total;
        hits += *s.signature == sig ? 1 : 0;
    }
    TestReport r = fraction_report("signature (" + std::to_string(sig.R) + "," + std::to_string(sig.S) + ") fraction",
                                   hits, total, to_double(p));
    r.note = excluded_note(static_cast<long>(batch.samples.size()) - total);
    return r;
}

FStatisticSummary f_statistic_summary(const SampleBatch& batch, double bound_factor)
{
    require_samples(batch, "f_statistic_summary");
    FStatisticSummary out;
    out.bound = bound_factor * std::log(static_cast<double>(batch.degree));
    long kept = 0, above = 0;
    for (const auto& s : batch.samples) {
        const double f = f_statistic(s.poly);
        if (!std::isfinite(f))
            ++out.excluded;
        if (!(f <= out.bound)) {
            ++above;
            continue;
        }
        out.mean += f;
        ++kept;
    }
    if (kept > 0)
        out.mean /= static_cast<double>(kept);
    out.tail_fraction = static_cast<double>(above) / static_cast<double>(batch.samples.size());
    return out;
}

namespace {

nlohmann::json report_json(const TestReport& r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["empirical"] = r.empirical;
    j["reference"] = r.reference;
    j["dispersion"] = r.dispersion;
    j["threshold"] = r.threshold;
    j["passed"] = r.passed;
    j["conjectural"] = r.conjectural;
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

}  // namespace

std::string to_json(const TestReport& r)
{
    return report_json(r).dump();
}

std::string to_json(const std::vector<TestReport>& reports)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports)
        arr.push_back(report_json(r));
    return arr.dump(2);
}

}  // namespace perron
