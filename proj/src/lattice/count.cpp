#include "perron/exact.hpp"
#include "perron/lattice.hpp"

#include <json.hpp>

namespace perron {

namespace detail {
double search_by_first_coefficient(int n, const Rational& x, const LatticeOptions& options,
                                   const std::function<void(std::vector<LatticeHit>&)>& slice);
}

ClassCounts& ClassCounts::operator+=(const ClassCounts& o)
{
    all += o.all;
    perron += o.perron;
    totally_real += o.totally_real;
    totally_complex += o.totally_complex;
    mixed += o.mixed;
    irreducible += o.irreducible;
    irreducible_perron += o.irreducible_perron;
    irreducible_totally_real += o.irreducible_totally_real;
    irreducible_totally_complex += o.irreducible_totally_complex;
    reducible += o.reducible;
    return *this;
}

namespace {

void tally(ClassCounts& c, const LatticeClassification& k, int n, bool with_irreducibility)
{
    ++c.all;
    const bool real = k.signature.R == n;
    const bool complex = k.signature.R == 0;
    c.perron += k.perron;
    c.totally_real += real;
    c.totally_complex += complex;
    c.mixed += !real && !complex;
    if (!with_irreducibility)
        return;
    if (k.irreducible) {
        ++c.irreducible;
        c.irreducible_perron += k.perron;
        c.irreducible_totally_real += real;
        c.irreducible_totally_complex += complex;
    } else {
        ++c.reducible;
    }
}

// +1 or -1 by the sign of the first nonzero odd-index coefficient; 0 when
// every odd coefficient vanishes (fixed points of a_k -> (-1)^k a_k).
int mirror_side(const IntMonicPoly& p)
{
    for (int k = 1; k <= p.degree(); k += 2)
        if (p.a(k) != 0)
            return sgn(p.a(k));
    return 0;
}

}  // namespace

CountReport count_classes(int n, const Rational& x, const LatticeOptions& options)
{
    std::vector<LatticeHit> hits;
    CountReport r;
    r.degree = n;
    r.house = x;
    r.nodes_visited = detail::search_by_first_coefficient(n, x, options, [&](std::vector<LatticeHit>& slice) {
        for (auto& h : slice)
            hits.push_back(std::move(h));
    });

    const bool irr = n <= options.irreducibility_cap;
    r.irreducibility_counted = irr;
    std::vector<LatticeClassification> cls(hits.size());
    const long m = static_cast<long>(hits.size());
    auto one = [&](long i) {
        const auto& h = hits[static_cast<std::size_t>(i)];
        LatticeClassification& c = cls[static_cast<std::size_t>(i)];
        const QPoly q = h.poly.to_qpoly();
        c.in_disk = true;
        c.strict = h.strict;
        c.signature = signature_exact(q);
        c.perron = is_perron_exact(q);
        c.irreducible = irr && is_irreducible(h.poly, x, options.irreducibility_cap);
    };
    if (options.execution == Execution::serial) {
        for (long i = 0; i < m; ++i)
            one(i);
    } else {
#pragma omp parallel for schedule(dynamic, 64)
        for (long i = 0; i < m; ++i)
            one(i);
    }

    ClassCounts plus_strict, minus_strict, plus_closed, minus_closed;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const auto& c = cls[i];
        tally(r.closed, c, n, irr);
        if (c.strict)
            tally(r.strict, c, n, irr);
        const int side = mirror_side(hits[i].poly);
        if (side > 0) {
            tally(plus_closed, c, n, irr);
            if (c.strict)
                tally(plus_strict, c, n, irr);
        } else if (side < 0) {
            tally(minus_closed, c, n, irr);
            if (c.strict)
                tally(minus_strict, c, n, irr);
        }
    }
    r.symmetric = plus_closed == minus_closed && plus_strict == minus_strict;

    const Rational scale = pow_rational(x, static_cast<long>(n) * (n + 1) / 2);
    r.predicted_all = volume(VolumeClass::all, n) * scale;
    r.predicted_perron = volume(VolumeClass::perron, n) * scale;
    r.predicted_totally_real = volume(VolumeClass::totally_real, n) * scale;
    if (n % 2 == 0)
        r.predicted_totally_complex = volume(VolumeClass::totally_complex, n) * scale;
    r.ratio_all = static_cast<double>(r.strict.all) / to_double(r.predicted_all);
    r.ratio_perron = static_cast<double>(r.strict.perron) / to_double(r.predicted_perron);
    return r;
}

namespace {

nlohmann::json counts_json(const ClassCounts& c, bool irr)
{
    nlohmann::json j;
    j["all"] = c.all;
    j["perron"] = c.perron;
    j["totally_real"] = c.totally_real;
    j["totally_complex"] = c.totally_complex;
    j["mixed"] = c.mixed;
    if (irr) {
        j["irreducible"] = c.irreducible;
        j["irreducible_perron"] = c.irreducible_perron;
        j["irreducible_totally_real"] = c.irreducible_totally_real;
        j["irreducible_totally_complex"] = c.irreducible_totally_complex;
        j["reducible"] = c.reducible;
    }
    return j;
}

nlohmann::json exact_json(const Rational& q)
{
    return {{"exact", to_fraction_string(q)}, {"decimal", to_decimal_string(q)}};
}

}  // namespace

std::string to_json(const CountReport& r)
{
    nlohmann::json j;
    j["degree"] = r.degree;
    j["house"] = to_fraction_string(r.house);
    j["strict"] = counts_json(r.strict, r.irreducibility_counted);
    j["closed"] = counts_json(r.closed, r.irreducibility_counted);
    j["indeterminate"] = r.indeterminate;
    nlohmann::json pred;
    pred["all"] = exact_json(r.predicted_all);
    pred["perron"] = exact_json(r.predicted_perron);
    pred["totally_real"] = exact_json(r.predicted_totally_real);
    if (r.predicted_totally_complex)
        pred["totally_complex"] = exact_json(*r.predicted_totally_complex);
    j["predicted"] = pred;
    j["ratio"] = r.ratio_all;
    j["ratio_perron"] = r.ratio_perron;
    j["symmetric"] = r.symmetric;
    j["nodes_visited"] = r.nodes_visited;
    return j.dump(2);
}

}  // namespace perron
