#include "perron/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace perron {

namespace {

int sign_of(const Rational& q)
{
    return sgn(q);
}

int count_sign_changes(const std::vector<int>& signs)
{
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

SturmSequence::SturmSequence(const QPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("Sturm sequence of the zero polynomial");
    chain_.push_back(p);
    QPoly d = p.derivative();
    if (d.is_zero())
        return;
    chain_.push_back(d);
    while (true) {
        QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
        if (r.is_zero())
            break;
        // Positive rescaling keeps the signs and the coefficients small.
        Rational lead = r.leading();
        if (lead < 0)
            lead = -lead;
        chain_.push_back(r * Rational(-1 / lead));
    }
    // With repeated roots the chain ends in gcd(p, p'), which vanishes at
    // them; dividing it out leaves the chain of the squarefree part.
    if (chain_.back().degree() > 0) {
        const QPoly g = chain_.back();
        for (auto& q : chain_)
            q = divmod(q, g).first;
    }
}

int SturmSequence::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_)
        signs.push_back(sign_of(q(x)));
    return count_sign_changes(signs);
}

int SturmSequence::variations_at_plus_infinity() const
{
    std::vector<int> signs;
    for (const auto& q : chain_)
        signs.push_back(sign_of(q.leading()));
    return count_sign_changes(signs);
}

int SturmSequence::variations_at_minus_infinity() const
{
    std::vector<int> signs;
    for (const auto& q : chain_)
        signs.push_back(sign_of(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
    return count_sign_changes(signs);
}

int SturmSequence::count(const Rational& a, const Rational& b) const
{
    if (b < a)
        return 0;
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_all() const
{
    return variations_at_minus_infinity() - variations_at_plus_infinity();
}

int count_distinct_real_roots(const QPoly& p, const Rational& a, const Rational& b)
{
    if (p.degree() <= 0)
        return 0;
    return SturmSequence(p).count(a, b);
}

int count_distinct_real_roots(const QPoly& p)
{
    if (p.degree() <= 0)
        return 0;
    return SturmSequence(p).count_all();
}

int count_real_roots_with_multiplicity(const QPoly& p, const Rational& a, const Rational& b)
{
    // A root of multiplicity m survives in m successive gcd(G, G') layers.
    int total = 0;
    QPoly layer = p;
    while (layer.degree() > 0) {
        total += count_distinct_real_roots(layer, a, b);
        layer = gcd(layer, layer.derivative());
    }
    return total;
}

int count_real_roots_with_multiplicity(const QPoly& p)
{
    int total = 0;
    QPoly layer = p;
    while (layer.degree() > 0) {
        total += count_distinct_real_roots(layer);
        layer = gcd(layer, layer.derivative());
    }
    return total;
}

Rational cauchy_root_bound(const QPoly& p)
{
    if (p.degree() <= 0)
        return 1;
    Rational m = 0;
    const Rational& lead = p.leading();
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs(p.coeff(k) / lead);
        if (r > m)
            m = r;
    }
    return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const QPoly& p)
{
    std::vector<RootInterval> out;
    if (p.degree() <= 0)
        return out;
    SturmSequence seq(p);
    const Rational bound = cauchy_root_bound(p);
    std::vector<RootInterval> work{{-bound, bound}};
    while (!work.empty()) {
        RootInterval iv = work.back();
        work.pop_back();
        const int n = seq.count(iv.lo, iv.hi);
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rational mid = (iv.lo + iv.hi) / 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    return out;
}

void refine_root(const QPoly& p, RootInterval& interval, const Rational& width)
{
    SturmSequence seq(p);
    while (interval.hi - interval.lo > width) {
        Rational mid = (interval.lo + interval.hi) / 2;
        if (seq.count(interval.lo, mid) == 1)
            interval.hi = mid;
        else
            interval.lo = mid;
    }
}

}  // namespace perron
