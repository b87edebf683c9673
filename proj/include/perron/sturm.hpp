#pragma once

#include "perron/qpoly.hpp"

#include <vector>

namespace perron {

/// Sturm chain p, p', -rem(p, p'), ... over Q.
class SturmSequence {
public:
    explicit SturmSequence(const QPoly& p);

    /// Sign changes of the chain at x (zeros skipped).
    int variations_at(const Rational& x) const;
    int variations_at_minus_infinity() const;
    int variations_at_plus_infinity() const;

    /// Distinct real roots in the half-open interval (a, b].
    int count(const Rational& a, const Rational& b) const;
    int count_all() const;

private:
    std::vector<QPoly> chain_;
};

struct RootInterval {
    Rational lo;
    Rational hi;
};

/// Distinct real roots in (a, b].
int count_distinct_real_roots(const QPoly& p, const Rational& a, const Rational& b);
int count_distinct_real_roots(const QPoly& p);

/// Real roots counted with multiplicity, in (a, b] or over all of R.
int count_real_roots_with_multiplicity(const QPoly& p, const Rational& a, const Rational& b);
int count_real_roots_with_multiplicity(const QPoly& p);

/// Cauchy bound: every root satisfies |z| < bound.
Rational cauchy_root_bound(const QPoly& p);

/// Disjoint intervals (lo, hi], sorted ascending, each holding exactly one
/// distinct real root of p.
std::vector<RootInterval> isolate_real_roots(const QPoly& p);

/// Halves `interval` (which must isolate one root of p) until hi - lo <= width.
void refine_root(const QPoly& p, RootInterval& interval, const Rational& width);

}  // namespace perron
