#include "perron/poly.hpp"
#include "perron/schur_cohn.hpp"
#include "perron/sturm.hpp"

#include <stdexcept>

namespace perron {

namespace {

void halve(const SturmSequence& seq, RootInterval& iv)
{
    Rational mid = (iv.lo + iv.hi) / 2;
    if (seq.count(iv.lo, mid) == 1)
        iv.hi = mid;
    else
        iv.lo = mid;
}

bool has_root_in(const QPoly& g, const RootInterval& iv)
{
    return g.degree() > 0 && count_distinct_real_roots(g, iv.lo, iv.hi) > 0;
}

// Roots of p with modulus strictly above rho, and at or above rho.
std::pair<int, int> outside_counts(const QPoly& p, const Rational& rho)
{
    DiskClassification d = classify_in_radius(p, rho);
    return {d.exterior, d.exterior + d.boundary};
}

Rational resultant(const QPoly& f, const QPoly& g)
{
    const int m = f.degree(), n = g.degree();
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(n - k);
    return determinant(std::move(s));
}

// Polynomial whose roots are the products z_i z_j over ordered pairs of
// roots of p (p(0) != 0), by interpolating Res_x(p(x), x^n p(y/x)).
QPoly pair_product_poly(const QPoly& p)
{
    const int n = p.degree();
    const int d = n * n;
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= d; ++t) {
        const Rational y = t;
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        Rational yk = 1;
        for (int k = 0; k <= n; ++k) {
            c[static_cast<std::size_t>(n - k)] = p.coeff(k) * yk;
            yk *= y;
        }
        xs.push_back(y);
        ys.push_back(resultant(p, QPoly(std::move(c))));
    }
    // Newton divided differences, then expand.
    std::vector<Rational> dd = ys;
    for (int j = 1; j <= d; ++j)
        for (int i = d; i >= j; --i)
            dd[static_cast<std::size_t>(i)] = (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
                                               (xs[static_cast<std::size_t>(i)] - xs[static_cast<std::size_t>(i - j)]);
    QPoly out = QPoly::constant(dd[static_cast<std::size_t>(d)]);
    for (int i = d - 1; i >= 0; --i)
        out = out * QPoly{-xs[static_cast<std::size_t>(i)], Rational(1)} + QPoly::constant(dd[static_cast<std::size_t>(i)]);
    return out;
}

// Graeffe step: the polynomial whose roots are the squares of p's roots.
QPoly graeffe(const QPoly& p)
{
    QPoly prod = p * p.negated_argument();
    std::vector<Rational> even;
    for (int k = 0; k <= prod.degree(); k += 2)
        even.push_back(prod.coeff(k));
    return QPoly(std::move(even));
}

// Multiplicity of r^2 as a root of pair_product_poly(p), r isolated by iv
// with 0 < lo.
int square_multiplicity(const QPoly& p, RootInterval iv)
{
    const QPoly g2 = graeffe(p);
    const SturmSequence seq(p);
    RootInterval sq{iv.lo * iv.lo, iv.hi * iv.hi};
    while (count_distinct_real_roots(g2, sq.lo, sq.hi) != 1) {
        halve(seq, iv);
        sq = {iv.lo * iv.lo, iv.hi * iv.hi};
    }
    int mult = 0;
    QPoly layer = pair_product_poly(p);
    while (layer.degree() > 0) {
        if (has_root_in(gcd(layer, g2), sq))
            ++mult;
        layer = gcd(layer, layer.derivative());
    }
    return mult;
}

}  // namespace

Signature signature_exact(const QPoly& p)
{
    if (p.degree() < 1)
        throw std::invalid_argument("signature_exact: degree must be at least 1");
    const int r = count_real_roots_with_multiplicity(p);
    return {r, (p.degree() - r) / 2};
}

bool is_perron_exact(const QPoly& p_in)
{
    if (p_in.degree() < 1)
        throw std::invalid_argument("is_perron_exact: degree must be at least 1");
    QPoly p = p_in.monic();
    const int n = p.degree();
    p.strip_zero_roots();
    if (p.degree() == 0)
        return n == 1;

    std::vector<RootInterval> roots = isolate_real_roots(p);
    if (roots.empty())
        return false;
    const SturmSequence seq(p);
    // Keep intervals off zero so that modulus bounds are meaningful.
    for (auto* iv : {&roots.front(), &roots.back()})
        while (iv->lo < 0 && iv->hi > 0)
            halve(seq, *iv);

    RootInterval neg = roots.front();
    RootInterval pos = roots.back();
    bool use_pos = true;
    if (neg.hi <= 0 && pos.lo >= 0) {
        // Both signs present: a root -q with q maximal forces -q to be the
        // most negative root, so the g-test decides a tie exactly.
        const QPoly g = gcd(p, p.negated_argument());
        if (has_root_in(g, pos) && has_root_in(g, neg))
            return false;
        while (true) {
            if (pos.lo >= -neg.lo) {
                use_pos = true;
                break;
            }
            if (-neg.hi >= pos.hi) {
                use_pos = false;
                break;
            }
            halve(seq, pos);
            halve(seq, neg);
        }
    } else {
        use_pos = pos.lo >= 0;
    }
    RootInterval iv = use_pos ? pos : neg;
    // Work with the root of p(+-x) that is positive.
    const QPoly q = use_pos ? p : p.negated_argument();
    if (!use_pos)
        iv = {-iv.hi, -iv.lo};
    // A rational root settles everything through one disk classification.
    auto settle_at = [&](const Rational& r) {
        const DiskClassification d = classify_in_radius(q, r);
        return d.exterior == 0 && d.boundary == 1;
    };
    const SturmSequence qseq(q);
    if (!use_pos) {
        // Negation turned (lo, hi] into [lo, hi): r may sit at lo, and hi
        // may be some other root that has to be pushed out.
        if (q(iv.lo) == 0)
            return settle_at(iv.lo);
        while (q(iv.hi) == 0) {
            Rational mid = (iv.lo + iv.hi) / 2;
            const bool left = qseq.count(iv.lo, mid) >= 1;
            if (left && q(mid) == 0)
                return settle_at(mid);
            if (left)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
    }
    if (q(iv.hi) == 0)
        return settle_at(iv.hi);
    auto refine = [&] {
        Rational mid = (iv.lo + iv.hi) / 2;
        if (qseq.count(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    };
    while (iv.lo <= 0)
        refine();

    if (has_root_in(gcd(q, q.derivative()), iv))
        return false;

    bool tie_checked = false;
    for (int step = 0; step < 4000; ++step) {
        // Roots above lo include r; r alone means Perron.
        if (outside_counts(q, iv.lo).first == 1)
            return true;
        // Anything at or above hi (> r) is a larger root.
        if (outside_counts(q, iv.hi).second >= 1)
            return false;
        if (step == 8 && !tie_checked) {
            tie_checked = true;
            if (square_multiplicity(q, iv) >= 2)
                return false;
        }
        refine();
        if (q(iv.hi) == 0)
            return settle_at(iv.hi);
    }
    throw std::logic_error("is_perron_exact: refinement did not terminate");
}

}  // namespace perron
