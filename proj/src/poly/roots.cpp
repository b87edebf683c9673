#include "perron/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace perron {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct HornerResult {
    Complex value;
    Complex derivative;
    double error_bound;
};

// p and p' at z together with a running bound on the rounding error of p.
HornerResult horner(const std::vector<double>& a, Complex z)
{
    // Complex products spelled out: std::complex multiplication goes
    // through the NaN-checking runtime helper.
    double pr = 1.0, pi = 0.0, dr = 0.0, di = 0.0;
    const double zr = z.real(), zi = z.imag();
    double mag = 1.0;
    const double az = std::abs(z);
    for (double c : a) {
        const double ndr = dr * zr - di * zi + pr;
        const double ndi = dr * zi + di * zr + pi;
        dr = ndr;
        di = ndi;
        const double npr = pr * zr - pi * zi + c;
        const double npi = pr * zi + pi * zr;
        pr = npr;
        pi = npi;
        mag = mag * az + std::abs(c);
    }
    const double n = static_cast<double>(a.size());
    return {{pr, pi}, {dr, di}, 4.0 * (2.0 * n + 1.0) * eps * mag};
}

std::vector<Complex> initial_guesses(const std::vector<double>& a)
{
    // Fujiwara's bound puts every root inside the starting circle.
    const int n = static_cast<int>(a.size());
    double r = 0.0;
    for (int k = 1; k <= n; ++k) {
        double c = std::abs(a[static_cast<std::size_t>(k - 1)]);
        if (k == n)
            c /= 2.0;
        r = std::max(r, std::pow(c, 1.0 / k));
    }
    r = std::max(2.0 * r, 1e-3);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(r, 2.0 * std::numbers::pi * k / n + 0.4);
    return z;
}

// Pairs non-real roots with conjugates and snaps near-real ones.
void enforce_conjugate_symmetry(std::vector<Complex>& roots, double tol)
{
    std::vector<Complex> real_part, upper, lower;
    for (const Complex& z : roots) {
        const double band = 64.0 * tol * std::max(1.0, std::abs(z));
        if (std::abs(z.imag()) <= band)
            real_part.emplace_back(z.real(), 0.0);
        else if (z.imag() > 0)
            upper.push_back(z);
        else
            lower.push_back(z);
    }
    // The surplus side gives up its roots closest to the axis.
    auto by_imag = [](const Complex& x, const Complex& y) { return std::abs(x.imag()) < std::abs(y.imag()); };
    auto& big = upper.size() > lower.size() ? upper : lower;
    const std::size_t small = std::min(upper.size(), lower.size());
    std::sort(big.begin(), big.end(), by_imag);
    while (big.size() > small) {
        real_part.emplace_back(big.front().real(), 0.0);
        big.erase(big.begin());
    }

    std::vector<Complex> out = real_part;
    std::vector<bool> used(lower.size(), false);
    for (const Complex& z : upper) {
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j])
                continue;
            const double d = std::abs(std::conj(lower[j]) - z);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        const Complex m = 0.5 * (z + std::conj(lower[best]));
        out.push_back(m);
        out.push_back(std::conj(m));
    }
    std::sort(out.begin(), out.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
    roots = std::move(out);
}

RootSet aberth(const MonicPoly& p, std::vector<Complex> z, double tol)
{
    if (p.degree() < 1)
        throw std::invalid_argument("find_roots: degree must be at least 1");
    if (!(tol > 0))
        throw std::invalid_argument("find_roots: tol must be positive");

    std::vector<double> a = p.coeffs;
    std::size_t zeros = 0;
    while (!a.empty() && a.back() == 0.0) {
        a.pop_back();
        ++zeros;
    }
    const std::size_t n = a.size();
    RootSet out;
    out.tolerance = tol;

    if (n > 0) {
        if (z.size() != n)
            z = initial_guesses(a);
        std::vector<bool> done(n, false);
        bool all_done = false;
        for (int iter = 0; iter < aberth_iteration_cap && !all_done; ++iter) {
            all_done = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (done[i])
                    continue;
                const HornerResult h = horner(a, z[i]);
                if (std::abs(h.value) <= h.error_bound) {
                    done[i] = true;
                    continue;
                }
                const Complex ratio = h.value / h.derivative;
                Complex s = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i)
                        continue;
                    // 1/d as conj(d)/|d|^2; library complex division is slow.
                    const Complex d = z[i] - z[j];
                    s += std::conj(d) / std::norm(d);
                }
                const Complex w = ratio / (1.0 - ratio * s);
                if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                    // Collided iterates: nudge and keep going.
                    z[i] += Complex(tol, tol) * std::max(1.0, std::abs(z[i]));
                    all_done = false;
                    continue;
                }
                z[i] -= w;
                if (std::abs(w) <= tol * std::max(1.0, std::abs(z[i])))
                    done[i] = true;
                else
                    all_done = false;
            }
        }
        if (!all_done) {
            // Clustered roots converge linearly; accept them once the
            // residual is at the level of rounding noise.
            for (std::size_t i = 0; i < n; ++i) {
                const HornerResult h = horner(a, z[i]);
                if (!done[i] && std::abs(h.value) > 64.0 * h.error_bound)
                    throw RootFindingError("find_roots: Aberth iteration did not converge within the iteration cap");
            }
        }
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const HornerResult h = horner(a, z[i]);
            residual = std::max(residual, std::abs(h.value) + h.error_bound);
        }
        out.residual_bound = residual;
    }
    out.roots = std::move(z);
    for (std::size_t k = 0; k < zeros; ++k)
        out.roots.emplace_back(0.0, 0.0);
    enforce_conjugate_symmetry(out.roots, tol);
    return out;
}

}  // namespace

RootSet find_roots(const MonicPoly& p, double tol)
{
    return aberth(p, {}, tol);
}

RootSet find_roots(const MonicPoly& p, const std::vector<Complex>& start, double tol)
{
    std::vector<Complex> z;
    std::size_t nonzero = p.coeffs.size();
    while (nonzero > 0 && p.coeffs[nonzero - 1] == 0.0)
        --nonzero;
    // Warm start: keep the nonzero approximations and top up if needed.
    for (const Complex& s : start)
        if (z.size() < nonzero && s != Complex(0.0, 0.0))
            z.push_back(s);
    if (z.size() != nonzero) {
        z.clear();
    } else {
        // With real coefficients, real or conjugate-paired iterates stay real
        // or paired forever, so two real roots could never turn into a pair.
        // A small rotation breaks the symmetry.
        const Complex turn = std::polar(1.0, 1e-5);
        for (std::size_t i = 0; i < z.size(); ++i)
            z[i] = z[i] * turn + Complex(0.0, 1e-6 * static_cast<double>(i + 1) / static_cast<double>(z.size()));
    }
    return aberth(p, std::move(z), tol);
}

double house(const RootSet& rs)
{
    double h = 0.0;
    for (const Complex& z : rs.roots)
        h = std::max(h, std::abs(z));
    return h;
}

double house(const MonicPoly& p)
{
    return house(find_roots(p));
}

std::optional<Signature> signature(const RootSet& rs, double tol)
{
    Signature s;
    for (const Complex& z : rs.roots) {
        const double im = std::abs(z.imag());
        if (im == 0.0)
            ++s.R;
        else if (im <= tol * std::max(1.0, std::abs(z)))
            return std::nullopt;
    }
    s.S = (static_cast<int>(rs.roots.size()) - s.R) / 2;
    return s;
}

std::optional<Signature> signature(const MonicPoly& p, double tol)
{
    return signature(find_roots(p), tol);
}

bool is_in_omega(const RootSet& rs, double tol)
{
    return house(rs) <= 1.0 + tol;
}

bool is_in_omega(const MonicPoly& p, double tol)
{
    return is_in_omega(find_roots(p), tol);
}

bool schur_cohn_rejects(const MonicPoly& p, double margin)
{
    // Ascending coefficients, renormalized to a monic leading term each step.
    const int n = p.degree();
    std::vector<double> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        q[static_cast<std::size_t>(k)] = p.a(n - k);
    for (int m = n; m >= 1; --m) {
        const double k = q[0] / q[static_cast<std::size_t>(m)];
        if (std::abs(k) >= 1.0 - margin)
            return std::abs(k) > 1.0 + margin;
        std::vector<double> next(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            next[static_cast<std::size_t>(i)] =
                q[static_cast<std::size_t>(i + 1)] - k * q[static_cast<std::size_t>(m - 1 - i)];
        const double lead = next.back();
        for (double& c : next)
            c /= lead;
        q = std::move(next);
    }
    return false;
}

PerronStatus perron_status(const RootSet& rs, double tol)
{
    if (rs.roots.empty())
        return PerronStatus::not_perron;
    const double h = house(rs);
    const double band = tol * std::max(1.0, h);
    int top = 0, top_real = 0, top_near_real = 0;
    for (const Complex& z : rs.roots) {
        if (std::abs(z) < h - band)
            continue;
        ++top;
        if (z.imag() == 0.0)
            ++top_real;
        else if (std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z)))
            ++top_near_real;
    }
    if (top == 1)
        return top_real == 1 ? PerronStatus::perron : PerronStatus::indeterminate;
    // Only clearly complex roots at the top: an exact modulus tie.
    if (top_real == 0 && top_near_real == 0)
        return PerronStatus::not_perron;
    return PerronStatus::indeterminate;
}

PerronStatus perron_status(const MonicPoly& p, double tol)
{
    return perron_status(find_roots(p), tol);
}

bool is_perron(const MonicPoly& p, double tol)
{
    return perron_status(p, tol) == PerronStatus::perron;
}

}  // namespace perron
