#include "perron/schur_cohn.hpp"

#include "perron/sturm.hpp"

#include <stdexcept>

namespace perron {

namespace {

void remove_content(std::vector<BigInt>& c)
{
    BigInt g = 0;
    for (const auto& x : c)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : c)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

void trim(std::vector<BigInt>& c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

QPoly to_qpoly(std::span<const BigInt> c)
{
    std::vector<Rational> v;
    v.reserve(c.size());
    for (const auto& x : c)
        v.emplace_back(x);
    return QPoly(std::move(v));
}

int inertia_inside(const QPoly& r)
{
    Inertia in = symmetric_inertia(schur_cohn_matrix(r));
    if (in.zero != 0)
        throw std::logic_error("Schur-Cohn form is singular for a polynomial coprime to its reversal");
    return in.negative;
}

}  // namespace

std::vector<BigInt> integer_multiple(const QPoly& q)
{
    BigInt l = 1;
    for (const auto& c : q.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(q.coeffs().size());
    for (const auto& c : q.coeffs())
        out.push_back(c.get_num() * (l / c.get_den()));
    remove_content(out);
    return out;
}

std::optional<int> schur_cohn_regular_inside(std::vector<BigInt> c)
{
    trim(c);
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0)
        return 0;
    if (c.front() == 0)
        throw std::invalid_argument("regular Schur-Cohn recursion needs a nonzero constant term");
    const BigInt delta = c.front() * c.front() - c.back() * c.back();
    if (delta == 0)
        return std::nullopt;
    // Tf = f(0) f - lead(f) f*, whose constant term is delta.
    std::vector<BigInt> t(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        t[static_cast<std::size_t>(j)] = c.front() * c[static_cast<std::size_t>(j)] - c.back() * c[static_cast<std::size_t>(n - j)];
    trim(t);
    remove_content(t);
    auto inner = schur_cohn_regular_inside(std::move(t));
    if (!inner)
        return std::nullopt;
    // delta > 0: f and Tf share their inside count (Rouche on |z| = 1).
    // delta < 0: Tf shares it with f*, whose inside roots are f's outside ones.
    return delta > 0 ? *inner : n - *inner;
}

Rational determinant(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

std::vector<std::vector<Rational>> schur_cohn_matrix(const QPoly& q)
{
    const int n = q.degree();
    std::vector<std::vector<Rational>> h(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    auto a = [&](int k, int i) { return k >= i ? q.coeff(k - i) : Rational(0); };
    auto b = [&](int k, int i) { return k >= i ? q.coeff(n - (k - i)) : Rational(0); };
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational s = 0;
            for (int k = j; k < n; ++k)
                s += a(k, i) * a(k, j) - b(k, i) * b(k, j);
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
            h[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
        }
    return h;
}

Inertia symmetric_inertia(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    Inertia out;
    while (remaining > 0) {
        std::size_t pivot = n;
        for (std::size_t i = 0; i < n; ++i)
            if (active[i] && m[i][i] != 0) {
                pivot = i;
                break;
            }
        if (pivot < n) {
            const Rational p = m[pivot][pivot];
            (p > 0 ? out.positive : out.negative) += 1;
            active[pivot] = false;
            --remaining;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || m[j][pivot] == 0)
                    continue;
                const Rational f = m[j][pivot] / p;
                for (std::size_t k = 0; k < n; ++k)
                    if (active[k])
                        m[j][k] -= f * m[pivot][k];
            }
            continue;
        }
        // All active diagonal entries vanish: a nonzero off-diagonal pair
        // [[0, b], [b, 0]] contributes one eigenvalue of each sign.
        std::size_t pi = n, pl = n;
        for (std::size_t i = 0; i < n && pi == n; ++i)
            for (std::size_t l = i + 1; l < n; ++l)
                if (active[i] && active[l] && m[i][l] != 0) {
                    pi = i;
                    pl = l;
                    break;
                }
        if (pi == n) {
            out.zero += static_cast<int>(remaining);
            break;
        }
        const Rational bval = m[pi][pl];
        out.positive += 1;
        out.negative += 1;
        active[pi] = active[pl] = false;
        remaining -= 2;
        std::vector<Rational> col_i(n), col_l(n);
        for (std::size_t j = 0; j < n; ++j) {
            col_i[j] = m[j][pi];
            col_l[j] = m[j][pl];
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (active[k])
                    m[j][k] -= (col_i[j] * col_l[k] + col_l[j] * col_i[k]) / bval;
        }
    }
    return out;
}

int unit_circle_root_count(const QPoly& self_reciprocal)
{
    QPoly h = self_reciprocal.monic();
    if (h.coeff(0) == 0)
        throw std::invalid_argument("unit_circle_root_count: zero root");
    int count = 0;
    const QPoly x_minus_1{Rational(-1), Rational(1)};
    const QPoly x_plus_1{Rational(1), Rational(1)};
    while (h.degree() > 0 && h(Rational(1)) == 0) {
        h = divmod(h, x_minus_1).first;
        ++count;
    }
    while (h.degree() > 0 && h(Rational(-1)) == 0) {
        h = divmod(h, x_plus_1).first;
        ++count;
    }
    if (h.degree() <= 0)
        return count;
    if (h.degree() % 2 != 0 || !(h.reversed().monic() == h))
        throw std::logic_error("unit_circle_root_count: polynomial is not self-reciprocal");

    // h(x) = x^d k(x + 1/x); circle roots of h <-> real roots of k in (-2, 2).
    const int d = h.degree() / 2;
    const QPoly y{Rational(0), Rational(1)};
    QPoly v_prev = QPoly::constant(2);
    QPoly v_cur = y;
    QPoly k = QPoly::constant(h.coeff(d));
    for (int j = 1; j <= d; ++j) {
        k += v_cur * h.coeff(d + j);
        QPoly v_next = y * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }
    // k(+-2) != 0 because h(+-1) != 0, so (-2, 2] is the open interval here.
    return count + 2 * count_real_roots_with_multiplicity(k, Rational(-2), Rational(2));
}

DiskClassification schur_cohn_integer(std::span<const BigInt> ascending)
{
    std::vector<BigInt> c(ascending.begin(), ascending.end());
    trim(c);
    if (c.empty())
        throw std::invalid_argument("schur_cohn_exact: zero polynomial");
    DiskClassification out;
    std::size_t zeros = 0;
    while (c[zeros] == 0)
        ++zeros;
    out.interior = static_cast<int>(zeros);
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0)
        return out;
    remove_content(c);
    if (auto inside = schur_cohn_regular_inside(c)) {
        out.interior += *inside;
        out.exterior += n - *inside;
        return out;
    }

    const QPoly q = to_qpoly(c);
    const QPoly g = gcd(q, q.reversed());
    if (g.degree() > 0) {
        const int b = unit_circle_root_count(g);
        const int paired = (g.degree() - b) / 2;
        out.boundary += b;
        out.interior += paired;
        out.exterior += paired;
    }
    const QPoly r = divmod(q, g).first;
    if (r.degree() > 0) {
        const std::vector<BigInt> ri = integer_multiple(r);
        auto inside = schur_cohn_regular_inside(ri);
        const int k = inside ? *inside : inertia_inside(r);
        out.interior += k;
        out.exterior += r.degree() - k;
    }
    return out;
}

DiskClassification schur_cohn_exact(const QPoly& q)
{
    if (q.is_zero())
        throw std::invalid_argument("schur_cohn_exact: zero polynomial");
    const std::vector<BigInt> c = integer_multiple(q);
    return schur_cohn_integer(c);
}

DiskClassification classify_in_radius(const QPoly& q, const Rational& radius)
{
    if (radius <= 0)
        throw std::invalid_argument("classify_in_radius: radius must be positive");
    return schur_cohn_exact(q.scaled_argument(radius));
}

}  // namespace perron
