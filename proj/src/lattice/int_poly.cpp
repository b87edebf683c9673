#include "perron/lattice.hpp"

#include <cmath>
#include <sstream>

namespace perron {

BigInt coefficient_bound(int n, int k, const Rational& x)
{
    const Rational b = Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
                       pow_rational(x, k);
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
    return f;
}

double box_size(int n, const Rational& x)
{
    double s = 1.0;
    for (int k = 1; k <= n; ++k)
        s *= 2.0 * coefficient_bound(n, k, x).get_d() + 1.0;
    return s;
}

std::optional<std::vector<BigInt>> exact_quotient(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    if (b.empty() || b.back() == 0)
        throw std::invalid_argument("exact_quotient: divisor must be nonzero with a nonzero leading coefficient");
    if (a.size() < b.size())
        return std::nullopt;
    std::vector<BigInt> r = a;
    std::vector<BigInt> q(a.size() - b.size() + 1);
    const BigInt& lead = b.back();
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt& top = r[i + b.size() - 1];
        if (top % lead != 0)
            return std::nullopt;
        q[i] = top / lead;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] -= q[i] * b[j];
    }
    for (const auto& c : r)
        if (c != 0)
            return std::nullopt;
    return q;
}

namespace {

IntMonicPoly from_ascending(const std::vector<BigInt>& asc)
{
    IntMonicPoly p;
    const int n = static_cast<int>(asc.size()) - 1;
    for (int k = 1; k <= n; ++k)
        p.coeffs.push_back(asc[static_cast<std::size_t>(n - k)]);
    return p;
}

BigInt cauchy_bound(const IntMonicPoly& p)
{
    BigInt m = 0;
    for (const auto& c : p.coeffs)
        if (abs(c) > m)
            m = abs(c);
    return m + 1;
}

// Monic divisor of smallest degree (1 <= d <= N/2) among the candidates with
// house <= X, or nullopt when p has none. p(0) != 0.
std::optional<std::vector<BigInt>> smallest_divisor(const std::vector<BigInt>& asc, const Rational& x)
{
    const int n = static_cast<int>(asc.size()) - 1;
    const BigInt& c0 = asc[0];
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<BigInt> bound(static_cast<std::size_t>(d) + 1);
        for (int k = 1; k <= d; ++k)
            bound[static_cast<std::size_t>(k)] = coefficient_bound(d, k, x);
        // Odometer over b_1..b_d (b_k multiplies x^{d-k}).
        std::vector<BigInt> b(static_cast<std::size_t>(d) + 1);
        for (int k = 1; k <= d; ++k)
            b[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
        while (true) {
            const BigInt& bd = b[static_cast<std::size_t>(d)];
            if (bd != 0 && c0 % bd == 0) {
                std::vector<BigInt> cand(static_cast<std::size_t>(d) + 1);
                for (int k = 0; k <= d; ++k)
                    cand[static_cast<std::size_t>(d - k)] = k == 0 ? BigInt(1) : b[static_cast<std::size_t>(k)];
                if (exact_quotient(asc, cand))
                    return cand;
            }
            int k = d;
            while (k >= 1 && b[static_cast<std::size_t>(k)] == bound[static_cast<std::size_t>(k)]) {
                b[static_cast<std::size_t>(k)] = -bound[static_cast<std::size_t>(k)];
                --k;
            }
            if (k < 1)
                break;
            ++b[static_cast<std::size_t>(k)];
        }
    }
    return std::nullopt;
}

void check_cap(const IntMonicPoly& p, int cap)
{
    if (p.degree() > cap)
        throw std::domain_error("irreducibility by trial division is capped at degree " + std::to_string(cap));
}

}  // namespace

bool is_irreducible(const IntMonicPoly& p, const Rational& x, int cap)
{
    check_cap(p, cap);
    if (p.degree() < 1)
        return false;
    if (p.degree() == 1)
        return true;
    if (p.a(p.degree()) == 0)
        return false;
    return !smallest_divisor(p.ascending(), x);
}

bool is_irreducible(const IntMonicPoly& p, int cap)
{
    return is_irreducible(p, Rational(cauchy_bound(p)), cap);
}

namespace {

std::vector<IntMonicPoly> factor_with(const IntMonicPoly& p, const Rational& x, int cap)
{
    check_cap(p, cap);
    std::vector<IntMonicPoly> out;
    std::vector<BigInt> asc = p.ascending();
    while (asc.size() > 1 && asc[0] == 0) {
        out.push_back(IntMonicPoly{{BigInt(0)}});
        asc.erase(asc.begin());
    }
    while (asc.size() > 2) {
        auto d = smallest_divisor(asc, x);
        if (!d)
            break;
        out.push_back(from_ascending(*d));
        asc = *exact_quotient(asc, *d);
    }
    if (asc.size() > 1)
        out.push_back(from_ascending(asc));
    return out;
}

}  // namespace

std::vector<IntMonicPoly> factor(const IntMonicPoly& p, int cap)
{
    return factor_with(p, Rational(cauchy_bound(p)), cap);
}

bool is_x_or_cyclotomic(const IntMonicPoly& q, int max_k)
{
    const int d = q.degree();
    if (d < 1)
        return false;
    if (d == 1 && q.a(1) == 0)
        return true;
    // x^k mod q, iterated; q divides x^k - 1 exactly when it reaches 1.
    const std::vector<BigInt> asc = q.ascending();
    std::vector<BigInt> r(static_cast<std::size_t>(d), 0);
    r[0] = 1;
    for (int k = 1; k <= max_k; ++k) {
        const BigInt top = r[static_cast<std::size_t>(d - 1)];
        for (int i = d - 1; i >= 1; --i)
            r[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i - 1)] - top * asc[static_cast<std::size_t>(i)];
        r[0] = -top * asc[0];
        bool one = r[0] == 1;
        for (int i = 1; i < d && one; ++i)
            one = r[static_cast<std::size_t>(i)] == 0;
        if (one)
            return true;
    }
    return false;
}

KroneckerReport kronecker_check(int n, const LatticeOptions& options)
{
    if (n < 1 || n > 8)
        throw std::domain_error("kronecker_check: degree must be between 1 and 8");
    KroneckerReport rep;
    rep.degree = n;
    const Rational one(1);
    enumerate_lattice(
        n, one,
        [&](const LatticeHit& h) {
            ++rep.polynomials;
            rep.members.push_back(h.poly);
            for (const auto& f : factor_with(h.poly, one, std::max(options.irreducibility_cap, 8)))
                if (!is_x_or_cyclotomic(f, 2 * n * n))
                    rep.offenders.push_back(f);
        },
        options);
    return rep;
}

std::string to_string(const IntMonicPoly& p)
{
    std::ostringstream out;
    const int n = p.degree();
    auto mono = [](int e) -> std::string {
        if (e == 0)
            return "";
        return e == 1 ? "x" : "x^" + std::to_string(e);
    };
    if (n == 0)
        return "1";
    out << mono(n);
    for (int k = 1; k <= n; ++k) {
        const BigInt c = p.a(k);
        if (c == 0)
            continue;
        const int e = n - k;
        out << (c < 0 ? " - " : " + ");
        const BigInt m = abs(c);
        if (m != 1 || e == 0)
            out << m.get_str();
        out << mono(e);
    }
    return out.str();
}

}  // namespace perron
