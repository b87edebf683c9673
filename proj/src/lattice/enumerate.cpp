#include "perron/lattice.hpp"

#include <atomic>
#include <exception>
#include <string>

namespace perron {

DiskClassification classify_house(const IntMonicPoly& p, const Rational& x)
{
    if (x <= 0)
        throw std::domain_error("classify_house: X must be positive");
    const int n = p.degree();
    // v^n P(u z / v) has integer coefficients a_i u^{n-i} v^i on z^{n-i}.
    const BigInt u = x.get_num(), v = x.get_den();
    std::vector<BigInt> asc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        asc[static_cast<std::size_t>(n - i)] =
            p.a(i) * pow_int(u, static_cast<unsigned long>(n - i)) * pow_int(v, static_cast<unsigned long>(i));
    return schur_cohn_integer(asc);
}

namespace {

class Searcher {
public:
    Searcher(int n, const Rational& x, double budget, std::atomic<double>& shared)
        : n_(n), budget_(budget), shared_(shared), a_(static_cast<std::size_t>(n) + 1), bound_(a_.size()),
          weight_(a_.size())
    {
        const BigInt u = x.get_num(), v = x.get_den();
        a_[0] = 1;
        for (int k = 1; k <= n; ++k)
            bound_[static_cast<std::size_t>(k)] = coefficient_bound(n, k, x);
        // weight_[j][i]: multiplier of a_i in v^j P^{(N-j)}(u z / v), on z^{j-i}.
        for (int j = 1; j <= n; ++j) {
            auto& w = weight_[static_cast<std::size_t>(j)];
            for (int i = 0; i <= j; ++i) {
                const BigInt falling = factorial(static_cast<unsigned long>(n - i)) / factorial(static_cast<unsigned long>(j - i));
                w.push_back(falling * pow_int(u, static_cast<unsigned long>(j - i)) * pow_int(v, static_cast<unsigned long>(i)));
            }
        }
    }

    // Enumerates the subtree with a_1 fixed.
    std::vector<LatticeHit> run(const BigInt& a1)
    {
        hits_.clear();
        a_[1] = a1;
        ++local_nodes_;
        const DiskClassification d = test(1);
        if (d.exterior == 0) {
            if (n_ == 1)
                emit(d);
            else
                descend(2);
        }
        flush();
        return std::move(hits_);
    }

    const BigInt& bound(int k) const { return bound_[static_cast<std::size_t>(k)]; }

private:
    DiskClassification test(int j) const
    {
        const auto& w = weight_[static_cast<std::size_t>(j)];
        std::vector<BigInt> asc(static_cast<std::size_t>(j) + 1);
        for (int i = 0; i <= j; ++i)
            asc[static_cast<std::size_t>(j - i)] = a_[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
        return schur_cohn_integer(asc);
    }

    void emit(const DiskClassification& d)
    {
        LatticeHit h;
        h.poly.coeffs.assign(a_.begin() + 1, a_.end());
        h.strict = d.boundary == 0;
        hits_.push_back(std::move(h));
    }

    void descend(int j)
    {
        const BigInt& b = bound_[static_cast<std::size_t>(j)];
        BigInt& c = a_[static_cast<std::size_t>(j)];
        for (c = -b; c <= b; ++c) {
            if (++local_nodes_ >= 4096)
                flush();
            const DiskClassification d = test(j);
            if (d.exterior != 0)
                continue;
            if (j == n_)
                emit(d);
            else
                descend(j + 1);
        }
    }

    void flush()
    {
        const double seen = shared_.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        if (seen > budget_)
            throw BudgetExceeded("lattice search exceeded its node budget", 0.0, seen);
    }

    int n_;
    double budget_;
    std::atomic<double>& shared_;
    std::vector<BigInt> a_;
    std::vector<BigInt> bound_;
    std::vector<std::vector<BigInt>> weight_;
    std::vector<LatticeHit> hits_;
    double local_nodes_ = 0.0;
};

}  // namespace

namespace detail {

// Runs the search split by a_1 and hands each slice to `slice` in a_1 order.
double search_by_first_coefficient(int n, const Rational& x, const LatticeOptions& options,
                                   const std::function<void(std::vector<LatticeHit>&)>& slice)
{
    if (n < 1)
        throw std::invalid_argument("lattice search: degree must be at least 1");
    if (x <= 0)
        throw std::domain_error("lattice search: X must be positive");
    const double box = box_size(n, x);
    std::atomic<double> nodes{0.0};
    const BigInt b1 = coefficient_bound(n, 1, x);
    const long width = 2 * b1.get_si() + 1;
    std::vector<std::vector<LatticeHit>> slices(static_cast<std::size_t>(width));

    auto rethrow_with_box = [&](const BudgetExceeded& e) {
        throw BudgetExceeded("lattice search for degree " + std::to_string(n) + ", X = " + to_fraction_string(x) +
                                 " exceeded the budget of " + std::to_string(options.budget) +
                                 " nodes (coefficient box holds " + std::to_string(box) + " points)",
                             box, e.visited);
    };

    if (options.execution == Execution::serial) {
        Searcher s(n, x, options.budget, nodes);
        try {
            for (long i = 0; i < width; ++i)
                slices[static_cast<std::size_t>(i)] = s.run(BigInt(i) - b1);
        } catch (const BudgetExceeded& e) {
            rethrow_with_box(e);
        }
    } else {
        std::exception_ptr failure;
#pragma omp parallel
        {
            Searcher s(n, x, options.budget, nodes);
#pragma omp for schedule(dynamic, 1)
            for (long i = 0; i < width; ++i) {
                bool skip;
#pragma omp critical(perron_lattice_failure)
                skip = static_cast<bool>(failure);
                if (skip)
                    continue;
                try {
                    slices[static_cast<std::size_t>(i)] = s.run(BigInt(i) - b1);
                } catch (...) {
#pragma omp critical(perron_lattice_failure)
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        }
        if (failure) {
            try {
                std::rethrow_exception(failure);
            } catch (const BudgetExceeded& e) {
                rethrow_with_box(e);
            }
        }
    }
    for (auto& sl : slices)
        slice(sl);
    return nodes.load();
}

}  // namespace detail

void enumerate_lattice(int n, const Rational& x, const std::function<void(const LatticeHit&)>& callback,
                       const LatticeOptions& options)
{
    detail::search_by_first_coefficient(n, x, options, [&](std::vector<LatticeHit>& hits) {
        for (const auto& h : hits)
            callback(h);
    });
}

std::vector<LatticeHit> lattice_points(int n, const Rational& x, const LatticeOptions& options)
{
    std::vector<LatticeHit> out;
    enumerate_lattice(n, x, [&](const LatticeHit& h) { out.push_back(h); }, options);
    return out;
}

}  // namespace perron
