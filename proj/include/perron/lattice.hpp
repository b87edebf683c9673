#pragma once

#include "perron/execution.hpp"
#include "perron/poly.hpp"
#include "perron/schur_cohn.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perron {

constexpr double default_lattice_budget = 1e10;
constexpr int default_irreducibility_cap = 6;

struct LatticeOptions {
    /// Refuse once this many search nodes have been visited.
    double budget = default_lattice_budget;
    Execution execution = Execution::parallel;
    int irreducibility_cap = default_irreducibility_cap;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, double box_estimate, double visited)
        : std::runtime_error(what), box_estimate(box_estimate), visited(visited)
    {
    }
    double box_estimate;
    double visited;
};

/// floor(binom(N, k) X^k): the coefficient box implied by house <= X.
BigInt coefficient_bound(int n, int k, const Rational& x);
/// Number of integer points in the coefficient box.
double box_size(int n, const Rational& x);

/// Root location of p relative to |z| = X, exactly.
DiskClassification classify_house(const IntMonicPoly& p, const Rational& x);

struct LatticeHit {
    IntMonicPoly poly;
    /// house < X; otherwise house == X.
    bool strict = true;
};

/// Every integer monic polynomial of degree N with house <= X, in
/// lexicographic order of (a_1, ..., a_N). Prefixes are pruned with
/// Gauss-Lucas: the roots of each derivative of P lie in the disk as well,
/// and P^{(N-j)} depends on a_1..a_j only.
void enumerate_lattice(int n, const Rational& x, const std::function<void(const LatticeHit&)>& callback,
                       const LatticeOptions& options = {});
std::vector<LatticeHit> lattice_points(int n, const Rational& x, const LatticeOptions& options = {});

/// Exact division of integer polynomials (ascending); nullopt if b does not
/// divide a.
std::optional<std::vector<BigInt>> exact_quotient(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

/// Trial division by every monic integer polynomial of degree <= N/2 with
/// house <= X. Throws std::domain_error above the degree cap.
bool is_irreducible(const IntMonicPoly& p, const Rational& x, int cap = default_irreducibility_cap);
/// Same, with X taken from the Cauchy bound of p.
bool is_irreducible(const IntMonicPoly& p, int cap = default_irreducibility_cap);
/// Irreducible monic factors with multiplicity, by repeated trial division.
std::vector<IntMonicPoly> factor(const IntMonicPoly& p, int cap = default_irreducibility_cap);
/// q is x, or divides x^k - 1 for some k <= max_k.
bool is_x_or_cyclotomic(const IntMonicPoly& q, int max_k);

struct LatticeClassification {
    bool in_disk = false;
    bool strict = false;
    Signature signature;
    bool perron = false;
    bool irreducible = false;
};

LatticeClassification classify(const IntMonicPoly& p, const Rational& x,
                               int irreducibility_cap = default_irreducibility_cap);

struct ClassCounts {
    long all = 0;
    long perron = 0;
    long totally_real = 0;
    long totally_complex = 0;
    long mixed = 0;
    long irreducible = 0;
    long irreducible_perron = 0;
    long irreducible_totally_real = 0;
    long irreducible_totally_complex = 0;
    long reducible = 0;

    ClassCounts& operator+=(const ClassCounts& o);
    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct CountReport {
    int degree = 0;
    Rational house;
    /// house < X, and house <= X.
    ClassCounts strict;
    ClassCounts closed;
    /// Irreducible/reducible counts are filled only up to the degree cap.
    bool irreducibility_counted = false;
    /// Always zero: every classification is exact.
    long indeterminate = 0;
    /// D*_N X^{N(N+1)/2} for all, perron, totally_real, totally_complex.
    Rational predicted_all;
    Rational predicted_perron;
    Rational predicted_totally_real;
    std::optional<Rational> predicted_totally_complex;
    double ratio_all = 0.0;
    double ratio_perron = 0.0;
    /// The involution a_k -> (-1)^k a_k preserved every class count.
    bool symmetric = false;
    double nodes_visited = 0.0;
};

CountReport count_classes(int n, const Rational& x, const LatticeOptions& options = {});
std::string to_json(const CountReport& r);

struct KroneckerReport {
    int degree = 0;
    long polynomials = 0;
    /// Irreducible factors that are neither x nor cyclotomic; must be empty.
    std::vector<IntMonicPoly> offenders;
    std::vector<IntMonicPoly> members;

    bool passed() const { return offenders.empty(); }
};

/// Every integer polynomial with house <= 1 factors into x and cyclotomics.
KroneckerReport kronecker_check(int n, const LatticeOptions& options = {});

/// Human-readable form, e.g. "x^2 - x - 1".
std::string to_string(const IntMonicPoly& p);

}  // namespace perron
