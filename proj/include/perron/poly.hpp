#pragma once

#include "perron/qpoly.hpp"
#include "perron/rational.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace perron {

using Complex = std::complex<double>;

/// x^N + a_1 x^{N-1} + ... + a_N; coeffs holds a_1..a_N (descending powers).
struct MonicPoly {
    std::vector<double> coeffs;

    MonicPoly() = default;
    explicit MonicPoly(std::vector<double> a);

    int degree() const { return static_cast<int>(coeffs.size()); }
    /// a_k with a_0 = 1 and a_k = 0 outside 0..N.
    double a(int k) const;
    double operator()(double x) const;
    Complex operator()(Complex z) const;

    /// Roots scaled by s: a_k -> a_k s^k.
    MonicPoly scaled(double s) const;
    /// Ascending exact coefficients; every double is exactly representable.
    QPoly to_qpoly() const;

    static MonicPoly from_roots(const std::vector<Complex>& roots);
    static MonicPoly monomial(int n);

    friend bool operator==(const MonicPoly&, const MonicPoly&) = default;
};

/// Integer monic polynomial, coeffs a_1..a_N descending like MonicPoly.
struct IntMonicPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()); }
    BigInt a(int k) const;
    QPoly to_qpoly() const;
    /// Ascending integer coefficients, leading 1 last.
    std::vector<BigInt> ascending() const;
    MonicPoly to_monic() const;

    friend bool operator==(const IntMonicPoly&, const IntMonicPoly&) = default;
};

struct RootSet {
    std::vector<Complex> roots;
    double residual_bound = 0.0;
    double tolerance = 0.0;
};

struct Signature {
    int R = 0;
    int S = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

enum class PerronStatus { perron, not_perron, indeterminate };

class RootFindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double default_root_tol = 1e-12;
/// Imaginary parts and modulus gaps below this are treated as ties.
constexpr double default_class_tol = 1e-9;
constexpr int aberth_iteration_cap = 200;

/// Aberth-Ehrlich simultaneous iteration. Exact zero roots are split off
/// first, non-real roots are paired with their conjugates, and roots with
/// negligible imaginary part are snapped to the real axis.
/// Throws RootFindingError if the iteration does not settle within the cap.
RootSet find_roots(const MonicPoly& p, double tol = default_root_tol);

/// Same, starting from the given approximations (warm start).
RootSet find_roots(const MonicPoly& p, const std::vector<Complex>& start, double tol = default_root_tol);

double house(const RootSet& rs);
double house(const MonicPoly& p);

/// nullopt when some root has 0 < |Im z| <= tol * max(1, |z|).
std::optional<Signature> signature(const RootSet& rs, double tol = default_class_tol);
std::optional<Signature> signature(const MonicPoly& p, double tol = default_class_tol);

bool is_in_omega(const RootSet& rs, double tol = default_class_tol);
bool is_in_omega(const MonicPoly& p, double tol = default_class_tol);
/// Floating Schur-Cohn recursion as a cheap filter: true only when every
/// step before the first failing one cleared the unit bound by `margin` and
/// the failing one exceeds it by `margin`, so some root has modulus >= 1.
bool schur_cohn_rejects(const MonicPoly& p, double margin = 1e-6);

PerronStatus perron_status(const RootSet& rs, double tol = default_class_tol);
PerronStatus perron_status(const MonicPoly& p, double tol = default_class_tol);
/// Only a decided perron answer counts; ties are rejected.
bool is_perron(const MonicPoly& p, double tol = default_class_tol);

/// Exact Perron test for a monic rational polynomial: a unique, simple,
/// real root of maximal modulus. Never indeterminate.
bool is_perron_exact(const QPoly& p);

/// Exact signature via Sturm sequences (multiplicity counted).
Signature signature_exact(const QPoly& p);

/// p_k = q_k + a q_{N-k} (q_0 = 1, q_N = 0), p_N = a.
MonicPoly fam_extend(const MonicPoly& q, double a);

/// t^{N-1} q(x/t) (x - t): b_k = t^k (q_k - q_{k-1}), q_0 = 1, q_N = 0.
MonicPoly perron_extend(const MonicPoly& q, double t);

/// {"degree": N, "coeffs": [...]}; doubles, or decimal strings when exact.
std::string to_json(const MonicPoly& p);
std::string to_json(const IntMonicPoly& p);
MonicPoly monic_from_json(const std::string& text);
IntMonicPoly int_monic_from_json(const std::string& text);

}  // namespace perron
