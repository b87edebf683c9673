#pragma once

#include "perron/qpoly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace perron {

/// Root counts relative to a circle; counts include multiplicity.
struct DiskClassification {
    int interior = 0;
    int boundary = 0;
    int exterior = 0;

    int total() const { return interior + boundary + exterior; }
    /// Every root in the closed disk.
    bool in_closed_disk() const { return exterior == 0; }
    /// Every root in the open disk.
    bool in_open_disk() const { return exterior == 0 && boundary == 0; }

    friend bool operator==(const DiskClassification&, const DiskClassification&) = default;
};

/// Exact root location relative to the unit circle.
///
/// Zero roots are split off first. The regular Schur-Cohn recursion runs
/// fraction-free on an integer multiple of q; if it hits a singular step the
/// polynomial is split as g * r with g = gcd(q, q*). Unit-circle roots all
/// live in g and are counted through the Chebyshev substitution y = x + 1/x
/// and Sturm sequences; g's remaining roots pair up as (z, 1/conj z). The
/// cofactor r is coprime to r*, so the inertia of its Schur-Cohn form
/// settles it exactly when the recursion is singular again.
///
/// Throws std::invalid_argument for the zero polynomial.
DiskClassification schur_cohn_exact(const QPoly& q);

/// Same classification for the circle |z| = radius (radius > 0).
DiskClassification classify_in_radius(const QPoly& q, const Rational& radius);

/// Integer-coefficient entry point (ascending powers) that avoids rationals
/// on the common regular path.
DiskClassification schur_cohn_integer(std::span<const BigInt> ascending);

/// Regular Schur-Cohn recursion on integer coefficients with nonzero
/// constant term. Returns the number of roots in the open unit disk, or
/// nullopt when a step is singular (this includes every polynomial with a
/// root on the circle).
std::optional<int> schur_cohn_regular_inside(std::vector<BigInt> ascending);

/// Number of unit-circle roots (with multiplicity) of a self-reciprocal q,
/// i.e. q* = +-q, with q(0) != 0.
int unit_circle_root_count(const QPoly& self_reciprocal);

/// (positive, negative, zero) eigenvalue counts of a rational symmetric
/// matrix, computed by exact congruence.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia symmetric_inertia(std::vector<std::vector<Rational>> m);

/// Exact rational determinant by Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

/// Schur-Cohn Hermitian form A^T A - B^T B of a real polynomial, with A and
/// B the lower-triangular Toeplitz matrices of the coefficients read from
/// the constant and from the leading end.
std::vector<std::vector<Rational>> schur_cohn_matrix(const QPoly& q);

/// Clears denominators: a positive integer multiple of q.
std::vector<BigInt> integer_multiple(const QPoly& q);

}  // namespace perron
