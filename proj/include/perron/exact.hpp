#pragma once

#include "perron/qpoly.hpp"
#include "perron/rational.hpp"

#include <string_view>
#include <vector>

namespace perron {

enum class VolumeClass { all, perron, totally_real, totally_complex };

VolumeClass parse_volume_class(std::string_view name);
std::string_view to_string(VolumeClass c);

/// D_N, D^P_N, D^+_N or D^-_N. totally_complex needs even N.
Rational volume(VolumeClass c, int n);
/// Natural log of the same volume, via log-gamma sums (any size of N).
long double log_volume(VolumeClass c, int n);

/// Rising factorial (a)_k.
Rational pochhammer(const Rational& a, unsigned k);

/// Integral of |a_N|^{alpha-1} P(T) over Omega_N as a polynomial in T.
QPoly C_N(const Rational& alpha, int n);
/// Its T^N coefficient: the integral of |a_N|^{alpha-1}.
Rational C_N_scalar(const Rational& alpha, int n);

/// Integral of P(1)^{alpha-1} |P(-1)|^{beta-1} over Omega_N; exact for
/// positive integers.
Rational S_N(long alpha, long beta, int n);
/// Log-gamma evaluation for real alpha, beta > 0 (natural log of S_N).
double log_S_N(double alpha, double beta, int n);

/// Integral of |a_{2N}|^{alpha-1} over Omega_{0,N}: product of Pochhammer
/// symbols, and the determinant of the 8/((2a+2i+2j-3)(2i-2j+1)) matrix.
Rational C_minus(const Rational& alpha, int n);
Rational C_minus_det(const Rational& alpha, int n);

/// E(Omega_N, |a_N|^{alpha-1}) = prod_{k=0}^{floor((N-1)/2)} (1+2k)/(alpha+2k).
Rational moment_M(const Rational& alpha, int n);
/// Density and CDF of |a_N| on [0, 1].
double density_H(double x, int n);
double cdf_H(double x, int n);
/// E log|a_N| = -(1 + 1/3 + ... + 1/(2m+1)), m = floor((N-1)/2).
Rational E_log_aN(int n);

/// E(Omega^P_N, |a_N|^{alpha-1}), by the parity formula.
Rational perron_moment(const Rational& alpha, int n);
/// Same quantity from 4 C_{N-1}(alpha, 1) / (N (N + 2 alpha - 1)) / D^P_N.
Rational perron_moment_via_C(const Rational& alpha, int n);
/// E(Omega^P_N, log|a_N|), the alpha-derivative of perron_moment at 1.
Rational perron_E_log_aN(int n);

/// A_N(i) = E a_i over Omega_N (a_0 = 1), read off C_N(1, T).
Rational coeff_mean_A(int n, int i);
/// A_N(i, j) = E a_i a_j, by the dynamic program over the Fam recursion.
Rational coeff_second_moment_A(int n, int i, int j);
/// Full (N+1) x (N+1) table of A_N(i, j).
std::vector<std::vector<Rational>> coeff_second_moment_table(int n);
/// Mean vector by the same recursion (cross-check of coeff_mean_A).
std::vector<Rational> coeff_mean_table(int n);

/// (1/D_N) * integral of |P(T)| over Omega_N, as conjectured. Conjectural.
QPoly conj_absolute(int n);
/// r_N = (D_{N-1}/D_N) * integral_{-1}^{1} conj_absolute(N-1). Conjectural.
Rational expected_real_roots(int n);
/// r_{2n+1} == (3+4n)/(1+4n) r_{2n} + 1/(4n+1), checked exactly.
bool zeil_check(int n);
/// Expected zeros in [a, b]. Conjectural.
Rational expected_zeros_interval(int n, const Rational& a, const Rational& b);
/// (1/2pi) log|(1-a)(1+b)/((1+a)(1-b))|.
double asymptotic_zeros_interval(double a, double b);

/// 2^{N^2/2} (D^+_N / D_N) / N^{1/8}, in log space.
double asymptotic_constant_probe(int n);
/// sqrt(2 pi) (2N)^{3/8} D^-_{2N} / (2 D_{2N}).
double asymptotic_constant_probe_complex(int n);
/// 2^{-1/24} exp(-3/2 zeta'(-1)) as printed (five decimals).
double constant_C();
constexpr double constant_C_tolerance = 5e-6;

/// Smallest X with Vol * X^{N(N+1)/2} >= 1.
double smallest_X(VolumeClass c, int n);

}  // namespace perron
