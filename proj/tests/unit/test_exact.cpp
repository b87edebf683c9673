#include "perron/exact.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace perron;

namespace {

Rational q(long p, long d = 1)
{
    return make_rational(p, d);
}

}  // namespace

TEST(Volume, SmallDegrees)
{
    EXPECT_EQ(volume(VolumeClass::all, 1), q(2));
    EXPECT_EQ(volume(VolumeClass::all, 2), q(4));
    EXPECT_EQ(volume(VolumeClass::all, 3), q(16, 3));
    EXPECT_EQ(volume(VolumeClass::all, 4), q(64, 9));
    EXPECT_EQ(volume(VolumeClass::all, 5), q(1024, 135));
    EXPECT_EQ(volume(VolumeClass::totally_real, 2), q(4, 3));
    EXPECT_EQ(volume(VolumeClass::totally_real, 3), q(16, 45));
    EXPECT_EQ(volume(VolumeClass::totally_real, 4), q(64, 1575));
    EXPECT_EQ(volume(VolumeClass::totally_complex, 2), q(8, 3));
    EXPECT_EQ(volume(VolumeClass::totally_complex, 4), q(2048, 525));
    EXPECT_EQ(volume(VolumeClass::perron, 2), q(4, 3));
    EXPECT_THROW(volume(VolumeClass::totally_complex, 3), std::domain_error);
    EXPECT_THROW(volume(VolumeClass::all, 0), std::domain_error);
}

TEST(Volume, ThurstonScaleIsTheStatedFraction)
{
    const Rational scaled = pow_rational(q(5), 210) * volume(VolumeClass::perron, 21);
    const Rational expected = Rational(pow_int(2, 189) * pow_int(5, 198)) /
                              Rational(pow_int(3, 24) * pow_int(7, 10) * pow_int(11, 11) * pow_int(13, 9) *
                                       pow_int(17, 5) * pow_int(19, 3));
    EXPECT_EQ(scaled, expected);
    EXPECT_LT(std::abs(std::pow(10.0, log10_abs(scaled) - 143.0) / 8.308 - 1.0), 5e-4);
}

TEST(Volume, DecompositionFloor)
{
    for (int n = 2; n <= 12; n += 2) {
        const Rational sum = volume(VolumeClass::totally_real, n) + volume(VolumeClass::totally_complex, n);
        if (n == 2)
            EXPECT_EQ(sum, volume(VolumeClass::all, n));
        else
            EXPECT_LT(sum, volume(VolumeClass::all, n));
    }
}

TEST(Volume, LogVolumeMatchesExact)
{
    for (auto c : {VolumeClass::all, VolumeClass::perron, VolumeClass::totally_real}) {
        for (int n = 1; n <= 30; ++n) {
            const double exact = std::log(10.0) * log10_abs(volume(c, n));
            EXPECT_NEAR(static_cast<double>(log_volume(c, n)), exact, 1e-10 * std::max(1.0, std::abs(exact)));
        }
    }
    for (int n = 2; n <= 30; n += 2) {
        const double exact = std::log(10.0) * log10_abs(volume(VolumeClass::totally_complex, n));
        EXPECT_NEAR(static_cast<double>(log_volume(VolumeClass::totally_complex, n)), exact, 1e-10 * std::abs(exact));
    }
}

TEST(Pochhammer, Examples)
{
    EXPECT_EQ(pochhammer(q(1, 2), 2), q(3, 4));
    EXPECT_EQ(pochhammer(q(7, 3), 1), q(7, 3));
    EXPECT_EQ(pochhammer(q(3), 3), q(60));
    EXPECT_EQ(pochhammer(q(-5, 2), 0), q(1));
}

TEST(CN, SmallCases)
{
    const Rational a = q(5, 7);
    EXPECT_EQ(C_N(a, 1), QPoly({q(0), 2 / a}));
    EXPECT_EQ(C_N(a, 2), QPoly({4 / (a + 2), q(0), 4 / a}));
    EXPECT_EQ(C_N(q(1), 2)(q(1)), q(16, 3));
    EXPECT_THROW(C_N(q(0), 3), std::domain_error);
    EXPECT_THROW(C_N(q(-1), 3), std::domain_error);
}

TEST(CN, LeadingCoefficientIsTheMomentIntegral)
{
    for (int n = 1; n <= 12; ++n) {
        EXPECT_EQ(C_N_scalar(q(1), n), volume(VolumeClass::all, n));
        EXPECT_EQ(C_N_scalar(q(3, 2), n), volume(VolumeClass::all, n) * moment_M(q(3, 2), n));
    }
}

TEST(CN, SignedIntegralOverT)
{
    // Parity of the number of real roots: the integral over T is D_{N+1} or 0.
    for (int n = 1; n <= 14; ++n) {
        const Rational v = C_N(q(1), n).integrate(-1, 1) / volume(VolumeClass::all, n + 1);
        EXPECT_EQ(v, n % 2 == 0 ? q(1) : q(0)) << n;
    }
}

TEST(PerronVolume, IdentityThroughCN)
{
    for (int n = 2; n <= 40; ++n)
        EXPECT_EQ(4 * C_N(q(1), n - 1)(q(1)) / (n * (n + 1)), volume(VolumeClass::perron, n)) << n;
}

TEST(Selberg, SpecialCases)
{
    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(S_N(1, 1, n), volume(VolumeClass::all, n)) << n;
    EXPECT_EQ(S_N(2, 1, 2), q(16, 3));
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b) {
            // Beta integral over [-1, 1].
            const Rational beta = Rational(pow_int(2, static_cast<unsigned long>(a + b - 1)) *
                                           factorial(static_cast<unsigned long>(a - 1)) *
                                           factorial(static_cast<unsigned long>(b - 1))) /
                                  Rational(factorial(static_cast<unsigned long>(a + b - 1)));
            EXPECT_EQ(S_N(a, b, 1), beta);
        }
    // S_N(2, 1) integrates P(1), which is C_N(1, 1).
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(S_N(2, 1, n), C_N(q(1), n)(q(1)));
}

TEST(Selberg, LogGammaMatchesExact)
{
    for (int n = 1; n <= 10; ++n)
        for (long a = 1; a <= 3; ++a)
            for (long b = 1; b <= 3; ++b) {
                const double exact = std::log(10.0) * log10_abs(S_N(a, b, n));
                EXPECT_NEAR(log_S_N(static_cast<double>(a), static_cast<double>(b), n), exact, 1e-11 * std::max(1.0, std::abs(exact)));
            }
    // Real parameters at N = 1: the beta integral.
    const double a = 0.7, b = 2.3;
    const double ref = (a + b - 1) * std::log(2.0) + std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    EXPECT_NEAR(log_S_N(a, b, 1), ref, 1e-13);
    EXPECT_THROW(log_S_N(-1.0, 1.0, 2), std::domain_error);
}

TEST(CMinus, ProductEqualsDeterminant)
{
    EXPECT_EQ(C_minus(q(3, 2), 1), q(2));
    EXPECT_EQ(C_minus(q(1), 1), q(8, 3));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(1, 99), den(1, 10);
    for (int t = 0; t < 20; ++t) {
        const Rational a = make_rational(num(rng), den(rng));
        if (a >= 10)
            continue;
        for (int n = 1; n <= 6; ++n)
            ASSERT_EQ(C_minus(a, n), C_minus_det(a, n)) << a.get_str() << " " << n;
    }
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(C_minus(q(1), n), volume(VolumeClass::totally_complex, 2 * n)) << n;
    EXPECT_THROW(C_minus(q(0), 2), std::domain_error);
}

TEST(Moments, Examples)
{
    const Rational a = q(9, 4);
    EXPECT_EQ(moment_M(a, 1), 1 / a);
    EXPECT_EQ(moment_M(q(2), 5), q(5, 16));
    EXPECT_EQ(moment_M(q(1), 17), q(1));
    EXPECT_EQ(E_log_aN(3), q(-4, 3));
    EXPECT_EQ(E_log_aN(5), q(-23, 15));
    EXPECT_THROW(moment_M(q(0), 2), std::domain_error);
}

TEST(Moments, DensityIntegratesToOneAndMatchesMoments)
{
    for (int n : {1, 3, 6, 11}) {
        const int steps = 20000;
        double mass = 0.0, first = 0.0;
        for (int s = 0; s < steps; ++s) {
            const double x = (s + 0.5) / steps;
            mass += density_H(x, n) / steps;
            first += x * density_H(x, n) / steps;
        }
        EXPECT_NEAR(mass, 1.0, 1e-6);
        EXPECT_NEAR(first, to_double(moment_M(q(2), n)), 1e-6);
        EXPECT_NEAR(cdf_H(0.5, n), [&] {
            double c = 0.0;
            for (int s = 0; s < steps; ++s)
                c += density_H(0.5 * (s + 0.5) / steps, n) * 0.5 / steps;
            return c;
        }(), 1e-6);
    }
}

TEST(PerronMoment, DegreeTwentyOneAndCrossCheck)
{
    EXPECT_EQ(perron_moment(q(2), 21), q(88179, 524288));
    const Rational scaled = pow_rational(q(5), 21) * q(88179, 524288);
    EXPECT_LT(std::abs(to_double(scaled) / 8.020e13 - 1.0), 5e-4);
    EXPECT_EQ(perron_moment(q(2), 2), q(3, 10));
    for (int n = 2; n <= 24; ++n) {
        for (const Rational& a : {q(1), q(2), q(3, 2), q(7, 3)})
            EXPECT_EQ(perron_moment(a, n), perron_moment_via_C(a, n)) << n;
        if (n % 2 == 1) {
            EXPECT_EQ(perron_moment(q(2), n), moment_M(q(2), n));
        }
    }
    EXPECT_EQ(perron_moment(q(1), 8), q(1));
}

TEST(CoefficientMoments, Means)
{
    EXPECT_EQ(coeff_mean_A(2, 2), q(1, 3));
    EXPECT_EQ(coeff_mean_A(2, 0), q(1));
    for (int n = 1; n <= 20; ++n) {
        const auto dp = coeff_mean_table(n);
        for (int i = 0; i <= n; ++i) {
            EXPECT_EQ(coeff_mean_A(n, i), dp[static_cast<std::size_t>(i)]) << n << " " << i;
            if (i % 2 == 1) {
                EXPECT_EQ(coeff_mean_A(n, i), q(0));
            }
        }
    }
    EXPECT_THROW(coeff_mean_A(3, 4), std::out_of_range);
}

TEST(CoefficientMoments, SecondMomentsAndBound)
{
    EXPECT_EQ(coeff_second_moment_A(2, 2, 2), q(1, 3));
    EXPECT_EQ(coeff_second_moment_A(3, 3, 3), q(1, 5));
    // Omega_1 = [-1, 1]: E a_1^2 = 1/3.
    EXPECT_EQ(coeff_second_moment_A(1, 1, 1), q(1, 3));
    // Omega_2 by direct integration: E a_1^2 = (1/4) * int_{-1}^{1} int_{|a_1| < 1 + a_2} a_1^2.
    EXPECT_EQ(coeff_second_moment_A(2, 1, 1), q(2, 3));
    for (int n = 1; n <= 25; ++n) {
        const auto t = coeff_second_moment_table(n);
        const Rational bound(n * n * n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                const Rational& v = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                EXPECT_LE(abs(v), bound);
                EXPECT_EQ(v, t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
            }
        // First row is the mean vector.
        for (int i = 0; i <= n; ++i)
            EXPECT_EQ(t[0][static_cast<std::size_t>(i)], coeff_mean_A(n, i));
    }
}

TEST(Conjecture, Examples)
{
    EXPECT_EQ(conj_absolute(2)(q(0)), q(1, 2));
    EXPECT_EQ(conj_absolute(2)(q(1)), q(4, 3));
    EXPECT_EQ(conj_absolute(1)(q(0)), q(1, 2));
    EXPECT_EQ(conj_absolute(0), QPoly::constant(1));
}

TEST(Conjecture, EndpointsAgreeWithProvenFormula)
{
    for (int n = 1; n <= 30; ++n) {
        const QPoly c = C_N(q(1), n);
        const Rational d = volume(VolumeClass::all, n);
        EXPECT_EQ(conj_absolute(n)(q(1)), c(q(1)) / d) << n;
        // On Omega_N, P(-1) has sign (-1)^N.
        const Rational at_minus = c(q(-1)) / d;
        EXPECT_EQ(conj_absolute(n)(q(-1)), n % 2 == 0 ? at_minus : Rational(-at_minus)) << n;
    }
}

TEST(RealRoots, Table)
{
    const std::vector<Rational> table{q(0),          q(1),         q(2, 3),      q(17, 15),
                                      q(32, 35),     q(43, 35),    q(1226, 1155), q(1303, 1001),
                                      q(10496, 9009), q(208433, 153153), q(402, 323), q(1367, 969)};
    for (std::size_t n = 0; n < table.size(); ++n)
        EXPECT_EQ(expected_real_roots(static_cast<int>(n)), table[n]) << n;
    // Vol(Omega_{2,0}) route for N = 2.
    EXPECT_EQ(expected_real_roots(2), 2 * volume(VolumeClass::totally_real, 2) / volume(VolumeClass::all, 2));
}

TEST(RealRoots, Recurrence)
{
    for (int n = 0; n <= 30; ++n)
        EXPECT_TRUE(zeil_check(n)) << n;
}

TEST(RealRoots, Intervals)
{
    EXPECT_EQ(expected_zeros_interval(2, q(-1), q(1)), q(2, 3));
    EXPECT_THROW(expected_zeros_interval(3, q(1, 2), q(1, 2)), std::domain_error);
    EXPECT_NEAR(asymptotic_zeros_interval(-0.3, 0.3), std::log(1.3 / 0.7) / std::numbers::pi, 1e-15);
    EXPECT_NEAR(asymptotic_zeros_interval(0.0, 0.5), std::log(3.0) / (2.0 * std::numbers::pi), 1e-15);
    const double exact = to_double(expected_zeros_interval(40, q(-1, 2), q(1, 2)));
    const double asym = std::log(9.0) / (2.0 * std::numbers::pi);
    EXPECT_LT(std::abs(exact / asym - 1.0), 0.1);
}

TEST(Asymptotics, ConstantProbe)
{
    double prev = 0.0;
    for (int n : {64, 128, 256, 512}) {
        const double p = asymptotic_constant_probe(n);
        EXPECT_GT(p, prev);
        prev = p;
    }
    EXPECT_LT(std::abs(prev / constant_C() - 1.0), 0.01);
    const double c = asymptotic_constant_probe_complex(512);
    EXPECT_LT(std::abs(c / prev - 1.0), 0.01);
    EXPECT_GT(asymptotic_constant_probe(2), 0.0);
    EXPECT_TRUE(std::isfinite(asymptotic_constant_probe(2)));
    // Small N against the exact ratio.
    const double exact6 = std::pow(2.0, 18.0) * to_double(volume(VolumeClass::totally_real, 6) / volume(VolumeClass::all, 6)) /
                          std::pow(6.0, 0.125);
    EXPECT_NEAR(asymptotic_constant_probe(6), exact6, 1e-12 * exact6);
}

TEST(Asymptotics, SmallestX)
{
    EXPECT_NEAR(smallest_X(VolumeClass::all, 2), std::pow(4.0, -1.0 / 3.0), 1e-15);
    for (int n : {10, 100, 1000}) {
        const double x = smallest_X(VolumeClass::all, n);
        const double dev = n * (x - 1.0 - std::log(n) / n);
        EXPECT_LT(std::abs(dev), 4.0) << n;
        const double xr = smallest_X(VolumeClass::totally_real, n);
        EXPECT_LT(std::abs(n * (xr - 2.0 - 2.0 * std::log(n) / n)), 4.0 * std::log(n)) << n;
    }
}
