#include "perron/poly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace perron;

namespace {

QPoly from_ints(std::initializer_list<long> asc)
{
    std::vector<Rational> v;
    for (long c : asc)
        v.emplace_back(c);
    return QPoly(std::move(v));
}

const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(FindRoots, QuadraticsAndMultiplicity)
{
    RootSet rs = find_roots(MonicPoly({0.0, 0.5}));
    ASSERT_EQ(rs.roots.size(), 2u);
    for (const auto& z : rs.roots) {
        EXPECT_NEAR(z.real(), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(z), std::sqrt(0.5), 1e-14);
    }
    EXPECT_EQ(rs.roots[0], std::conj(rs.roots[1]));

    rs = find_roots(MonicPoly({0.0, 0.0, 0.0}));
    ASSERT_EQ(rs.roots.size(), 3u);
    for (const auto& z : rs.roots)
        EXPECT_EQ(z, Complex(0.0, 0.0));

    rs = find_roots(MonicPoly({-1.0, -1.0}));
    EXPECT_NEAR(house(rs), golden, 1e-14);
    EXPECT_NEAR(rs.roots[0].real(), (1.0 - std::sqrt(5.0)) / 2.0, 1e-14);
    EXPECT_GT(rs.residual_bound, 0.0);
    EXPECT_LT(rs.residual_bound, 1e-12);
}

TEST(FindRoots, ClusteredRootsStillReturn)
{
    // (x - 1/2)^4
    const MonicPoly p = MonicPoly::from_roots({0.5, 0.5, 0.5, 0.5});
    const RootSet rs = find_roots(p);
    ASSERT_EQ(rs.roots.size(), 4u);
    for (const auto& z : rs.roots)
        EXPECT_NEAR(std::abs(z - 0.5), 0.0, 1e-3);
}

TEST(FindRoots, Deterministic)
{
    const MonicPoly p({0.3, -0.2, 0.11, 0.05, -0.01});
    EXPECT_EQ(find_roots(p).roots, find_roots(p).roots);
    EXPECT_THROW(find_roots(MonicPoly{}), std::invalid_argument);
}

TEST(House, Examples)
{
    EXPECT_NEAR(house(MonicPoly({-1.0})), 1.0, 1e-15);
    EXPECT_NEAR(house(MonicPoly({-1.0, -1.0})), golden, 1e-14);
    EXPECT_NEAR(house(MonicPoly({0.0, 0.25})), 0.5, 1e-15);
}

TEST(House, GeometricMeanBoundAndScaling)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 500; ++t) {
        std::vector<double> a(7);
        for (double& c : a)
            c = u(rng);
        const MonicPoly p(a);
        const double h = house(p);
        EXPECT_GE(h + 1e-12, std::pow(std::abs(a.back()), 1.0 / 7.0));
        EXPECT_NEAR(house(p.scaled(2.5)), 2.5 * h, 1e-9 * h);
    }
}

TEST(Signature, Examples)
{
    EXPECT_EQ(signature(MonicPoly({0.0, -0.25})), (Signature{2, 0}));
    EXPECT_EQ(signature(MonicPoly({0.0, 0.5})), (Signature{0, 1}));
    EXPECT_EQ(signature(MonicPoly::from_roots({0.5, Complex(0, std::sqrt(0.5)), Complex(0, -std::sqrt(0.5))})),
              (Signature{1, 1}));
}

TEST(Signature, ExactMatchesNumeric)
{
    EXPECT_EQ(signature_exact(from_ints({-1, -1, 1})), (Signature{2, 0}));
    EXPECT_EQ(signature_exact(from_ints({1, 0, 1}) * from_ints({-1, 1})), (Signature{1, 1}));
    EXPECT_EQ(signature_exact(from_ints({1, -2, 1})), (Signature{2, 0}));
}

TEST(Omega, Membership)
{
    EXPECT_TRUE(is_in_omega(MonicPoly({0.0, 0.5})));
    EXPECT_FALSE(is_in_omega(MonicPoly({-1.0, -1.0})));
    for (int n = 1; n <= 12; ++n) {
        std::vector<double> a(static_cast<std::size_t>(n), 0.0);
        a.back() = -1.0;
        EXPECT_TRUE(is_in_omega(MonicPoly(a))) << n;
    }
}

TEST(Perron, Examples)
{
    EXPECT_TRUE(is_perron(MonicPoly({-0.5, 0.0, 0.0})));
    EXPECT_FALSE(is_perron(MonicPoly({0.0, 0.5})));
    EXPECT_EQ(perron_status(MonicPoly({0.0, 0.5})), PerronStatus::not_perron);
    EXPECT_FALSE(is_perron(MonicPoly({0.0, 0.0, 0.0, -0.125})));
    EXPECT_TRUE(is_perron(MonicPoly({-1.0, -1.0})));
    // Negative Perron roots count as well.
    EXPECT_TRUE(is_perron(MonicPoly({1.0, -1.0})));
}

TEST(Perron, ExactDecisions)
{
    EXPECT_TRUE(is_perron_exact(from_ints({-1, -1, 1})));
    EXPECT_TRUE(is_perron_exact(from_ints({-1, 1, 1})));
    EXPECT_FALSE(is_perron_exact(from_ints({1, 0, 1})));
    EXPECT_FALSE(is_perron_exact(from_ints({-2, 0, 0, 0, 1})));  // +-2^{1/4}
    EXPECT_FALSE(is_perron_exact(from_ints({-2, 0, 0, 1})));     // cube roots share a modulus
    EXPECT_FALSE(is_perron_exact(from_ints({-1, 0, 1})));        // +-1
    EXPECT_FALSE(is_perron_exact(from_ints({1, -2, 1})));        // double root
    EXPECT_TRUE(is_perron_exact(from_ints({-1, 1})));
    EXPECT_TRUE(is_perron_exact(from_ints({0, 1})));
    EXPECT_FALSE(is_perron_exact(from_ints({0, 0, 1})));
    // (x - 1)(x^2 + x + 1) = x^3 - 1: three roots on the unit circle.
    EXPECT_FALSE(is_perron_exact(from_ints({-1, 0, 0, 1})));
    // (x - 2)(x^2 + 1): 2 dominates.
    EXPECT_TRUE(is_perron_exact(from_ints({-2, 1, -2, 1})));
    // (x + 3)(x^2 - 2): -3 dominates.
    EXPECT_TRUE(is_perron_exact(from_ints({-6, -2, 3, 1})));
    // (x - 1)(x^2 + x + 2): complex pair of modulus sqrt 2 wins.
    EXPECT_FALSE(is_perron_exact(from_ints({-2, 1, 0, 1})));
}

TEST(Perron, ExactAgreesWithNumericOffTies)
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-6, 6), deg(1, 5);
    int compared = 0;
    for (int t = 0; t < 1500; ++t) {
        const int n = deg(rng);
        std::vector<double> desc(static_cast<std::size_t>(n));
        for (double& c : desc)
            c = coef(rng);
        const MonicPoly p(desc);
        const PerronStatus s = perron_status(p);
        if (s == PerronStatus::indeterminate)
            continue;
        ++compared;
        ASSERT_EQ(is_perron_exact(p.to_qpoly()), s == PerronStatus::perron) << to_json(p);
    }
    EXPECT_GT(compared, 1000);
}

TEST(FamExtend, Examples)
{
    EXPECT_EQ(fam_extend(MonicPoly({0.0}), 0.5), MonicPoly({0.0, 0.5}));
    const double t = 0.3;
    const MonicPoly p = fam_extend(MonicPoly({1.0}), t);
    EXPECT_DOUBLE_EQ(p.coeffs[0], 1.0 + t);
    EXPECT_DOUBLE_EQ(p.coeffs[1], t);
    EXPECT_EQ(fam_extend(MonicPoly({0.0, 0.0}), -0.5), MonicPoly({0.0, 0.0, -0.5}));
    EXPECT_NEAR(house(fam_extend(MonicPoly({0.0, 0.0}), -0.5)), std::pow(0.5, 1.0 / 3.0), 1e-14);
    EXPECT_THROW(fam_extend(MonicPoly({0.0}), 1.5), std::domain_error);
}

TEST(PerronExtend, Examples)
{
    const double c = 0.4, t = -0.7;
    const MonicPoly p = perron_extend(MonicPoly({c}), t);
    EXPECT_DOUBLE_EQ(p.coeffs[0], t * (c - 1.0));
    EXPECT_DOUBLE_EQ(p.coeffs[1], -c * t * t);
    const MonicPoly h = perron_extend(MonicPoly({0.0}), 0.5);
    EXPECT_EQ(h, MonicPoly({-0.5, 0.0}));
    EXPECT_TRUE(is_perron(h));
    EXPECT_EQ(perron_extend(MonicPoly({0.2, 0.1}), 0.0), MonicPoly::monomial(3));
    EXPECT_FALSE(is_perron(MonicPoly::monomial(3)));
}

TEST(PerronExtend, RootsAreScaledPlusT)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> qr{u(rng) * 0.9, u(rng) * 0.9};
        const Complex z(0.6 * u(rng), 0.6 * u(rng));
        qr.push_back(z);
        qr.push_back(std::conj(z));
        const MonicPoly q = MonicPoly::from_roots(qr);
        const double t = u(rng);
        const MonicPoly p = perron_extend(q, t);
        for (const auto& r : qr)
            EXPECT_LT(std::abs(p(t * r)), 1e-12);
        EXPECT_LT(std::abs(p(t)), 1e-12);
        EXPECT_TRUE(is_perron(p));
        EXPECT_NEAR(house(p), std::abs(t), 1e-12);
    }
}

TEST(Json, RoundTrip)
{
    const MonicPoly p({0.25, -1.5});
    EXPECT_EQ(monic_from_json(to_json(p)), p);
    IntMonicPoly ip{{BigInt(-1), BigInt("123456789012345678901234567890")}};
    EXPECT_EQ(int_monic_from_json(to_json(ip)), ip);
    EXPECT_EQ(monic_from_json(R"({"degree": 2, "coeffs": ["1/4", "-3/2"]})"), p);
    EXPECT_THROW(monic_from_json(R"({"degree": 3, "coeffs": [1, 2]})"), std::invalid_argument);
}
