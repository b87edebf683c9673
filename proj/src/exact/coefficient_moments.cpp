#include "perron/exact.hpp"

#include <stdexcept>

namespace perron {

namespace {

void require_index(int n, int i)
{
    if (n < 1)
        throw std::out_of_range("coefficient moment: degree must be at least 1");
    if (i < 0 || i > n)
        throw std::out_of_range("coefficient moment: index outside 0..N");
}

// E a_N and E a_N^2 under the step density |det T_{N-1}| on [-1, 1].
std::pair<Rational, Rational> step_moments(int n)
{
    if (n % 2 == 0)
        return {make_rational(1, n + 1), make_rational(1, n + 1)};
    return {Rational(0), make_rational(1, n + 2)};
}

}  // namespace

Rational coeff_mean_A(int n, int i)
{
    require_index(n, i);
    // C_N(1, T) / D_N = E P(T) = sum_i A_N(i) T^{N-i}.
    return C_N(Rational(1), n).coeff(n - i) / volume(VolumeClass::all, n);
}

std::vector<Rational> coeff_mean_table(int n)
{
    require_index(n, 0);
    // a_i -> q_i + a q_{N-i} with q_0 = 1 and q_N = 0.
    std::vector<Rational> mean{Rational(1)};
    for (int d = 1; d <= n; ++d) {
        const auto [w1, w2] = step_moments(d);
        (void)w2;
        auto prev = [&](int k) { return k < d ? mean[static_cast<std::size_t>(k)] : Rational(0); };
        std::vector<Rational> next(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i)
            next[static_cast<std::size_t>(i)] = prev(i) + w1 * prev(d - i);
        mean = std::move(next);
    }
    return mean;
}

std::vector<std::vector<Rational>> coeff_second_moment_table(int n)
{
    require_index(n, 0);
    std::vector<std::vector<Rational>> a{{Rational(1)}};
    for (int d = 1; d <= n; ++d) {
        const auto [w1, w2] = step_moments(d);
        auto prev = [&](int i, int j) {
            return i < d && j < d ? a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] : Rational(0);
        };
        std::vector<std::vector<Rational>> next(static_cast<std::size_t>(d) + 1, std::vector<Rational>(static_cast<std::size_t>(d) + 1));
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j <= d; ++j)
                next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    prev(i, j) + w1 * (prev(i, d - j) + prev(j, d - i)) + w2 * prev(d - i, d - j);
        a = std::move(next);
    }
    return a;
}

Rational coeff_second_moment_A(int n, int i, int j)
{
    require_index(n, i);
    require_index(n, j);
    return coeff_second_moment_table(n)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

}  // namespace perron
