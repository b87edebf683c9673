#include "perron/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace perron {

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(BigInt(num), BigInt(den));
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole)
{
    if (digits.empty())
        throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
    return BigInt(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty number");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), whole);
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        value = make_rational(num, den);
    } else {
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string exp_text(text.substr(e + 1));
            if (exp_text.empty())
                throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
            std::size_t used = 0;
            exponent = std::stol(exp_text, &used);
            if (used != exp_text.size())
                throw std::invalid_argument("malformed number: '" + std::string(whole) + "'");
            text = text.substr(0, e);
        }
        std::string digits;
        long frac_digits = 0;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
            frac_digits = static_cast<long>(text.size() - dot - 1);
        } else {
            digits = std::string(text);
        }
        BigInt mantissa = parse_integer(digits, whole);
        value = Rational(mantissa) * pow_rational(Rational(10), exponent - frac_digits);
    }
    return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double log10_abs(const Rational& q)
{
    if (q == 0)
        return -std::numeric_limits<double>::infinity();
    long exp_num = 0;
    long exp_den = 0;
    double m_num = mpz_get_d_2exp(&exp_num, q.get_num_mpz_t());
    double m_den = mpz_get_d_2exp(&exp_den, q.get_den_mpz_t());
    return std::log10(std::fabs(m_num) / m_den) + static_cast<double>(exp_num - exp_den) * std::log10(2.0);
}

double to_double(const Rational& q)
{
    const double d = q.get_d();
    if (d != 0.0 || q == 0)
        return d;
    // Underflowed through mpq_get_d's truncation; go through log space.
    const double l = log10_abs(q);
    return (q < 0 ? -1.0 : 1.0) * std::pow(10.0, l);
}

std::string to_decimal_string(const Rational& q, int significant_digits)
{
    if (q == 0)
        return "0";
    const double l = log10_abs(q);
    const bool scientific = l < -4.0 || l >= 15.0;
    mpf_class f(q, 64 + static_cast<mp_bitcnt_t>(4 * significant_digits));
    std::vector<char> buf(static_cast<std::size_t>(significant_digits) + 64);
    const char* fmt = scientific ? "%.*Fe" : "%.*Fg";
    const int precision = scientific ? significant_digits - 1 : significant_digits;
    int n = gmp_snprintf(buf.data(), buf.size(), fmt, precision, f.get_mpf_t());
    if (n < 0)
        throw std::runtime_error("decimal formatting failed");
    if (static_cast<std::size_t>(n) >= buf.size()) {
        buf.resize(static_cast<std::size_t>(n) + 1);
        gmp_snprintf(buf.data(), buf.size(), fmt, precision, f.get_mpf_t());
    }
    return std::string(buf.data());
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    if (k > n)
        return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow_rational(const Rational& base, long exponent)
{
    if (exponent >= 0) {
        Rational r(pow_int(base.get_num(), static_cast<unsigned long>(exponent)),
                   pow_int(base.get_den(), static_cast<unsigned long>(exponent)));
        r.canonicalize();
        return r;
    }
    if (base == 0)
        throw std::domain_error("zero to a negative power");
    return pow_rational(Rational(1) / base, -exponent);
}

}  // namespace perron
