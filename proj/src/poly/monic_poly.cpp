#include "perron/poly.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace perron {

MonicPoly::MonicPoly(std::vector<double> a) : coeffs(std::move(a))
{
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw std::invalid_argument("MonicPoly: non-finite coefficient");
}

double MonicPoly::a(int k) const
{
    if (k == 0)
        return 1.0;
    if (k < 0 || k > degree())
        return 0.0;
    return coeffs[static_cast<std::size_t>(k - 1)];
}

double MonicPoly::operator()(double x) const
{
    double acc = 1.0;
    for (double c : coeffs)
        acc = acc * x + c;
    return acc;
}

Complex MonicPoly::operator()(Complex z) const
{
    Complex acc = 1.0;
    for (double c : coeffs)
        acc = acc * z + c;
    return acc;
}

MonicPoly MonicPoly::scaled(double s) const
{
    MonicPoly out = *this;
    double p = 1.0;
    for (double& c : out.coeffs) {
        p *= s;
        c *= p;
    }
    return out;
}

QPoly MonicPoly::to_qpoly() const
{
    std::vector<Rational> v(coeffs.size() + 1);
    for (int k = 1; k <= degree(); ++k)
        v[static_cast<std::size_t>(degree() - k)] = Rational(coeffs[static_cast<std::size_t>(k - 1)]);
    v.back() = 1;
    return QPoly(std::move(v));
}

MonicPoly MonicPoly::from_roots(const std::vector<Complex>& roots)
{
    std::vector<Complex> c{1.0};
    for (const Complex& r : roots) {
        c.push_back(0.0);
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] -= r * c[k - 1];
    }
    MonicPoly p;
    p.coeffs.reserve(roots.size());
    for (std::size_t k = 1; k < c.size(); ++k)
        p.coeffs.push_back(c[k].real());
    return p;
}

MonicPoly MonicPoly::monomial(int n)
{
    return MonicPoly(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

BigInt IntMonicPoly::a(int k) const
{
    if (k == 0)
        return 1;
    if (k < 0 || k > degree())
        return 0;
    return coeffs[static_cast<std::size_t>(k - 1)];
}

std::vector<BigInt> IntMonicPoly::ascending() const
{
    std::vector<BigInt> v(coeffs.size() + 1);
    for (int k = 0; k <= degree(); ++k)
        v[static_cast<std::size_t>(degree() - k)] = a(k);
    return v;
}

QPoly IntMonicPoly::to_qpoly() const
{
    std::vector<Rational> v;
    for (const auto& c : ascending())
        v.emplace_back(c);
    return QPoly(std::move(v));
}

MonicPoly IntMonicPoly::to_monic() const
{
    std::vector<double> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.push_back(c.get_d());
    return MonicPoly(std::move(v));
}

MonicPoly fam_extend(const MonicPoly& q, double a)
{
    if (!(std::abs(a) <= 1.0))
        throw std::domain_error("fam_extend: |a_N| must be at most 1");
    const int n = q.degree() + 1;
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int k = 1; k < n; ++k)
        p[static_cast<std::size_t>(k - 1)] = q.a(k) + a * q.a(n - k);
    p.back() = a;
    return MonicPoly(std::move(p));
}

MonicPoly perron_extend(const MonicPoly& q, double t)
{
    if (!(std::abs(t) <= 1.0))
        throw std::domain_error("perron_extend: |t| must be at most 1");
    const int n = q.degree() + 1;
    std::vector<double> b(static_cast<std::size_t>(n));
    double tk = 1.0;
    for (int k = 1; k <= n; ++k) {
        tk *= t;
        b[static_cast<std::size_t>(k - 1)] = tk * (q.a(k) - q.a(k - 1));
    }
    return MonicPoly(std::move(b));
}

std::string to_json(const MonicPoly& p)
{
    nlohmann::json j;
    j["degree"] = p.degree();
    j["coeffs"] = p.coeffs;
    return j.dump();
}

std::string to_json(const IntMonicPoly& p)
{
    nlohmann::json j;
    j["degree"] = p.degree();
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : p.coeffs)
        arr.push_back(c.get_str());
    return j.dump();
}

namespace {

nlohmann::json parse_poly_json(const std::string& text)
{
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("polynomial JSON needs a coeffs array");
    if (j.contains("degree") && j["degree"].get<int>() != static_cast<int>(j["coeffs"].size()))
        throw std::invalid_argument("polynomial JSON: degree does not match coeffs");
    return j;
}

}  // namespace

MonicPoly monic_from_json(const std::string& text)
{
    nlohmann::json j = parse_poly_json(text);
    std::vector<double> v;
    for (const auto& c : j["coeffs"])
        v.push_back(c.is_string() ? to_double(parse_rational(c.get<std::string>())) : c.get<double>());
    return MonicPoly(std::move(v));
}

IntMonicPoly int_monic_from_json(const std::string& text)
{
    nlohmann::json j = parse_poly_json(text);
    IntMonicPoly p;
    for (const auto& c : j["coeffs"]) {
        if (c.is_string())
            p.coeffs.emplace_back(c.get<std::string>(), 10);
        else if (c.is_number_integer())
            p.coeffs.emplace_back(c.get<long>());
        else
            throw std::invalid_argument("integer polynomial JSON: non-integer coefficient");
    }
    return p;
}

}  // namespace perron
