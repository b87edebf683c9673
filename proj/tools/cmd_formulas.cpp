#include "commands.hpp"

#include "perron/exact.hpp"

#include <json.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

namespace lab {

namespace {

struct FormulaArgs {
    std::string quantity;
    int degree = -1;
    std::string alpha = "1";
    std::string beta = "1";
    std::optional<std::string> t;
    std::string a = "-1/2";
    std::string b = "1/2";
    std::string volume_class = "all";
};

// One evaluated quantity: exact when the formula is rational.
struct Value {
    std::optional<perron::Rational> exact;
    std::optional<perron::QPoly> poly;
    double decimal = 0.0;
    bool conjectural = false;
    std::string note;
};

perron::Rational rational_arg(const std::string& name, const std::string& text)
{
    try {
        return perron::parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

long integer_arg(const std::string& name, const perron::Rational& q)
{
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw UsageError("--" + name + " must be an integer here");
    return q.get_num().get_si();
}

std::string poly_string(const perron::QPoly& p)
{
    std::ostringstream o;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const perron::Rational& c = p.coeff(k);
        if (c == 0)
            continue;
        if (!first)
            o << (c < 0 ? " - " : " + ");
        else if (c < 0)
            o << "-";
        first = false;
        o << perron::to_fraction_string(abs(c));
        if (k > 0)
            o << " T" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return first ? "0" : o.str();
}

Value from_exact(perron::Rational q, bool conjectural = false)
{
    Value v;
    v.decimal = perron::to_double(q);
    v.exact = std::move(q);
    v.conjectural = conjectural;
    return v;
}

Value polynomial_or_value(const perron::QPoly& p, const FormulaArgs& f, bool conjectural)
{
    if (f.t)
        return from_exact(p(rational_arg("T", *f.t)), conjectural);
    Value v;
    v.poly = p;
    v.conjectural = conjectural;
    v.decimal = std::nan("");
    return v;
}

Value evaluate(const FormulaArgs& f)
{
    const int n = f.degree;
    const std::string& q = f.quantity;
    if (q == "D" || q == "DP" || q == "Dplus" || q == "Dminus")
        return from_exact(perron::volume(perron::parse_volume_class(q), n));
    if (q == "CN")
        return polynomial_or_value(perron::C_N(rational_arg("alpha", f.alpha), n), f, false);
    if (q == "SN") {
        const perron::Rational a = rational_arg("alpha", f.alpha), b = rational_arg("beta", f.beta);
        if (a.get_den() == 1 && b.get_den() == 1)
            return from_exact(perron::S_N(integer_arg("alpha", a), integer_arg("beta", b), n));
        Value v;
        const double l = perron::log_S_N(perron::to_double(a), perron::to_double(b), n);
        v.decimal = std::exp(l);
        v.note = "log-gamma evaluation, natural log " + std::to_string(l);
        return v;
    }
    if (q == "Cminus")
        return from_exact(perron::C_minus(rational_arg("alpha", f.alpha), n));
    if (q == "moment")
        return from_exact(perron::moment_M(rational_arg("alpha", f.alpha), n));
    if (q == "perron-moment")
        return from_exact(perron::perron_moment(rational_arg("alpha", f.alpha), n));
    if (q == "rN")
        return from_exact(perron::expected_real_roots(n), true);
    if (q == "conj")
        return polynomial_or_value(perron::conj_absolute(n), f, true);
    if (q == "zeros-interval") {
        const perron::Rational a = rational_arg("a", f.a), b = rational_arg("b", f.b);
        Value v = from_exact(perron::expected_zeros_interval(n, a, b), true);
        v.note = "asymptotic " + std::to_string(perron::asymptotic_zeros_interval(perron::to_double(a), perron::to_double(b)));
        return v;
    }
    if (q == "smallest-X") {
        Value v;
        v.decimal = perron::smallest_X(perron::parse_volume_class(f.volume_class), n);
        return v;
    }
    if (q == "constant-probe") {
        Value v;
        v.decimal = perron::asymptotic_constant_probe(n);
        std::ostringstream o;
        o.precision(15);
        o << "totally complex form " << perron::asymptotic_constant_probe_complex(n) << ", limit " << perron::constant_C();
        v.note = o.str();
        return v;
    }
    throw UsageError("unknown quantity " + q);
}

std::string decimal_string(const Value& v)
{
    if (v.exact)
        return perron::to_decimal_string(*v.exact, 15);
    std::ostringstream o;
    o.precision(15);
    o << v.decimal;
    return o.str();
}

}  // namespace

void add_formulas(CLI::App& app, const Globals& g, int& status)
{
    auto f = std::make_shared<FormulaArgs>();
    CLI::App* cmd = app.add_subcommand("formulas", "Exact values of volumes, integrals and moments");
    cmd->add_option("--quantity", f->quantity, "Quantity to evaluate")
        ->required()
        ->check(CLI::IsMember({"D", "DP", "Dplus", "Dminus", "CN", "SN", "Cminus", "moment", "perron-moment", "rN",
                               "conj", "zeros-interval", "smallest-X", "constant-probe"}));
    cmd->add_option("--degree,-N", f->degree, "Degree N")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--alpha", f->alpha, "alpha as p/q (default 1)");
    cmd->add_option("--beta", f->beta, "beta as p/q (default 1)");
    cmd->add_option("--T", f->t, "Evaluate a polynomial in T at this point");
    cmd->add_option("--a", f->a, "Left end of the interval (default -1/2)");
    cmd->add_option("--b", f->b, "Right end of the interval (default 1/2)");
    cmd->add_option("--class", f->volume_class, "Volume class for smallest-X")
        ->check(CLI::IsMember({"all", "perron", "totally_real", "totally_complex"}));

    cmd->callback([f, &g, &status] {
        apply_workers(g);
        Value v;
        try {
            v = evaluate(*f);
        } catch (const UsageError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            std::cerr << "perron_lab formulas: " << e.what() << '\n';
            status = 1;
            return;
        } catch (const std::domain_error& e) {
            std::cerr << "perron_lab formulas: " << e.what() << '\n';
            status = 1;
            return;
        }
        const bool big = v.exact && std::abs(perron::log10_abs(*v.exact)) >= 15;
        if (g.json) {
            nlohmann::json j;
            j["quantity"] = f->quantity;
            j["N"] = f->degree;
            j["alpha"] = perron::to_fraction_string(perron::parse_rational(f->alpha));
            if (v.poly) {
                std::vector<std::string> c;
                for (int k = 0; k <= v.poly->degree(); ++k)
                    c.push_back(perron::to_fraction_string(v.poly->coeff(k)));
                j["exact"] = c;
                j["decimal"] = nullptr;
            } else {
                j["exact"] = v.exact ? nlohmann::json(perron::to_fraction_string(*v.exact)) : nlohmann::json(nullptr);
                j["decimal"] = v.decimal;
            }
            if (v.exact)
                j["log10"] = perron::log10_abs(*v.exact);
            j["conjectural"] = v.conjectural;
            if (!v.note.empty())
                j["note"] = v.note;
            std::cout << j.dump() << '\n';
            return;
        }
        const std::string flag = v.conjectural ? " (conjectural)" : "";
        if (v.poly) {
            std::cout << poly_string(*v.poly) << flag << '\n';
            return;
        }
        std::cout << (v.exact ? perron::to_fraction_string(*v.exact) : decimal_string(v)) << flag << '\n';
        if (v.exact && v.exact->get_den() != 1)
            std::cout << "decimal " << decimal_string(v) << '\n';
        if (big)
            std::cout << "log10 " << perron::log10_abs(*v.exact) << '\n';
        if (!v.note.empty())
            std::cout << v.note << '\n';
    });
}

}  // namespace lab
