#include "degen/serialize.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degen {

namespace {

struct TermText {
    bool negative = false;
    std::string magnitude;
};

std::string join_power(const std::string& var, std::size_t deg) {
    if (deg == 1) return var;
    return var + "^" + std::to_string(deg);
}

TermText monomial_text(const Rational& coeff, const std::string& vars) {
    TermText term;
    Rational magnitude = coeff;
    if (magnitude < 0) {
        term.negative = true;
        magnitude = -magnitude;
    }
    const bool unit = magnitude == 1;
    if (vars.empty()) {
        term.magnitude = to_string(magnitude);
    } else if (unit) {
        term.magnitude = vars;
    } else {
        term.magnitude = to_string(magnitude) + "*" + vars;
    }
    return term;
}

std::string assemble(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out += "-";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].magnitude;
    }
    return out;
}

std::string var_product(std::size_t l_deg, std::size_t x_deg, std::size_t y_deg) {
    std::string vars;
    auto append = [&vars](const std::string& piece) {
        if (!vars.empty()) vars += "*";
        vars += piece;
    };
    if (l_deg > 0) append(join_power("l", l_deg));
    if (x_deg > 0) append(join_power("x", x_deg));
    if (y_deg > 0) append(join_power("y", y_deg));
    return vars;
}

nlohmann::ordered_json point_to_json(const SweepPoint& point) {
    nlohmann::ordered_json j;
    j["n"] = point.n;
    j["k"] = point.k;
    j["r"] = point.r;
    j["p"] = point.p;
    return j;
}

}  // namespace

std::string render_text(const Rational& value) { return to_string(value); }

std::string render_text(const LambdaPoly& poly) {
    std::vector<TermText> terms;
    const auto& coeffs = poly.coeffs();
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        terms.push_back(monomial_text(coeffs[d], var_product(d, 0, 0)));
    }
    return assemble(terms);
}

std::string render_text(const MultiPoly& poly) {
    std::vector<TermText> terms;
    const auto& y_coeffs = poly.coeffs();
    for (std::size_t yd = 0; yd < y_coeffs.size(); ++yd) {
        const auto& x_coeffs = y_coeffs[yd].coeffs();
        for (std::size_t xd = 0; xd < x_coeffs.size(); ++xd) {
            const auto& l_coeffs = x_coeffs[xd].coeffs();
            for (std::size_t ld = 0; ld < l_coeffs.size(); ++ld) {
                if (l_coeffs[ld] == 0) continue;
                terms.push_back(monomial_text(l_coeffs[ld], var_product(ld, xd, yd)));
            }
        }
    }
    return assemble(terms);
}

nlohmann::ordered_json to_json(const Rational& value) { return to_string(value); }

nlohmann::ordered_json to_json(const LambdaPoly& poly) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : poly.coeffs()) arr.push_back(to_string(c));
    return arr;
}

nlohmann::ordered_json to_json(const MultiPoly& poly) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& x_poly : poly.coeffs()) {
        nlohmann::ordered_json x_arr = nlohmann::ordered_json::array();
        for (const auto& l_poly : x_poly.coeffs()) x_arr.push_back(to_json(l_poly));
        arr.push_back(std::move(x_arr));
    }
    return arr;
}

nlohmann::ordered_json to_json(const TruncatedSeries<LambdaPoly>& series) {
    nlohmann::ordered_json j;
    j["order"] = series.order();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= series.order(); ++n) coeffs.push_back(to_json(series.coeff(n)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

nlohmann::ordered_json to_json(const TruncatedSeries<MultiPoly>& series) {
    nlohmann::ordered_json j;
    j["order"] = series.order();
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int n = 0; n <= series.order(); ++n) coeffs.push_back(to_json(series.coeff(n)));
    j["coeffs"] = std::move(coeffs);
    return j;
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["pass"] = report.pass;
    j["points"] = report.points;
    j["wall_time_ms"] = report.wall_ms;
    if (report.counterexample) {
        nlohmann::ordered_json cx;
        cx["point"] = point_to_json(report.counterexample->point);
        cx["lhs"] = to_json(report.counterexample->lhs);
        cx["rhs"] = to_json(report.counterexample->rhs);
        cx["lhs_text"] = render_text(report.counterexample->lhs);
        cx["rhs_text"] = render_text(report.counterexample->rhs);
        j["counterexample"] = std::move(cx);
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) {
        throw std::invalid_argument("rational_from_json: expected a \"p/q\" string");
    }
    return parse_rational(j.get<std::string>());
}

LambdaPoly lambda_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("lambda_poly_from_json: expected an array of rationals");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) coeffs.push_back(rational_from_json(entry));
    return LambdaPoly(std::move(coeffs));
}

MultiPoly multi_poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw std::invalid_argument("multi_poly_from_json: expected nested coefficient arrays");
    }
    std::vector<XLPoly> y_coeffs;
    y_coeffs.reserve(j.size());
    for (const auto& x_entry : j) {
        if (!x_entry.is_array()) {
            throw std::invalid_argument("multi_poly_from_json: expected nested coefficient arrays");
        }
        std::vector<LambdaPoly> x_coeffs;
        x_coeffs.reserve(x_entry.size());
        for (const auto& l_entry : x_entry) x_coeffs.push_back(lambda_poly_from_json(l_entry));
        y_coeffs.push_back(XLPoly(std::move(x_coeffs)));
    }
    return MultiPoly(std::move(y_coeffs));
}

}  // namespace degen
