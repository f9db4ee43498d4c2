#include <exception>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "degen/bernoulli.hpp"
#include "degen/errors.hpp"
#include "degen/identity.hpp"
#include "degen/poly_bernoulli.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/serialize.hpp"
#include "degen/stirling.hpp"

namespace {

using degen::Assignment;
using degen::MultiPoly;
using degen::Rational;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Family {
    stirling,
    rstirling,
    stirling_poly,
    beta_number,
    beta_poly,
    carlitz,
    fubini,
    poly_bernoulli,
};

struct FamilyTraits {
    const char* name;
    Family family;
    bool triangular;  // rows indexed by (n, k) rather than n alone
    bool scalar;      // entries carry no x or y
    bool needs_r;
    bool needs_p;
    bool has_x;
    bool has_y;
};

constexpr FamilyTraits kFamilies[] = {
    {"stirling", Family::stirling, true, true, false, false, false, false},
    {"rstirling", Family::rstirling, true, true, true, false, false, false},
    {"stirling_poly", Family::stirling_poly, true, false, false, false, true, false},
    {"beta_number", Family::beta_number, false, true, false, false, false, false},
    {"beta_poly", Family::beta_poly, false, false, false, false, true, false},
    {"carlitz", Family::carlitz, false, false, false, false, true, false},
    {"fubini", Family::fubini, false, false, false, false, true, true},
    {"poly_bernoulli", Family::poly_bernoulli, false, false, false, true, true, false},
};

const FamilyTraits& family_traits(const std::string& name) {
    for (const auto& t : kFamilies) {
        if (name == t.name) return t;
    }
    std::string known;
    for (const auto& t : kFamilies) {
        if (!known.empty()) known += ", ";
        known += t.name;
    }
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
}

std::optional<Rational> parse_lambda_flag(const std::string& text) {
    if (text == "sym") return std::nullopt;
    try {
        return degen::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --lambda value: ") + e.what());
    }
}

Rational parse_point_flag(const char* flag, const std::string& text) {
    try {
        return degen::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad ") + flag + " value: " + e.what());
    }
}

void require_flag(bool present, const char* family, const char* flag) {
    if (!present) {
        throw UsageError(std::string("family '") + family + "' requires " + flag);
    }
}

void reject_flag(bool present, const char* family, const char* flag) {
    if (present) {
        throw UsageError(std::string("family '") + family + "' does not take " + flag);
    }
}

struct TableOptions {
    std::string family;
    int n_max = 0;
    std::optional<int> k_max;
    std::optional<int> r;
    std::optional<int> p;
    std::string lambda = "sym";
    std::string format = "json";
};

struct CheckOptions {
    std::optional<std::string> filter;
    std::optional<int> n_max;
    std::optional<int> r_max;
    bool corrupt = false;
};

struct EvalOptions {
    std::string family;
    int n = 0;
    std::optional<int> k;
    std::optional<int> r;
    std::optional<int> p;
    std::optional<std::string> lambda;
    std::optional<std::string> x;
    std::optional<std::string> y;
};

struct TableEntry {
    int n = 0;
    int k = 0;
    MultiPoly value;
};

MultiPoly family_value(const FamilyTraits& traits, int n, int k, int r, int p) {
    switch (traits.family) {
        case Family::stirling:
            return degen::mp_of_lambda(degen::stirling2_deg(n, k));
        case Family::rstirling:
            return degen::mp_of_lambda(degen::rstirling2_deg(n, k, r));
        case Family::stirling_poly:
            return degen::stirling_poly(n, k);
        case Family::beta_number:
            return degen::mp_of_lambda(degen::beta_deg_number(n));
        case Family::beta_poly:
            return degen::beta_deg_poly(n);
        case Family::carlitz:
            return degen::carlitz_beta(n);
        case Family::fubini:
            return degen::fubini_deg(n);
        case Family::poly_bernoulli:
            return degen::poly_bernoulli_closed(p, n, degen::PolyBernoulliForm::thm7);
    }
    throw std::logic_error("family_value: unhandled family");
}

std::vector<TableEntry> build_table(const FamilyTraits& traits, const TableOptions& opt,
                                    const std::optional<Rational>& lambda) {
    std::vector<TableEntry> entries;

    // Whole-row generating-function builders avoid recomputing shared series
    // per entry for the n-indexed families.
    std::vector<MultiPoly> row_values;
    switch (traits.family) {
        case Family::beta_number:
            row_values = degen::beta_deg_gf(opt.n_max, degen::BetaMode::number);
            break;
        case Family::beta_poly:
            row_values = degen::beta_deg_gf(opt.n_max, degen::BetaMode::symbolic_x);
            break;
        case Family::poly_bernoulli:
            row_values = degen::poly_bernoulli_gf(*opt.p, opt.n_max);
            break;
        default:
            break;
    }

    for (int n = 0; n <= opt.n_max; ++n) {
        if (traits.triangular) {
            const int k_hi = std::min(n, opt.k_max.value_or(opt.n_max));
            for (int k = 0; k <= k_hi; ++k) {
                entries.push_back(
                    {n, k, family_value(traits, n, k, opt.r.value_or(0), opt.p.value_or(0))});
            }
        } else if (!row_values.empty()) {
            entries.push_back({n, 0, row_values[static_cast<std::size_t>(n)]});
        } else {
            entries.push_back({n, 0, family_value(traits, n, 0, 0, opt.p.value_or(0))});
        }
    }

    if (lambda) {
        for (auto& e : entries) {
            e.value = degen::eval(e.value, Assignment{.lambda = *lambda, .x = {}, .y = {}});
        }
    }
    return entries;
}

nlohmann::ordered_json entry_value_json(const FamilyTraits& traits, bool lambda_fixed,
                                        const MultiPoly& value) {
    if (traits.scalar) {
        if (lambda_fixed) return degen::to_json(degen::as_rational_const(value).value());
        return degen::to_json(degen::as_lambda_poly(value).value());
    }
    return degen::to_json(value);
}

std::string entry_value_text(const FamilyTraits& traits, bool lambda_fixed,
                             const MultiPoly& value) {
    if (traits.scalar) {
        if (lambda_fixed) return degen::render_text(degen::as_rational_const(value).value());
        return degen::render_text(degen::as_lambda_poly(value).value());
    }
    return degen::render_text(value);
}

int run_table(const TableOptions& opt) {
    const FamilyTraits& traits = family_traits(opt.family);
    if (opt.n_max < 0) throw UsageError("--n-max must be nonnegative");
    if (opt.k_max) {
        if (!traits.triangular) reject_flag(true, traits.name, "--k-max");
        if (*opt.k_max < 0) throw UsageError("--k-max must be nonnegative");
    }
    if (traits.needs_r) {
        require_flag(opt.r.has_value(), traits.name, "--r");
        if (*opt.r < 0) throw UsageError("--r must be nonnegative");
    } else {
        reject_flag(opt.r.has_value(), traits.name, "--r");
    }
    if (traits.needs_p) {
        require_flag(opt.p.has_value(), traits.name, "--p");
    } else {
        reject_flag(opt.p.has_value(), traits.name, "--p");
    }
    if (opt.format != "json" && opt.format != "csv") {
        throw UsageError("--format must be json or csv");
    }

    const std::optional<Rational> lambda = parse_lambda_flag(opt.lambda);
    const std::vector<TableEntry> entries = build_table(traits, opt, lambda);

    if (opt.format == "csv") {
        std::cout << (traits.triangular ? "n,k,value\n" : "n,value\n");
        for (const auto& e : entries) {
            std::cout << e.n;
            if (traits.triangular) std::cout << "," << e.k;
            std::cout << "," << entry_value_text(traits, lambda.has_value(), e.value) << "\n";
        }
        return 0;
    }

    nlohmann::ordered_json table;
    table["family"] = opt.family;
    table["n_max"] = opt.n_max;
    if (traits.triangular) table["k_max"] = opt.k_max.value_or(opt.n_max);
    if (traits.needs_r) table["r"] = *opt.r;
    if (traits.needs_p) table["p"] = *opt.p;
    table["lambda"] = lambda ? degen::to_string(*lambda) : std::string("sym");
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json row;
        row["n"] = e.n;
        if (traits.triangular) row["k"] = e.k;
        row["value"] = entry_value_json(traits, lambda.has_value(), e.value);
        rows.push_back(std::move(row));
    }
    table["entries"] = std::move(rows);
    std::cout << table.dump() << "\n";
    return 0;
}

int run_check(const CheckOptions& opt) {
    degen::SweepOverrides overrides;
    overrides.n_max = opt.n_max;
    overrides.r_max = opt.r_max;
    if (opt.n_max && *opt.n_max < 0) throw UsageError("--n-max must be nonnegative");
    if (opt.r_max && *opt.r_max < 0) throw UsageError("--r-max must be nonnegative");

    const std::vector<degen::IdentityReport> reports =
        degen::run_suite(opt.filter, overrides, opt.corrupt);

    bool all_pass = true;
    long long total_points = 0;
    for (const auto& report : reports) {
        std::cout << degen::to_json(report).dump() << "\n";
        all_pass = all_pass && report.pass;
        total_points += report.points;
    }
    for (const auto& report : reports) {
        std::cerr << (report.pass ? "pass  " : "FAIL  ") << report.id << "  points="
                  << report.points << "  wall_ms=" << report.wall_ms << "\n";
    }
    std::cerr << (all_pass ? "all passed" : "FAILURES present") << " (" << reports.size()
              << " cases, " << total_points << " points)\n";
    return all_pass ? 0 : 1;
}

int run_eval(const EvalOptions& opt) {
    const FamilyTraits& traits = family_traits(opt.family);
    if (opt.n < 0) throw UsageError("--n must be nonnegative");
    if (traits.triangular) {
        require_flag(opt.k.has_value(), traits.name, "--k");
        if (*opt.k < 0) throw UsageError("--k must be nonnegative");
    } else {
        reject_flag(opt.k.has_value(), traits.name, "--k");
    }
    if (traits.needs_r) {
        require_flag(opt.r.has_value(), traits.name, "--r");
        if (*opt.r < 0) throw UsageError("--r must be nonnegative");
    } else {
        reject_flag(opt.r.has_value(), traits.name, "--r");
    }
    if (traits.needs_p) {
        require_flag(opt.p.has_value(), traits.name, "--p");
    } else {
        reject_flag(opt.p.has_value(), traits.name, "--p");
    }
    if (!traits.has_x) reject_flag(opt.x.has_value(), traits.name, "--x");
    if (!traits.has_y) reject_flag(opt.y.has_value(), traits.name, "--y");

    Assignment at;
    if (opt.lambda) at.lambda = parse_lambda_flag(*opt.lambda);
    if (opt.x) at.x = parse_point_flag("--x", *opt.x);
    if (opt.y) at.y = parse_point_flag("--y", *opt.y);

    const MultiPoly raw = family_value(traits, opt.n, opt.k.value_or(0), opt.r.value_or(0),
                                       opt.p.value_or(0));
    const MultiPoly value = degen::eval(raw, at);

    if (auto q = degen::as_rational_const(value)) {
        std::cout << degen::render_text(*q) << "\n";
    } else if (auto lp = degen::as_lambda_poly(value)) {
        std::cout << degen::render_text(*lp) << "\n";
    } else {
        std::cout << degen::render_text(value) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "degen: exact tables, point evaluation, and identity checking for degenerate "
        "special numbers and polynomials. The deformation parameter is spelled 'l' "
        "in flag values and rendered output."};
    app.require_subcommand(1);

    TableOptions table_opt;
    CLI::App* table_cmd = app.add_subcommand("table", "Emit a family table as JSON or CSV");
    table_cmd->add_option("--family", table_opt.family,
                          "stirling, rstirling, stirling_poly, beta_number, beta_poly, "
                          "carlitz, fubini, poly_bernoulli")
        ->required();
    table_cmd->add_option("--n-max", table_opt.n_max, "largest row index n")->required();
    table_cmd->add_option("--k-max", table_opt.k_max, "largest column index k (triangular families)");
    table_cmd->add_option("--r", table_opt.r, "shift parameter (rstirling)");
    table_cmd->add_option("--p", table_opt.p, "polylogarithm index (poly_bernoulli)");
    table_cmd->add_option("--lambda", table_opt.lambda,
                          "'sym' for symbolic output or an exact rational p/q");
    table_cmd->add_option("--format", table_opt.format, "json (default) or csv");

    CheckOptions check_opt;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Run the identity suite; JSON-line reports on stdout");
    check_cmd->add_option("--filter", check_opt.filter, "id prefix selecting a subset of cases");
    check_cmd->add_option("--n-max", check_opt.n_max, "lower the per-case sweep cap on n");
    check_cmd->add_option("--r-max", check_opt.r_max, "lower the per-case sweep cap on r");
    check_cmd->add_flag("--corrupt", check_opt.corrupt,
                        "include the deliberately corrupted negative-control cases");

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one family member at a point");
    eval_cmd->add_option("--family", eval_opt.family, "family name (see 'table --help')")
        ->required();
    eval_cmd->add_option("--n", eval_opt.n, "row index n")->required();
    eval_cmd->add_option("--k", eval_opt.k, "column index k (triangular families)");
    eval_cmd->add_option("--r", eval_opt.r, "shift parameter (rstirling)");
    eval_cmd->add_option("--p", eval_opt.p, "polylogarithm index (poly_bernoulli)");
    eval_cmd->add_option("--lambda", eval_opt.lambda, "rational value for l (omit to keep symbolic)");
    eval_cmd->add_option("--x", eval_opt.x, "rational value for x (omit to keep symbolic)");
    eval_cmd->add_option("--y", eval_opt.y, "rational value for y (omit to keep symbolic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (table_cmd->parsed()) return run_table(table_opt);
        if (check_cmd->parsed()) return run_check(check_opt);
        if (eval_cmd->parsed()) return run_eval(eval_opt);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const degen::UnknownIdentityError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
