// Acceptance gate: one pass/fail line per criterion, exact equality
// throughout, wall-clock budgets enforced where stated. Exits nonzero when
// any criterion fails. argv[1] must point at the degen CLI binary; the
// determinism and exit-code criteria drive it as a subprocess.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "degen/bernoulli.hpp"
#include "degen/errors.hpp"
#include "degen/identity.hpp"
#include "degen/poly_bernoulli.hpp"
#include "degen/polynomial.hpp"
#include "degen/serialize.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"
#include "support/partition_oracle.hpp"

using namespace degen;

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult result;
    if (g_cli_path.empty()) {
        result.out = "cli path not provided";
        return result;
    }
    const std::string cmd = "\"" + g_cli_path + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
        result.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct Failure {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) throw Failure{detail};
}

void expect_case_passes(const std::string& id) {
    IdentityReport r = run_identity(id);
    expect(r.pass, "identity case " + id + " failed" +
                       (r.counterexample
                            ? " at n=" + std::to_string(r.counterexample->point.n) +
                                  " k=" + std::to_string(r.counterexample->point.k) +
                                  " r=" + std::to_string(r.counterexample->point.r) +
                                  " p=" + std::to_string(r.counterexample->point.p)
                            : ""));
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// ---- criterion bodies -----------------------------------------------------

void criterion1_defining_relations(std::string& note) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport plain = run_identity("eq4");
    IdentityReport shifted = run_identity("eq4r");
    expect(plain.pass && plain.points == 11, "plain defining relation incomplete");
    expect(shifted.pass && shifted.points == 55, "shifted defining relation incomplete");
    const double ms = ms_since(start);
    expect(ms < 5000.0, "budget exceeded: " + std::to_string(ms) + " ms");
    std::ostringstream os;
    os << plain.points + shifted.points << " points in " << ms << " ms";
    note = os.str();
}

void criterion2_bernoulli_routes(std::string& note) {
    for (const char* id : {"thm1", "cor2", "thm3", "cor4", "thm6"}) expect_case_passes(id);

    LambdaPoly l = lp_lambda();
    expect(beta_deg_number(0) == lp_const(Rational(1)), "value at 0 wrong");
    expect(beta_deg_number(1) == lp_const(Rational(-1, 2)), "value at 1 wrong");
    expect(beta_deg_number(2) == lp_const(Rational(1, 6)) + l.scaled(Rational(1, 2)),
           "value at 2 wrong");

    for (int n = 0; n <= 10; ++n) {
        MultiPoly poly = beta_deg_poly(n);
        for (int r = 0; r <= 4; ++r) {
            MultiPoly at_r = eval(poly, Assignment{.lambda = {}, .x = Rational(r), .y = {}});
            expect(at_r == mp_of_lambda(beta_deg_at_r(n, r)),
                   "poly eval vs shifted number mismatch at n=" + std::to_string(n) +
                       " r=" + std::to_string(r));
        }
    }
    note = "three routes, frozen leading values, poly/shift agreement n<=10 r<=4";
}

void criterion3_stirling_routes(std::string& note) {
    for (const char* id : {"eq6", "eq7", "eq32", "eq34", "eq35"}) expect_case_passes(id);

    long long checked = 0;
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rational classical = stirling2_deg(n, k).eval(Rational(0));
            expect(classical == Rational(degen_test::set_partition_count(n, k)),
                   "classical census mismatch at n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
            ++checked;
        }
    }
    for (int r = 0; r <= 4; ++r) {
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= n; ++k) {
                Rational shifted = rstirling2_deg(n, k, r).eval(Rational(0));
                expect(shifted == Rational(degen_test::r_partition_count(n, k, r)),
                       "shifted census mismatch at n=" + std::to_string(n) +
                           " k=" + std::to_string(k) + " r=" + std::to_string(r));
                ++checked;
            }
        }
    }
    std::ostringstream os;
    os << "route agreement plus " << checked << " brute-force census points";
    note = os.str();
}

void criterion4_fubini_chain(std::string& note) {
    for (const char* id : {"eq10", "eq16", "eq26", "eq36", "eq17", "eq20", "eq24", "eq27",
                           "eq37", "eq38"}) {
        expect_case_passes(id);
    }
    note = "trivariate gf, negated-argument sums, integration chains n<=10";
}

void criterion5_poly_bernoulli(std::string& note) {
    const auto start = std::chrono::steady_clock::now();
    for (const char* id : {"thm7", "thm8", "thm9", "thm10", "eq50", "eq45", "eq44"}) {
        expect_case_passes(id);
    }
    IdentityReport bridge = check_polylog_log_bridge(10);
    expect(bridge.pass, "series bridge failed");
    const double ms = ms_since(start);
    expect(ms < 30000.0, "budget exceeded: " + std::to_string(ms) + " ms");
    std::ostringstream os;
    os << "four routes, negative-argument forms, series bridge in " << ms << " ms";
    note = os.str();
}

void criterion6_lambda_zero_regression(std::string& note) {
    const int N = 10;
    const int order = N + 1;

    // Classical Bernoulli polynomials from t/(e^t - 1) * e^{xt}, built with
    // plain factorial coefficients; the same division kernel, instantiated
    // independently of the deformed series code.
    TruncatedSeries<MultiPoly> den(order);
    for (int n = 1; n <= order; ++n) {
        den.set_coeff(n, mp_const(Rational(1) / Rational(factorial(n))));
    }
    TruncatedSeries<MultiPoly> base =
        series_div(TruncatedSeries<MultiPoly>::identity(order), den);
    TruncatedSeries<MultiPoly> ex(base.order());
    MultiPoly x_pow = mp_const(Rational(1));
    for (int n = 0; n <= base.order(); ++n) {
        ex.set_coeff(n, x_pow.scaled(Rational(1) / Rational(factorial(n))));
        x_pow = x_pow * mp_x();
    }
    std::vector<MultiPoly> classical = egf_coefficients(series_mul(base, ex));

    for (int n = 0; n <= N; ++n) {
        MultiPoly at0 = eval(beta_deg_poly(n), Assignment{.lambda = Rational(0), .x = {}, .y = {}});
        expect(at0 == classical[static_cast<std::size_t>(n)],
               "lambda-zero slice disagrees with classical polynomial at n=" + std::to_string(n));
    }

    MultiPoly b1 = classical[1];
    expect(eval(b1, Assignment{.lambda = {}, .x = Rational(0), .y = {}}) ==
               mp_const(Rational(-1, 2)),
           "first classical number wrong");
    expect(eval(classical[2], Assignment{.lambda = {}, .x = Rational(1, 2), .y = {}}) ==
               mp_const(Rational(-1, 12)),
           "midpoint value of the quadratic wrong");
    note = "classical limit matches an independently built kernel, n<=10, spot values exact";
}

void criterion7_negative_controls(std::string& note) {
    std::vector<IdentityReport> reports = run_suite({}, {}, true);
    int failures = 0;
    for (const auto& r : reports) {
        if (r.id.rfind("neg_", 0) == 0) {
            expect(!r.pass, "corrupted case unexpectedly passed: " + r.id);
            expect(r.counterexample.has_value(), "corrupted case lacks a counterexample");
            ++failures;
        } else {
            expect(r.pass, "genuine case failed: " + r.id);
        }
    }
    expect(failures >= 2, "need at least two corrupted cases");

    const auto& cases = catalog(true);
    for (const auto& c : cases) {
        if (c.id == "neg_eq33") {
            IdentityReport r = run_identity(c);
            expect(r.counterexample->point.n == 1 && r.counterexample->point.k == 0,
                   "counterexample not minimal for neg_eq33");
        }
        if (c.id == "neg_thm1") {
            IdentityReport r = run_identity(c);
            expect(r.counterexample->point.n == 0, "counterexample not minimal for neg_thm1");
        }
    }

    RunResult ok = run_cli("check --filter eq42");
    expect(ok.exit_code == 0, "clean run should exit 0, got " + std::to_string(ok.exit_code));
    RunResult bad = run_cli("check --corrupt --filter neg --n-max 3");
    expect(bad.exit_code == 1, "corrupted run should exit 1, got " + std::to_string(bad.exit_code));
    note = "two corrupted cases fail at minimal points; exit codes discriminate";
}

std::string strip_wall_times(const std::string& json_lines) {
    std::string out;
    std::size_t start = 0;
    while (start < json_lines.size()) {
        std::size_t end = json_lines.find('\n', start);
        if (end == std::string::npos) end = json_lines.size();
        nlohmann::ordered_json line =
            nlohmann::ordered_json::parse(json_lines.substr(start, end - start));
        line.erase("wall_time_ms");
        out += line.dump();
        out += '\n';
        start = end + 1;
    }
    return out;
}

void criterion8_determinism_roundtrip(std::string& note) {
    for (const std::string cmd :
         {std::string("table --family beta_poly --n-max 6"),
          std::string("table --family rstirling --n-max 6 --r 2 --format csv"),
          std::string("eval --family poly_bernoulli --n 4 --p -2 --x 1/3"),
          std::string("table --family fubini --n-max 5")}) {
        RunResult a = run_cli(cmd);
        RunResult b = run_cli(cmd);
        expect(a.exit_code == 0, "command failed: " + cmd);
        expect(!a.out.empty() && a.out == b.out, "output not byte-identical: " + cmd);
    }

    RunResult c1 = run_cli("check --filter eq4");
    RunResult c2 = run_cli("check --filter eq4");
    expect(c1.exit_code == 0 && c2.exit_code == 0, "check run failed");
    expect(strip_wall_times(c1.out) == strip_wall_times(c2.out),
           "check reports differ beyond wall time");

    RunResult table = run_cli("table --family fubini --n-max 5");
    nlohmann::json doc = nlohmann::json::parse(table.out);
    for (int n = 0; n <= 5; ++n) {
        MultiPoly parsed =
            multi_poly_from_json(doc["entries"][static_cast<std::size_t>(n)]["value"]);
        expect(parsed == fubini_deg(n), "fubini entry does not round trip at n=" + std::to_string(n));
    }
    RunResult stbl = run_cli("table --family stirling --n-max 6");
    nlohmann::json sdoc = nlohmann::json::parse(stbl.out);
    for (const auto& entry : sdoc["entries"]) {
        LambdaPoly parsed = lambda_poly_from_json(entry["value"]);
        expect(parsed == stirling2_deg(entry["n"].get<int>(), entry["k"].get<int>()),
               "stirling entry does not round trip");
    }
    RunResult etbl = run_cli("table --family stirling --n-max 6 --lambda 2/7");
    nlohmann::json edoc = nlohmann::json::parse(etbl.out);
    for (const auto& entry : edoc["entries"]) {
        Rational parsed = parse_rational(entry["value"].get<std::string>());
        expect(parsed == stirling2_deg(entry["n"].get<int>(), entry["k"].get<int>())
                             .eval(Rational(2, 7)),
               "evaluated stirling entry does not round trip");
    }
    note = "byte-identical reruns; json tables re-parse to structurally equal values";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    struct Criterion {
        int index;
        const char* title;
        std::function<void(std::string&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "defining-relation sweep", criterion1_defining_relations},
        {2, "Bernoulli route agreement", criterion2_bernoulli_routes},
        {3, "Stirling route agreement and census oracle", criterion3_stirling_routes},
        {4, "Fubini chain and integration identities", criterion4_fubini_chain},
        {5, "poly-Bernoulli four-route agreement", criterion5_poly_bernoulli},
        {6, "lambda-zero classical regression", criterion6_lambda_zero_regression},
        {7, "negative controls", criterion7_negative_controls},
        {8, "determinism and round-trip", criterion8_determinism_roundtrip},
    };

    const auto suite_start = std::chrono::steady_clock::now();
    bool all_pass = true;
    for (const auto& c : criteria) {
        std::string note;
        bool ok = true;
        std::string detail;
        try {
            c.body(note);
        } catch (const Failure& f) {
            ok = false;
            detail = f.detail;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        all_pass = all_pass && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.index << " (" << c.title
                  << ")";
        if (ok && !note.empty()) std::cout << ": " << note;
        if (!ok) std::cout << ": " << detail;
        std::cout << "\n";
    }
    const double total_ms = ms_since(suite_start);
    std::cout << (all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (total "
              << total_ms << " ms)\n";
    return all_pass ? 0 : 1;
}
