#include "degen/poly_bernoulli.hpp"

#include <chrono>
#include <string>

#include "degen/errors.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"

namespace degen {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw NegativeIndexError(std::string(what) + ": negative index");
}

// 1 - e_lambda(-t) to the given order; valuation 1 with unit leading term.
TruncatedSeries<LambdaPoly> one_minus_exp_neg(int order) {
    auto e = exp_deg_series<LambdaPoly>(lp_const(1), order, -1);
    TruncatedSeries<LambdaPoly> u(order);
    for (int i = 0; i <= order; ++i) u.set_coeff(i, -e.coeff(i));
    u.set_coeff(0, u.coeff(0) + lp_const(1));
    return u;
}

}  // namespace

LambdaPoly polylog_weight(int k) {
    require_nonnegative(k, "polylog_weight");
    LambdaPoly acc = lp_const(1);
    for (int j = 1; j <= k; ++j) acc = acc * (lp_const(j) - lp_lambda());
    return acc;
}

LambdaPoly polylog_weight_negated(int k) {
    require_nonnegative(k, "polylog_weight_negated");
    LambdaPoly acc = lp_const(1);
    for (int j = 1; j <= k; ++j) acc = acc * (lp_lambda() - lp_const(j));
    return acc;
}

std::vector<MultiPoly> poly_bernoulli_gf(int p, int n_max) {
    require_nonnegative(n_max, "poly_bernoulli_gf");
    const int order = n_max + 1;
    auto u = one_minus_exp_neg(order);
    auto composed = series_compose(deg_polylog_series(p, order), u);
    auto base = lift_series(series_div(composed, u));
    auto xpart = exp_deg_series<MultiPoly>(mp_const(0) - mp_x(), n_max, -1);
    auto coeffs = egf_coefficients(series_mul(base, xpart));
    coeffs.resize(static_cast<std::size_t>(n_max) + 1);
    return coeffs;
}

MultiPoly poly_bernoulli_closed(int p, int n, PolyBernoulliForm form) {
    require_nonnegative(n, "poly_bernoulli_closed");
    MultiPoly acc = mp_const(0);
    switch (form) {
        case PolyBernoulliForm::thm7:
            for (int k = 0; k <= n; ++k) {
                MultiPoly shifted = shift_x(negate_lambda(stirling_poly(n, k)),
                                            Rational(-k));
                MultiPoly term = mp_of_lambda(polylog_weight(k)) * shifted;
                acc = acc + term.scaled(pow_rational(Rational(k + 1), -p));
            }
            break;
        case PolyBernoulliForm::thm8:
            for (int k = 0; k <= n; ++k) {
                MultiPoly inner = mp_const(0);
                for (int l = 0; l <= k; ++l) {
                    MultiPoly ff = negate_lambda(falling_factorial(
                        FallingKind::degenerate, mp_x() - mp_const(l), n));
                    Rational w(binomial(k, l));
                    if (l % 2) w = -w;
                    inner = inner + ff.scaled(w);
                }
                Rational w = pow_rational(Rational(k + 1), -p) / Rational(factorial(k));
                acc = acc + (mp_of_lambda(polylog_weight(k)) * inner).scaled(w);
            }
            break;
        case PolyBernoulliForm::thm9:
            for (int k = 0; k <= n; ++k) {
                MultiPoly inner = mp_const(0);
                for (int j = 0; j <= n; ++j) {
                    MultiPoly ff = negate_lambda(
                        falling_factorial(FallingKind::degenerate, mp_x(), n - j));
                    MultiPoly term = mp_of_lambda(stirling2_deg(j, k)) * ff;
                    Rational w(binomial(n, j));
                    if (j % 2) w = -w;
                    inner = inner + term.scaled(w);
                }
                MultiPoly term = mp_of_lambda(polylog_weight_negated(k)) * inner;
                acc = acc + term.scaled(pow_rational(Rational(k + 1), -p));
            }
            break;
    }
    return acc;
}

LambdaPoly poly_bernoulli_at_neg_r(int p, int n, int r) {
    require_nonnegative(n, "poly_bernoulli_at_neg_r");
    require_nonnegative(r, "poly_bernoulli_at_neg_r");

    LambdaPoly convolution = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        LambdaPoly inner = lp_const(0);
        for (int j = 0; j <= n; ++j) {
            LambdaPoly term = stirling2_deg(j, k) * falling_deg(Rational(r), n - j);
            inner = inner + term.scaled(Rational(binomial(n, j)));
        }
        LambdaPoly term = polylog_weight_negated(k) * inner;
        convolution = convolution + term.scaled(pow_rational(Rational(k + 1), -p));
    }

    LambdaPoly rstirling_form = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        LambdaPoly term = polylog_weight_negated(k) * rstirling2_deg(n, k, r);
        rstirling_form = rstirling_form + term.scaled(pow_rational(Rational(k + 1), -p));
    }

    if (n % 2) {
        convolution = -convolution;
        rstirling_form = -rstirling_form;
    }

    if (!(convolution == rstirling_form)) {
        throw InternalIdentityError(
            "poly_bernoulli_at_neg_r: displayed forms disagree at n=" +
            std::to_string(n) + " r=" + std::to_string(r) + " p=" + std::to_string(p));
    }

    Assignment at_neg_r;
    at_neg_r.x = Rational(-r);
    auto direct = as_lambda_poly(
        eval(poly_bernoulli_closed(p, n, PolyBernoulliForm::thm7), at_neg_r));
    if (!direct || !(*direct == convolution)) {
        throw InternalIdentityError(
            "poly_bernoulli_at_neg_r: disagrees with x=-r substitution at n=" +
            std::to_string(n) + " r=" + std::to_string(r) + " p=" + std::to_string(p));
    }
    return convolution;
}

IdentityReport check_polylog_log_bridge(int N) {
    if (N < 1) throw NegativeIndexError("check_polylog_log_bridge: order below 1");
    auto started = std::chrono::steady_clock::now();

    auto li = deg_polylog_series(1, N);
    auto lg = deg_log_series(N);

    IdentityReport report;
    report.id = "eq42";
    for (int n = 0; n <= N; ++n) {
        ++report.points;
        LambdaPoly lhs = li.coeff(n);
        LambdaPoly flipped = (n % 2) ? lg.coeff(n) : -lg.coeff(n);
        if (!(lhs == flipped)) {
            report.pass = false;
            Counterexample ce;
            ce.point.n = n;
            ce.lhs = mp_of_lambda(lhs);
            ce.rhs = mp_of_lambda(flipped);
            report.counterexample = ce;
            break;
        }
    }

    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return report;
}

}  // namespace degen
