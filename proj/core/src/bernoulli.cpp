#include "degen/bernoulli.hpp"

#include <string>

#include "degen/errors.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"

namespace degen {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw NegativeIndexError(std::string(what) + ": negative index");
}

[[noreturn]] void routes_disagree(const char* what, int n) {
    throw InternalIdentityError(std::string(what) + ": routes disagree at n=" +
                                std::to_string(n));
}

// e_lambda(t) - 1 over the full tower, to the given order.
TruncatedSeries<MultiPoly> exp_minus_one(int order) {
    auto e = exp_deg_series<MultiPoly>(mp_const(1), order);
    e.set_coeff(0, e.coeff(0) - mp_const(1));
    return e;
}

}  // namespace

LambdaPoly beta_deg_number(int n) {
    require_nonnegative(n, "beta_deg_number");

    LambdaPoly stirling_route = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        Rational w = Rational(factorial(k)) / Rational(k + 1);
        if (k % 2) w = -w;
        stirling_route = stirling_route + stirling2_deg(n, k).scaled(w);
    }

    LambdaPoly double_sum = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        LambdaPoly inner = lp_const(0);
        for (int j = 0; j <= k; ++j) {
            Rational w(binomial(k, j));
            if (j % 2) w = -w;
            inner = inner + falling_deg(Rational(j), n).scaled(w);
        }
        double_sum = double_sum + inner.scaled(Rational(1) / Rational(k + 1));
    }

    LambdaPoly diff_route = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        std::vector<LambdaPoly> values;
        values.reserve(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) values.push_back(falling_deg(Rational(j), n));
        Rational w = Rational(1) / Rational(k + 1);
        if (k % 2) w = -w;
        diff_route = diff_route + forward_difference(values, k).scaled(w);
    }

    if (!(stirling_route == double_sum) || !(stirling_route == diff_route)) {
        routes_disagree("beta_deg_number", n);
    }
    return stirling_route;
}

MultiPoly beta_deg_poly(int n) {
    require_nonnegative(n, "beta_deg_poly");

    MultiPoly stirling_route = mp_const(0);
    for (int k = 0; k <= n; ++k) {
        Rational w = Rational(factorial(k)) / Rational(k + 1);
        if (k % 2) w = -w;
        stirling_route = stirling_route + stirling_poly(n, k).scaled(w);
    }

    MultiPoly double_sum = mp_const(0);
    for (int k = 0; k <= n; ++k) {
        MultiPoly inner = mp_const(0);
        for (int l = 0; l <= k; ++l) {
            Rational w(binomial(k, l));
            if (l % 2) w = -w;
            inner = inner +
                    falling_factorial(FallingKind::degenerate, mp_x() + mp_const(l), n)
                        .scaled(w);
        }
        double_sum = double_sum + inner.scaled(Rational(1) / Rational(k + 1));
    }

    MultiPoly diff_route = mp_const(0);
    for (int k = 0; k <= n; ++k) {
        std::vector<MultiPoly> values;
        values.reserve(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            values.push_back(
                falling_factorial(FallingKind::degenerate, mp_x() + mp_const(j), n));
        }
        Rational w = Rational(1) / Rational(k + 1);
        if (k % 2) w = -w;
        diff_route = diff_route + forward_difference(values, k).scaled(w);
    }

    if (!(stirling_route == double_sum) || !(stirling_route == diff_route)) {
        routes_disagree("beta_deg_poly", n);
    }

    Assignment at_zero;
    at_zero.x = Rational(0);
    if (!(eval(stirling_route, at_zero) == mp_of_lambda(beta_deg_number(n)))) {
        throw InternalIdentityError("beta_deg_poly: x=0 slice mismatch at n=" +
                                    std::to_string(n));
    }
    return stirling_route;
}

LambdaPoly beta_deg_at_r(int n, int r) {
    require_nonnegative(n, "beta_deg_at_r");
    require_nonnegative(r, "beta_deg_at_r");

    LambdaPoly rstirling_route = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        Rational w = Rational(factorial(k)) / Rational(k + 1);
        if (k % 2) w = -w;
        rstirling_route = rstirling_route + rstirling2_deg(n, k, r).scaled(w);
    }

    LambdaPoly double_sum = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        LambdaPoly inner = lp_const(0);
        for (int j = 0; j <= k; ++j) {
            Rational w(binomial(k, j));
            if (j % 2) w = -w;
            inner = inner + falling_deg(Rational(r + j), n).scaled(w);
        }
        double_sum = double_sum + inner.scaled(Rational(1) / Rational(k + 1));
    }

    LambdaPoly diff_route = lp_const(0);
    for (int k = 0; k <= n; ++k) {
        std::vector<LambdaPoly> values;
        values.reserve(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) {
            values.push_back(falling_deg(Rational(r + j), n));
        }
        Rational w = Rational(1) / Rational(k + 1);
        if (k % 2) w = -w;
        diff_route = diff_route + forward_difference(values, k).scaled(w);
    }

    if (!(rstirling_route == double_sum) || !(rstirling_route == diff_route)) {
        routes_disagree("beta_deg_at_r", n);
    }

    Assignment at_r;
    at_r.x = Rational(r);
    auto via_poly = as_lambda_poly(eval(beta_deg_poly(n), at_r));
    if (!via_poly || !(*via_poly == rstirling_route)) {
        throw InternalIdentityError("beta_deg_at_r: disagrees with x=" +
                                    std::to_string(r) + " substitution at n=" +
                                    std::to_string(n));
    }
    return rstirling_route;
}

std::vector<MultiPoly> beta_deg_gf(int n_max, BetaMode mode, int r) {
    require_nonnegative(n_max, "beta_deg_gf");
    const int order = n_max + 1;
    auto num = lift_series(log1p_scaled_series(order));
    auto base = series_div(num, exp_minus_one(order));
    TruncatedSeries<MultiPoly> gf = base;
    if (mode == BetaMode::symbolic_x) {
        gf = series_mul(base, exp_deg_series<MultiPoly>(mp_x(), n_max));
    } else if (mode == BetaMode::at_r) {
        gf = series_mul(base, exp_deg_series<MultiPoly>(mp_const(r), n_max));
    }
    auto coeffs = egf_coefficients(gf);
    coeffs.resize(static_cast<std::size_t>(n_max) + 1);
    return coeffs;
}

MultiPoly carlitz_beta(int n) {
    require_nonnegative(n, "carlitz_beta");
    const int order = n + 1;
    TruncatedSeries<MultiPoly> t_series(order);
    if (order >= 1) t_series.set_coeff(1, mp_const(1));
    auto base = series_div(t_series, exp_minus_one(order));
    auto gf = series_mul(base, exp_deg_series<MultiPoly>(mp_x(), n));
    return egf_coefficients(gf)[static_cast<std::size_t>(n)];
}

MultiPoly fubini_deg(int n) {
    require_nonnegative(n, "fubini_deg");
    MultiPoly acc = mp_const(0);
    MultiPoly x_pow = mp_const(1);
    std::vector<MultiPoly> x_powers;
    x_powers.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        x_powers.push_back(x_pow);
        x_pow = x_pow * mp_x();
    }
    for (int m = 0; m <= n; ++m) {
        MultiPoly inner = mp_const(0);
        for (int k = 0; k <= m; ++k) {
            inner = inner + (mp_of_lambda(stirling2_deg(m, k)) *
                             x_powers[static_cast<std::size_t>(k)])
                                .scaled(Rational(factorial(k)));
        }
        MultiPoly tail = falling_factorial(FallingKind::degenerate, mp_y(), n - m);
        acc = acc + (inner * tail).scaled(Rational(binomial(n, m)));
    }
    return acc;
}

MultiPoly fubini_neg_arg(int n, FubiniShift shift, int r) {
    require_nonnegative(n, "fubini_neg_arg");
    if (shift == FubiniShift::at_r) require_nonnegative(r, "fubini_neg_arg");
    MultiPoly acc = mp_const(0);
    MultiPoly y_pow = mp_const(1);
    for (int k = 0; k <= n; ++k) {
        MultiPoly stirling_part;
        switch (shift) {
            case FubiniShift::none:
                stirling_part = mp_of_lambda(stirling2_deg(n, k));
                break;
            case FubiniShift::at_r:
                stirling_part = mp_of_lambda(rstirling2_deg(n, k, r));
                break;
            case FubiniShift::symbolic_x:
                stirling_part = stirling_poly(n, k);
                break;
        }
        Rational w(factorial(k));
        if (k % 2) w = -w;
        acc = acc + (stirling_part * y_pow).scaled(w);
        y_pow = y_pow * mp_y();
    }
    return acc;
}

MultiPoly integrated_fubini(int n, FubiniShift shift, int r) {
    require_nonnegative(n, "integrated_fubini");
    MultiPoly primitive = antideriv_y(fubini_neg_arg(n, shift, r));
    if (shift == FubiniShift::symbolic_x) {
        Assignment upper_one;
        upper_one.y = Rational(1);
        return eval(primitive, upper_one);
    }
    return substitute(primitive, mp_x(), mp_x());
}

}  // namespace degen
