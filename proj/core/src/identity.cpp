#include "degen/identity.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <memory>
#include <utility>

#include "degen/bernoulli.hpp"
#include "degen/errors.hpp"
#include "degen/poly_bernoulli.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"

namespace degen {

namespace {

MultiPoly ff_deg(const MultiPoly& a, int n) {
    return falling_factorial(FallingKind::degenerate, a, n);
}

MultiPoly ff_ord(const MultiPoly& a, int n) {
    return falling_factorial(FallingKind::ordinary, a, n);
}

// k-fold repeated first difference of j ↦ (j+r)_{n,λ} starting at j = 0.
// Deliberately iterative, as an independent route against the one-shot
// alternating binomial sum.
LambdaPoly iterated_delta(int n, int k, int r) {
    std::vector<LambdaPoly> v;
    v.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) v.push_back(falling_deg(Rational(r + j), n));
    for (int step = 0; step < k; ++step) {
        for (int i = 0; i + step < k; ++i) {
            v[static_cast<std::size_t>(i)] =
                v[static_cast<std::size_t>(i) + 1] - v[static_cast<std::size_t>(i)];
        }
    }
    return v[0];
}

TruncatedSeries<LambdaPoly> lambda_em1(int order) {
    auto e = exp_deg_series<LambdaPoly>(lp_const(1), order);
    e.set_coeff(0, e.coeff(0) - lp_const(1));
    return e;
}

// log(1 + x·(e_λ(t)-1)), assembled power-by-power in x so the composition
// stays in the scalar-coefficient ring as long as possible.
TruncatedSeries<MultiPoly> log1p_x_em1(int order) {
    auto em1 = lambda_em1(order);
    TruncatedSeries<MultiPoly> acc(order);
    acc.set_coeff(0, mp_const(0));
    auto spow = TruncatedSeries<LambdaPoly>::constant(Rational(1), order);
    MultiPoly xpow = mp_const(1);
    for (int i = 1; i <= order; ++i) {
        spow = series_mul(spow, em1);
        xpow = xpow * mp_x();
        const Rational w{(i % 2) ? 1 : -1, i};
        for (int m = i; m <= order; ++m) {
            if (spow.coeff(m).is_zero()) continue;
            acc.set_coeff(m,
                          acc.coeff(m) + (xpow * mp_of_lambda(spow.coeff(m))).scaled(w));
        }
    }
    return acc;
}

std::vector<LambdaPoly> rstirling_gf_list(int n_max, int k, int r) {
    auto gf = series_pow(lambda_em1(n_max), k)
                  .scaled(Rational(1) / Rational(factorial(k)));
    gf = series_mul(gf, exp_deg_series<LambdaPoly>(lp_const(r), n_max));
    return egf_coefficients(gf);
}

std::vector<MultiPoly> fubini_gf_list(int n_max) {
    auto em1 = lambda_em1(n_max);
    TruncatedSeries<MultiPoly> den(n_max);
    den.set_coeff(0, mp_const(1));
    for (int i = 1; i <= n_max; ++i) {
        den.set_coeff(i, mp_const(0) - mp_x() * mp_of_lambda(em1.coeff(i)));
    }
    auto num = exp_deg_series<MultiPoly>(mp_y(), n_max);
    return egf_coefficients(series_div(num, den));
}

std::vector<MultiPoly> fubini_integral_gf_list(int n_max, int r) {
    const int order = n_max + 1;
    auto num = series_mul(exp_deg_series<MultiPoly>(mp_const(r), order),
                          log1p_x_em1(order));
    auto coeffs = egf_coefficients(series_div(num, lift_series(lambda_em1(order))));
    coeffs.resize(static_cast<std::size_t>(n_max) + 1);
    return coeffs;
}

// t/(e_{-λ}(t)-1) · e_{-λ}^{x+1}(t): the classical-style kernel with λ
// reflected and the argument advanced by one.
std::vector<MultiPoly> carlitz_negated_shift_gf_list(int n_max) {
    const int order = n_max + 1;
    auto den = map_series(lambda_em1(order), [](const LambdaPoly& c) {
        return mp_of_lambda(negate_lambda(c));
    });
    TruncatedSeries<MultiPoly> num(order);
    num.set_coeff(1, mp_const(1));
    auto base = series_div(num, den);
    auto ex = map_series(
        exp_deg_series<MultiPoly>(mp_x() + mp_const(1), n_max),
        [](const MultiPoly& c) { return negate_lambda(c); });
    auto coeffs = egf_coefficients(series_mul(base, ex));
    coeffs.resize(static_cast<std::size_t>(n_max) + 1);
    return coeffs;
}

template <typename K, typename V>
using CachePtr = std::shared_ptr<std::map<K, V>>;

template <typename K, typename V, typename F>
const V& cached(const CachePtr<K, V>& cache, const K& key, F&& make) {
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, make()).first;
    return it->second;
}

}  // namespace

std::vector<IdentityCase> catalog(bool corrupted) {
    std::vector<IdentityCase> out;

    out.push_back({
        .id = "eq4",
        .description = "degenerate falling factorial of x expands over ordinary "
                       "falling factorials with second-kind coefficients",
        .lhs = [](const SweepPoint& pt) { return ff_deg(mp_x(), pt.n); },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int k = 0; k <= pt.n; ++k) {
                    acc = acc + mp_of_lambda(stirling2_deg(pt.n, k)) * ff_ord(mp_x(), k);
                }
                return acc;
            },
    });

    out.push_back({
        .id = "eq4r",
        .description = "r-shifted degenerate falling factorial expands over "
                       "ordinary falling factorials with r-shifted coefficients",
        .sweep_r = true,
        .lhs = [](const SweepPoint& pt) { return ff_deg(mp_x() + mp_const(pt.r), pt.n); },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int k = 0; k <= pt.n; ++k) {
                    acc = acc +
                          mp_of_lambda(rstirling2_deg(pt.n, k, pt.r)) * ff_ord(mp_x(), k);
                }
                return acc;
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<LambdaPoly>>>();
        out.push_back({
            .id = "eq6",
            .description = "alternating-sum Stirling numbers match coefficient "
                           "extraction from (e_l(t)-1)^k/k!",
            .sweep_k = true,
            .lhs = [](const SweepPoint& pt) { return mp_of_lambda(stirling2_deg(pt.n, pt.k)); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, pt.k, [&] {
                        return stirling2_deg_gf(SweepLimits{}.n_max, pt.k);
                    });
                    return mp_of_lambda(list[static_cast<std::size_t>(pt.n)]);
                },
        });
    }

    {
        auto cache =
            std::make_shared<std::map<std::pair<int, int>, std::vector<LambdaPoly>>>();
        out.push_back({
            .id = "eq7",
            .description = "r-shifted Stirling numbers match coefficient extraction "
                           "from e_l^r(t)(e_l(t)-1)^k/k!",
            .sweep_k = true,
            .sweep_r = true,
            .lhs =
                [](const SweepPoint& pt) {
                    return mp_of_lambda(rstirling2_deg(pt.n, pt.k, pt.r));
                },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, std::pair{pt.k, pt.r}, [&] {
                        return rstirling_gf_list(SweepLimits{}.n_max, pt.k, pt.r);
                    });
                    return mp_of_lambda(list[static_cast<std::size_t>(pt.n)]);
                },
        });
    }

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "eq10",
            .description = "closed double-sum Fubini polynomial matches extraction "
                           "from e_l^y(t)/(1-x(e_l(t)-1))",
            .n_cap = 8,
            .lhs = [](const SweepPoint& pt) { return fubini_deg(pt.n); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, 0, [] { return fubini_gf_list(8); });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "eq16",
        .description = "negated-argument Fubini alternating sum matches "
                       "substitution into the two-variable polynomial",
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) { return fubini_neg_arg(pt.n, FubiniShift::none); },
        .rhs =
            [](const SweepPoint& pt) {
                return substitute(fubini_deg(pt.n), mp_const(0) - mp_y(), mp_const(0));
            },
    });

    out.push_back({
        .id = "eq17",
        .description = "antiderivative of the negated-argument Fubini polynomial "
                       "matches its closed alternating sum",
        .lhs = [](const SweepPoint& pt) { return integrated_fubini(pt.n, FubiniShift::none); },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                MultiPoly xpow = mp_x();
                for (int k = 0; k <= pt.n; ++k) {
                    Rational w = Rational(factorial(k)) / Rational(k + 1);
                    if (k % 2) w = -w;
                    acc = acc + (mp_of_lambda(stirling2_deg(pt.n, k)) * xpow).scaled(w);
                    xpow = xpow * mp_x();
                }
                return acc;
            },
    });

    out.push_back({
        .id = "eq20",
        .description = "antiderivative route at upper limit 1 reproduces the "
                       "Bernoulli numbers",
        .lhs =
            [](const SweepPoint& pt) {
                Assignment at_one;
                at_one.x = Rational(1);
                return eval(integrated_fubini(pt.n, FubiniShift::none), at_one);
            },
        .rhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_number(pt.n)); },
    });

    out.push_back({
        .id = "eq23",
        .description = "iterated forward differences at 0 give k! times the "
                       "Stirling numbers",
        .sweep_k = true,
        .lhs = [](const SweepPoint& pt) { return mp_of_lambda(iterated_delta(pt.n, pt.k, 0)); },
        .rhs =
            [](const SweepPoint& pt) {
                return mp_of_lambda(
                    stirling2_deg(pt.n, pt.k).scaled(Rational(factorial(pt.k))));
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "eq24",
            .description = "r-shifted Fubini antiderivative matches extraction from "
                           "e_l^r(t)log(1+x(e_l(t)-1))/(e_l(t)-1)",
            .sweep_r = true,
            .lhs =
                [](const SweepPoint& pt) {
                    return integrated_fubini(pt.n, FubiniShift::at_r, pt.r);
                },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, pt.r, [&] {
                        return fubini_integral_gf_list(SweepLimits{}.n_max, pt.r);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "eq26",
        .description = "r-shifted negated-argument Fubini sum matches substitution "
                       "into the two-variable polynomial",
        .sweep_r = true,
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) { return fubini_neg_arg(pt.n, FubiniShift::at_r, pt.r); },
        .rhs =
            [](const SweepPoint& pt) {
                return substitute(fubini_deg(pt.n), mp_const(0) - mp_y(),
                                  mp_const(pt.r));
            },
    });

    out.push_back({
        .id = "eq27",
        .description = "r-shifted antiderivative route at upper limit 1 reproduces "
                       "the r-shifted Bernoulli numbers",
        .sweep_r = true,
        .lhs =
            [](const SweepPoint& pt) {
                Assignment at_one;
                at_one.x = Rational(1);
                return eval(integrated_fubini(pt.n, FubiniShift::at_r, pt.r), at_one);
            },
        .rhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_at_r(pt.n, pt.r)); },
    });

    out.push_back({
        .id = "eq30",
        .description = "iterated forward differences at r match the one-shot "
                       "alternating binomial sum",
        .sweep_k = true,
        .sweep_r = true,
        .lhs = [](const SweepPoint& pt) { return mp_of_lambda(iterated_delta(pt.n, pt.k, pt.r)); },
        .rhs =
            [](const SweepPoint& pt) {
                std::vector<LambdaPoly> values;
                values.reserve(static_cast<std::size_t>(pt.k) + 1);
                for (int j = 0; j <= pt.k; ++j) {
                    values.push_back(falling_deg(Rational(pt.r + j), pt.n));
                }
                return mp_of_lambda(forward_difference(values, pt.k));
            },
    });

    out.push_back({
        .id = "eq32",
        .description = "r-shifted Stirling numbers match the binomial convolution "
                       "of plain Stirling numbers with (r)_{m,l}",
        .sweep_k = true,
        .sweep_r = true,
        .lhs = [](const SweepPoint& pt) { return mp_of_lambda(rstirling2_deg(pt.n, pt.k, pt.r)); },
        .rhs =
            [](const SweepPoint& pt) {
                return mp_of_lambda(rstirling2_via_convolution(pt.n, pt.k, pt.r));
            },
    });

    out.push_back({
        .id = "eq33",
        .description = "degenerate falling factorial of x+y splits as a binomial "
                       "convolution over x and y",
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) { return ff_deg(mp_x() + mp_y(), pt.n); },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int l = 0; l <= pt.n; ++l) {
                    acc = acc + (ff_deg(mp_x(), l) * ff_deg(mp_y(), pt.n - l))
                                    .scaled(Rational(binomial(pt.n, l)));
                }
                return acc;
            },
    });

    out.push_back({
        .id = "eq34",
        .description = "alternating shifted-argument sum matches the signed "
                       "Stirling convolution with symbolic shift",
        .sweep_k = true,
        .lhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int j = 0; j <= pt.k; ++j) {
                    Rational w(binomial(pt.k, j));
                    if (j % 2) w = -w;
                    acc = acc + ff_deg(mp_x() + mp_const(j), pt.n).scaled(w);
                }
                return acc;
            },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int l = 0; l <= pt.n; ++l) {
                    MultiPoly term =
                        ff_deg(mp_x(), pt.n - l) * mp_of_lambda(stirling2_deg(l, pt.k));
                    acc = acc + term.scaled(Rational(binomial(pt.n, l)));
                }
                Rational sign{(pt.k % 2) ? -1 : 1};
                return acc.scaled(sign * Rational(factorial(pt.k)));
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "eq35",
            .description = "Stirling polynomials match coefficient extraction from "
                           "(e_l(t)-1)^k/k! e_l^x(t)",
            .sweep_k = true,
            .lhs = [](const SweepPoint& pt) { return stirling_poly(pt.n, pt.k); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, pt.k, [&] {
                        return stirling_poly_gf(SweepLimits{}.n_max, pt.k);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "eq36",
        .description = "symbolically shifted negated-argument Fubini sum matches "
                       "substitution into the two-variable polynomial",
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) { return fubini_neg_arg(pt.n, FubiniShift::symbolic_x); },
        .rhs =
            [](const SweepPoint& pt) {
                return substitute(fubini_deg(pt.n), mp_const(0) - mp_y(), mp_x());
            },
    });

    out.push_back({
        .id = "eq37",
        .description = "symbolic-shift antiderivative at upper limit 1 matches the "
                       "weighted Stirling-polynomial sum",
        .lhs = [](const SweepPoint& pt) { return integrated_fubini(pt.n, FubiniShift::symbolic_x); },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int k = 0; k <= pt.n; ++k) {
                    Rational w = Rational(factorial(k)) / Rational(k + 1);
                    if (k % 2) w = -w;
                    acc = acc + stirling_poly(pt.n, k).scaled(w);
                }
                return acc;
            },
    });

    out.push_back({
        .id = "eq38",
        .description = "symbolic-shift antiderivative at upper limit 1 reproduces "
                       "the Bernoulli polynomials",
        .lhs = [](const SweepPoint& pt) { return integrated_fubini(pt.n, FubiniShift::symbolic_x); },
        .rhs = [](const SweepPoint& pt) { return beta_deg_poly(pt.n); },
    });

    out.push_back({
        .id = "eq42",
        .description = "index-1 polylogarithm series equals the negated degenerate "
                       "logarithm at negated argument",
        .lhs =
            [](const SweepPoint& pt) {
                return mp_of_lambda(deg_polylog_series(1, pt.n).coeff(pt.n));
            },
        .rhs =
            [](const SweepPoint& pt) {
                LambdaPoly c = deg_log_series(pt.n).coeff(pt.n);
                return mp_of_lambda((pt.n % 2) ? c : -c);
            },
    });

    {
        auto lhs_cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        auto rhs_cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "eq44",
            .description = "index-1 poly-Bernoulli generating function matches the "
                           "sign-reflected classical-kernel series",
            .lhs =
                [lhs_cache](const SweepPoint& pt) {
                    const auto& list = cached(lhs_cache, 0, [] {
                        return poly_bernoulli_gf(1, SweepLimits{}.n_max);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
            .rhs =
                [rhs_cache](const SweepPoint& pt) {
                    const auto& list = cached(rhs_cache, 0, [] {
                        return carlitz_negated_shift_gf_list(SweepLimits{}.n_max);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "eq45",
        .description = "index-1 poly-Bernoulli polynomials equal the "
                       "lambda-reflected, unit-shifted Carlitz polynomials",
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) {
            return poly_bernoulli_closed(1, pt.n, PolyBernoulliForm::thm7);
        },
        .rhs =
            [](const SweepPoint& pt) {
                return shift_x(negate_lambda(carlitz_beta(pt.n)), Rational(1));
            },
    });

    out.push_back({
        .id = "eq47",
        .description = "lambda-reflected Stirling polynomial at shifted argument "
                       "matches its alternating closed sum",
        .sweep_k = true,
        .lhs =
            [](const SweepPoint& pt) {
                return shift_x(negate_lambda(stirling_poly(pt.n, pt.k)),
                               Rational(-pt.k));
            },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int l = 0; l <= pt.k; ++l) {
                    Rational w(binomial(pt.k, l));
                    if (l % 2) w = -w;
                    acc = acc +
                          negate_lambda(ff_deg(mp_x() - mp_const(l), pt.n)).scaled(w);
                }
                return acc.scaled(Rational(1) / Rational(factorial(pt.k)));
            },
    });

    out.push_back({
        .id = "eq48",
        .description = "shifted-argument alternating sum matches the signed "
                       "Stirling convolution at reflected lambda",
        .sweep_k = true,
        .lhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int l = 0; l <= pt.k; ++l) {
                    Rational w(binomial(pt.k, l));
                    if (l % 2) w = -w;
                    acc = acc +
                          negate_lambda(ff_deg(mp_x() - mp_const(l), pt.n)).scaled(w);
                }
                return acc;
            },
        .rhs =
            [](const SweepPoint& pt) {
                MultiPoly acc = mp_const(0);
                for (int j = 0; j <= pt.n; ++j) {
                    MultiPoly term = negate_lambda(ff_deg(mp_x(), pt.n - j)) *
                                     mp_of_lambda(stirling2_deg(j, pt.k));
                    Rational w(binomial(pt.n, j));
                    if (j % 2) w = -w;
                    acc = acc + term.scaled(w);
                }
                Rational sign{(pt.k % 2) ? -1 : 1};
                return acc.scaled(sign * Rational(factorial(pt.k)));
            },
    });

    out.push_back({
        .id = "eq50",
        .description = "negative-argument poly-Bernoulli values match substitution "
                       "into the convolution closed form",
        .sweep_r = true,
        .sweep_p = true,
        .n_cap = 6,
        .r_cap = 3,
        .lhs = [](const SweepPoint& pt) {
            return mp_of_lambda(poly_bernoulli_at_neg_r(pt.p, pt.n, pt.r));
        },
        .rhs =
            [](const SweepPoint& pt) {
                Assignment at;
                at.x = Rational(-pt.r);
                return eval(poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm9),
                            at);
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "thm1",
            .description = "Bernoulli numbers by weighted Stirling sums match "
                           "generating-function extraction",
            .lhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_number(pt.n)); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, 0, [] {
                        return beta_deg_gf(SweepLimits{}.n_max, BetaMode::number);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "cor2",
        .description = "Bernoulli numbers match the iterated-forward-difference "
                       "route",
        .lhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_number(pt.n)); },
        .rhs =
            [](const SweepPoint& pt) {
                LambdaPoly acc = lp_const(0);
                for (int k = 0; k <= pt.n; ++k) {
                    Rational w = Rational(1) / Rational(k + 1);
                    if (k % 2) w = -w;
                    acc = acc + iterated_delta(pt.n, k, 0).scaled(w);
                }
                return mp_of_lambda(acc);
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "thm3",
            .description = "r-shifted Bernoulli numbers match generating-function "
                           "extraction with exponential prefactor",
            .sweep_r = true,
            .lhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_at_r(pt.n, pt.r)); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, pt.r, [&] {
                        return beta_deg_gf(SweepLimits{}.n_max, BetaMode::at_r, pt.r);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "cor4",
        .description = "r-shifted Bernoulli numbers match the "
                       "iterated-forward-difference route",
        .sweep_r = true,
        .lhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_at_r(pt.n, pt.r)); },
        .rhs =
            [](const SweepPoint& pt) {
                LambdaPoly acc = lp_const(0);
                for (int k = 0; k <= pt.n; ++k) {
                    Rational w = Rational(1) / Rational(k + 1);
                    if (k % 2) w = -w;
                    acc = acc + iterated_delta(pt.n, k, pt.r).scaled(w);
                }
                return mp_of_lambda(acc);
            },
    });

    out.push_back({
        .id = "thm5",
        .description = "alternating shifted falling-factorial sum equals the "
                       "signed convolution with Stirling numbers",
        .sweep_k = true,
        .sweep_r = true,
        .lhs =
            [](const SweepPoint& pt) {
                LambdaPoly acc = lp_const(0);
                for (int j = 0; j <= pt.k; ++j) {
                    Rational w(binomial(pt.k, j));
                    if (j % 2) w = -w;
                    acc = acc + falling_deg(Rational(pt.r + j), pt.n).scaled(w);
                }
                return mp_of_lambda(acc);
            },
        .rhs =
            [](const SweepPoint& pt) {
                LambdaPoly acc = lp_const(0);
                for (int l = 0; l <= pt.n; ++l) {
                    LambdaPoly term =
                        stirling2_deg(l, pt.k) * falling_deg(Rational(pt.r), pt.n - l);
                    acc = acc + term.scaled(Rational(binomial(pt.n, l)));
                }
                Rational sign{(pt.k % 2) ? -1 : 1};
                return mp_of_lambda(acc.scaled(sign * Rational(factorial(pt.k))));
            },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "thm6",
            .description = "Bernoulli polynomials by weighted Stirling-polynomial "
                           "sums match generating-function extraction",
            .lhs = [](const SweepPoint& pt) { return beta_deg_poly(pt.n); },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, 0, [] {
                        return beta_deg_gf(SweepLimits{}.n_max, BetaMode::symbolic_x);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "thm7",
            .description = "shifted Stirling-polynomial closed form matches the "
                           "polylogarithm generating function",
            .sweep_p = true,
            .n_cap = 8,
            .lhs = [](const SweepPoint& pt) {
                return poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm7);
            },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list = cached(cache, pt.p, [&] {
                        return poly_bernoulli_gf(pt.p, 8);
                    });
                    return list[static_cast<std::size_t>(pt.n)];
                },
        });
    }

    out.push_back({
        .id = "thm8",
        .description = "double alternating-sum closed form matches the shifted "
                       "Stirling-polynomial form",
        .sweep_p = true,
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) {
            return poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm8);
        },
        .rhs = [](const SweepPoint& pt) {
            return poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm7);
        },
    });

    out.push_back({
        .id = "thm9",
        .description = "Stirling-convolution closed form matches the shifted "
                       "Stirling-polynomial form",
        .sweep_p = true,
        .n_cap = 8,
        .lhs = [](const SweepPoint& pt) {
            return poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm9);
        },
        .rhs = [](const SweepPoint& pt) {
            return poly_bernoulli_closed(pt.p, pt.n, PolyBernoulliForm::thm7);
        },
    });

    {
        auto cache = std::make_shared<std::map<int, std::vector<MultiPoly>>>();
        out.push_back({
            .id = "thm10",
            .description = "negative-argument values match substitution into the "
                           "generating-function route",
            .sweep_r = true,
            .sweep_p = true,
            .n_cap = 6,
            .r_cap = 3,
            .lhs = [](const SweepPoint& pt) {
                return mp_of_lambda(poly_bernoulli_at_neg_r(pt.p, pt.n, pt.r));
            },
            .rhs =
                [cache](const SweepPoint& pt) {
                    const auto& list =
                        cached(cache, pt.p, [&] { return poly_bernoulli_gf(pt.p, 6); });
                    Assignment at;
                    at.x = Rational(-pt.r);
                    return eval(list[static_cast<std::size_t>(pt.n)], at);
                },
        });
    }

    if (corrupted) {
        out.push_back({
            .id = "neg_eq33",
            .description = "deliberately sign-flipped binomial convolution "
                           "(negative control; must fail)",
            .n_cap = 8,
            .lhs = [](const SweepPoint& pt) { return ff_deg(mp_x() + mp_y(), pt.n); },
            .rhs =
                [](const SweepPoint& pt) {
                    MultiPoly acc = mp_const(0);
                    for (int l = 0; l <= pt.n; ++l) {
                        Rational w(binomial(pt.n, l));
                        if (l % 2) w = -w;
                        acc = acc +
                              (ff_deg(mp_x(), l) * ff_deg(mp_y(), pt.n - l)).scaled(w);
                    }
                    return acc;
                },
        });

        out.push_back({
            .id = "neg_thm1",
            .description = "deliberately mis-weighted Bernoulli sum "
                           "(negative control; must fail)",
            .lhs = [](const SweepPoint& pt) { return mp_of_lambda(beta_deg_number(pt.n)); },
            .rhs =
                [](const SweepPoint& pt) {
                    LambdaPoly acc = lp_const(0);
                    for (int k = 0; k <= pt.n; ++k) {
                        Rational w = Rational(factorial(k)) / Rational(k + 2);
                        if (k % 2) w = -w;
                        acc = acc + stirling2_deg(pt.n, k).scaled(w);
                    }
                    return mp_of_lambda(acc);
                },
        });
    }

    return out;
}

bool filter_matches(const std::string& filter, const std::string& id) {
    if (filter.empty()) return true;
    if (id.size() < filter.size() || id.compare(0, filter.size(), filter) != 0) {
        return false;
    }
    if (id.size() == filter.size()) return true;
    // A filter ending in a digit must not bleed into longer numbered ids;
    // a non-numeric prefix selects its whole group.
    if (!std::isdigit(static_cast<unsigned char>(filter.back()))) return true;
    return !std::isdigit(static_cast<unsigned char>(id[filter.size()]));
}

IdentityReport run_identity(const IdentityCase& c, const SweepOverrides& o) {
    const auto started = std::chrono::steady_clock::now();
    const SweepLimits defaults;
    const int n_max = std::min(o.n_max.value_or(defaults.n_max), c.n_cap);
    const int r_max = c.sweep_r ? std::min(o.r_max.value_or(defaults.r_max), c.r_cap) : 0;
    const int p_lo = c.sweep_p ? defaults.p_min : 0;
    const int p_hi = c.sweep_p ? defaults.p_max : 0;

    IdentityReport report;
    report.id = c.id;
    for (int n = 0; n <= n_max && report.pass; ++n) {
        const int k_hi = c.sweep_k ? n : 0;
        for (int k = 0; k <= k_hi && report.pass; ++k) {
            for (int r = 0; r <= r_max && report.pass; ++r) {
                for (int p = p_lo; p <= p_hi && report.pass; ++p) {
                    const SweepPoint pt{n, k, r, p};
                    ++report.points;
                    MultiPoly lhs = c.lhs(pt);
                    MultiPoly rhs = c.rhs(pt);
                    if (!(lhs == rhs)) {
                        report.pass = false;
                        report.counterexample =
                            Counterexample{pt, std::move(lhs), std::move(rhs)};
                    }
                }
            }
        }
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return report;
}

IdentityReport run_identity(const std::string& id, const SweepOverrides& o) {
    for (const auto& c : catalog(true)) {
        if (c.id == id) return run_identity(c, o);
    }
    throw UnknownIdentityError("unknown identity id: " + id);
}

std::vector<IdentityReport> run_suite(const std::optional<std::string>& filter,
                                      const SweepOverrides& o, bool corrupted) {
    auto cases = catalog(corrupted);
    std::vector<const IdentityCase*> selected;
    for (const auto& c : cases) {
        if (!filter || filter_matches(*filter, c.id)) selected.push_back(&c);
    }
    if (filter && selected.empty()) {
        throw UnknownIdentityError("no identity matches filter '" + *filter + "'");
    }
    std::sort(selected.begin(), selected.end(),
              [](const IdentityCase* a, const IdentityCase* b) { return a->id < b->id; });
    std::vector<IdentityReport> reports;
    reports.reserve(selected.size());
    for (const IdentityCase* c : selected) reports.push_back(run_identity(*c, o));
    return reports;
}

}  // namespace degen
