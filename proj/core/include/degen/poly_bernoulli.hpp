#pragma once

#include <vector>

#include "degen/identity.hpp"
#include "degen/polynomial.hpp"

namespace degen {

/// The three closed-form rearrangements of the degenerate poly-Bernoulli
/// polynomial: shifted Stirling-polynomial sum, double alternating sum, and
/// Stirling-number convolution. All must agree with each other and with the
/// generating-function route.
enum class PolyBernoulliForm { thm7, thm8, thm9 };

/// ∏_{j=1}^{k} (j - λ): the polylogarithm coefficient weight as a polynomial
/// in λ. Equals 1 for k = 0.
LambdaPoly polylog_weight(int k);

/// ∏_{j=1}^{k} (λ - j) = (-1)^k · polylog_weight(k).
LambdaPoly polylog_weight_negated(int k);

/// Degenerate poly-Bernoulli polynomials of integer index p for n = 0..n_max,
/// by composing the index-p polylogarithm series with 1 - e_λ(-t), dividing
/// by that same series, and multiplying by e_λ^{-x}(-t).
std::vector<MultiPoly> poly_bernoulli_gf(int p, int n_max);

/// One of the three closed forms. The index weight (k+1)^p is exact rational
/// for every integer p, so negative and zero indices are first-class.
MultiPoly poly_bernoulli_closed(int p, int n, PolyBernoulliForm form);

/// Value at a negated nonnegative integer argument, as a polynomial in λ.
/// Evaluates both the convolution form and the r-shifted Stirling form,
/// asserts they agree, and checks them against substitution into the closed
/// polynomial.
LambdaPoly poly_bernoulli_at_neg_r(int p, int n, int r);

/// Coefficientwise comparison of the index-1 polylogarithm series with the
/// negated degenerate logarithm at negated argument, up to order N ≥ 1.
IdentityReport check_polylog_log_bridge(int N);

}  // namespace degen
