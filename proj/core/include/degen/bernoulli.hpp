#pragma once

#include <vector>

#include "degen/polynomial.hpp"

namespace degen {

/// Argument mode for the generating-function route of the fully degenerate
/// Bernoulli family: plain numbers, symbolic x, or a fixed integer shift r.
enum class BetaMode { number, symbolic_x, at_r };

/// Second-argument mode for the negated-argument Fubini sums and their
/// y-antiderivatives: no shift, integer shift r, or symbolic shift x.
enum class FubiniShift { none, at_r, symbolic_x };

/// Fully degenerate Bernoulli number as a polynomial in λ. Evaluates the
/// Stirling-number sum, the double alternating sum, and the forward-difference
/// form; all three must agree.
LambdaPoly beta_deg_number(int n);

/// Fully degenerate Bernoulli polynomial in x and λ. Same triple-route
/// evaluation in the polynomial setting; the x = 0 slice must reproduce
/// beta_deg_number(n).
MultiPoly beta_deg_poly(int n);

/// Fully degenerate Bernoulli number shifted by a nonnegative integer r.
/// Evaluates the r-Stirling sum, the double sum, and the difference form,
/// and checks the result against beta_deg_poly(n) at x = r.
LambdaPoly beta_deg_at_r(int n, int r);

/// Generating-function route: log(1+λt)/(λ(e_λ(t)-1)) times e_λ^x(t) (or its
/// specialization), expanded far enough that every returned coefficient is
/// exact. Returns n!·[tⁿ] for n = 0..n_max. r is read only in at_r mode.
std::vector<MultiPoly> beta_deg_gf(int n_max, BetaMode mode, int r = 0);

/// Carlitz degenerate Bernoulli polynomial in x and λ, extracted from
/// t/(e_λ(t)-1) · e_λ^x(t).
MultiPoly carlitz_beta(int n);

/// Two-variable degenerate Fubini polynomial in x, y, λ by the closed double
/// sum over Stirling numbers and degenerate falling factorials of y.
MultiPoly fubini_deg(int n);

/// Fubini polynomial at negated first argument −y, with the second argument
/// absent, a fixed integer r, or symbolic x. A pure alternating sum; the
/// cross-check against fubini_deg substitution lives in the identity catalog.
MultiPoly fubini_neg_arg(int n, FubiniShift shift, int r = 0);

/// Exact antiderivative in y of fubini_neg_arg, taken from 0 to an upper
/// limit. For shift none/at_r the upper limit stays symbolic and is returned
/// in the x slot. For symbolic_x the x slot is already occupied, so the upper
/// limit is fixed at 1 (the only value the downstream identities use).
MultiPoly integrated_fubini(int n, FubiniShift shift, int r = 0);

}  // namespace degen
