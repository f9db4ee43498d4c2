#pragma once

#include <span>
#include <vector>

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Selects the ordinary falling factorial (x)_n or its λ-deformation (x)_{n,λ}.
enum class FallingKind { ordinary, degenerate };

/// (arg)_n or (arg)_{n,λ} as an expanded tower polynomial. The argument may be
/// the symbol x, a shifted symbol, or a constant. n = 0 gives 1.
MultiPoly falling_factorial(FallingKind kind, const MultiPoly& argument, int n);

/// (q)_{n,λ} for a rational argument, as a polynomial in λ alone.
LambdaPoly falling_deg(const Rational& argument, int n);

/// k-th forward difference from the value list f(x), f(x+1), ..., f(x+k):
/// the alternating binomial sum over the list. Requires exactly k+1 values.
template <typename T>
T forward_difference(std::span<const T> values, int k) {
    if (k < 0) throw NegativeIndexError("forward_difference: negative order");
    if (static_cast<int>(values.size()) != k + 1) {
        throw ArityMismatchError("forward_difference: need exactly k+1 values");
    }
    T acc = RingTraits<T>::zero();
    for (int j = 0; j <= k; ++j) {
        Rational w(binomial(k, j));
        if ((k - j) % 2) w = -w;
        acc = acc + RingTraits<T>::scale(values[static_cast<std::size_t>(j)], w);
    }
    return acc;
}

template <typename T>
T forward_difference(const std::vector<T>& values, int k) {
    return forward_difference(std::span<const T>(values), k);
}

/// Degenerate Stirling number of the second kind S_{2,λ}(n,k) by the explicit
/// alternating sum over degenerate falling factorials of 0..k. Zero for k > n.
LambdaPoly stirling2_deg(int n, int k);

/// S_{2,λ}(n,k) for n = 0..n_max by the generating-function route: coefficient
/// extraction from (e_λ(t)-1)^k / k!. Independent of stirling2_deg.
std::vector<LambdaPoly> stirling2_deg_gf(int n_max, int k);

/// Degenerate r-Stirling number S^(r)_{2,λ}(n+r, k+r) by the shifted
/// alternating sum. r must be a nonnegative integer.
LambdaPoly rstirling2_deg(int n, int k, int r);

/// The same r-Stirling number by binomial convolution of plain degenerate
/// Stirling numbers against (r)_{m,λ}. Independent route; must equal
/// rstirling2_deg.
LambdaPoly rstirling2_via_convolution(int n, int k, int r);

/// Degenerate Stirling polynomial S_{2,λ}(n,k|x). Evaluates both closed forms
/// (the convolution against (x)_{m,λ} and the shifted alternating sum) and
/// asserts they agree before returning; x = 0 reduces to S_{2,λ}(n,k).
MultiPoly stirling_poly(int n, int k);

/// S_{2,λ}(n,k|x) for n = 0..n_max by coefficient extraction from
/// (e_λ(t)-1)^k / k! * e_λ^x(t).
std::vector<MultiPoly> stirling_poly_gf(int n_max, int k);

}  // namespace degen
