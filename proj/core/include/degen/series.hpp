#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"

namespace degen {

/// Formal power series in t truncated at an explicit order N: coefficients of
/// t^0 .. t^N are meaningful, nothing beyond them is tracked. Truncation order
/// is data; every operation documents the order of its result, and no
/// operation ever loses precision silently.
template <typename C>
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(int order)
        : order_(order), coeffs_(static_cast<std::size_t>(order) + 1, RingTraits<C>::zero()) {
        if (order < 0) throw NegativeIndexError("TruncatedSeries: negative order");
    }

    TruncatedSeries(int order, std::vector<C> coeffs) : TruncatedSeries(order) {
        if (coeffs.size() != coeffs_.size()) {
            throw ArityMismatchError("TruncatedSeries: coefficient count must be order + 1");
        }
        coeffs_ = std::move(coeffs);
    }

    static TruncatedSeries constant(const Rational& q, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = RingTraits<C>::from_rational(q);
        return s;
    }

    /// The series t (zero when order is 0).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order >= 1) s.coeffs_[1] = RingTraits<C>::one();
        return s;
    }

    int order() const { return order_; }
    const std::vector<C>& coeffs() const { return coeffs_; }
    const C& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, C v) { coeffs_[static_cast<std::size_t>(i)] = std::move(v); }

    /// Index of the first nonzero coefficient; nullopt when the series is zero
    /// up to its order.
    std::optional<int> valuation() const {
        for (int i = 0; i <= order_; ++i) {
            if (!RingTraits<C>::is_zero(coeffs_[static_cast<std::size_t>(i)])) return i;
        }
        return std::nullopt;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// Restriction to a lower (or equal) order.
    TruncatedSeries truncated(int order) const {
        TruncatedSeries s(order);
        for (int i = 0; i <= order; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeff(i);
        return s;
    }

    TruncatedSeries scaled(const Rational& q) const {
        TruncatedSeries s(order_);
        for (int i = 0; i <= order_; ++i) {
            s.coeffs_[static_cast<std::size_t>(i)] = RingTraits<C>::scale(coeff(i), q);
        }
        return s;
    }

    /// Sum and difference contract to the smaller operand order.
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) s.set_coeff(i, a.coeff(i) + b.coeff(i));
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (int i = 0; i <= s.order_; ++i) s.set_coeff(i, a.coeff(i) - b.coeff(i));
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s(order_);
        for (int i = 0; i <= order_; ++i) s.set_coeff(i, -coeff(i));
        return s;
    }

private:
    int order_;
    std::vector<C> coeffs_;
};

/// Cauchy product, truncated to min(order a, order b).
template <typename C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    TruncatedSeries<C> s(std::min(a.order(), b.order()));
    for (int n = 0; n <= s.order(); ++n) {
        C acc = RingTraits<C>::zero();
        for (int i = 0; i <= n; ++i) acc = acc + a.coeff(i) * b.coeff(n - i);
        s.set_coeff(n, std::move(acc));
    }
    return s;
}

template <typename C>
TruncatedSeries<C> operator*(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    return series_mul(a, b);
}

/// k-fold product; k = 0 gives the constant 1 at the base order.
template <typename C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& base, int k) {
    if (k < 0) throw NegativeIndexError("series_pow: negative exponent");
    TruncatedSeries<C> acc = TruncatedSeries<C>::constant(Rational(1), base.order());
    for (int i = 0; i < k; ++i) acc = series_mul(acc, base);
    return acc;
}

/// Valuation-aware quotient. Requires valuation(den) <= valuation(num) and a
/// denominator whose first nonzero coefficient is a nonzero rational constant
/// (a unit of the base field even when C is a polynomial ring). Both series
/// are shifted down by v = valuation(den); the result has order
/// min(order num, order den) - v and satisfies num = q * den to that order.
template <typename C>
TruncatedSeries<C> series_div(const TruncatedSeries<C>& num, const TruncatedSeries<C>& den) {
    std::optional<int> vden = den.valuation();
    if (!vden) {
        throw NonUnitLeadingCoefficientError("series_div: denominator is the zero series");
    }
    std::optional<Rational> unit = RingTraits<C>::as_rational(den.coeff(*vden));
    if (!unit || *unit == 0) {
        throw NonUnitLeadingCoefficientError(
            "series_div: denominator leading coefficient is not a nonzero rational constant");
    }
    std::optional<int> vnum = num.valuation();
    if (vnum && *vnum < *vden) {
        throw ValuationMismatchError("series_div: numerator valuation below denominator valuation");
    }

    const int v = *vden;
    const int out_order = std::min(num.order(), den.order()) - v;
    const Rational inv = Rational(1) / *unit;
    TruncatedSeries<C> q(out_order);
    for (int n = 0; n <= out_order; ++n) {
        C acc = num.coeff(n + v);
        for (int j = 1; j <= n; ++j) acc = acc - den.coeff(j + v) * q.coeff(n - j);
        q.set_coeff(n, RingTraits<C>::scale(acc, inv));
    }
    return q;
}

/// Composition outer(inner) for an inner series with zero constant term.
/// Horner evaluation of the outer coefficient list at the inner series. The
/// result order is min(order outer * valuation(inner), order inner); callers
/// wanting t^0..t^N build both operands at order N.
template <typename C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& outer, const TruncatedSeries<C>& inner) {
    if (!RingTraits<C>::is_zero(inner.coeff(0))) {
        throw NonNilpotentInnerError("series_compose: inner constant term must vanish");
    }
    std::optional<int> v = inner.valuation();
    int out_order = inner.order();
    if (v) out_order = std::min(out_order, outer.order() * *v);
    TruncatedSeries<C> inner_cut = inner.truncated(out_order);
    TruncatedSeries<C> acc(out_order);
    for (int i = outer.order(); i >= 0; --i) {
        acc = series_mul(acc, inner_cut);
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(i));
    }
    return acc;
}

/// Coefficients transformed by f; the order is preserved.
template <typename C, typename F>
auto map_series(const TruncatedSeries<C>& s, F&& f)
    -> TruncatedSeries<decltype(f(std::declval<const C&>()))> {
    using C2 = decltype(f(std::declval<const C&>()));
    TruncatedSeries<C2> out(s.order());
    for (int i = 0; i <= s.order(); ++i) out.set_coeff(i, f(s.coeff(i)));
    return out;
}

inline TruncatedSeries<MultiPoly> lift_series(const TruncatedSeries<LambdaPoly>& s) {
    return map_series(s, [](const LambdaPoly& c) { return mp_of_lambda(c); });
}

/// Exponential-generating-function coefficients: n! * (coefficient of t^n).
template <typename C>
std::vector<C> egf_coefficients(const TruncatedSeries<C>& s) {
    std::vector<C> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) {
        out.push_back(RingTraits<C>::scale(s.coeff(n), Rational(factorial(n))));
    }
    return out;
}

/// Degenerate exponential e_λ^a(sign * t): the coefficient of t^k is the
/// degenerate falling factorial (a)_{k,λ} over k!, times sign^k. The exponent
/// a may be any ring element (a rational, or the symbol x as a MultiPoly).
template <typename C>
TruncatedSeries<C> exp_deg_series(const C& exponent, int order, int sign = 1) {
    TruncatedSeries<C> s(order);
    const C lam = ring_lambda<C>();
    C falling = RingTraits<C>::one();
    s.set_coeff(0, falling);
    for (int k = 1; k <= order; ++k) {
        // (a)_{k,λ} = (a)_{k-1,λ} * (a - (k-1)λ)
        falling = falling * (exponent - RingTraits<C>::scale(lam, Rational(k - 1)));
        Rational w = Rational(1) / Rational(factorial(k));
        if (sign < 0 && (k % 2) == 1) w = -w;
        s.set_coeff(k, RingTraits<C>::scale(falling, w));
    }
    return s;
}

/// Degenerate logarithm log_λ(1+t), the compositional inverse of e_λ(t) - 1:
/// the coefficient of t^n (n >= 1) is prod_{j=1}^{n-1} (λ - j) / n!.
TruncatedSeries<LambdaPoly> deg_log_series(int order);

/// Degenerate polylogarithm of integer index k (any sign): the coefficient of
/// t^n (n >= 1) is prod_{j=1}^{n-1} (j - λ) / ((n-1)! n^k); zero constant term.
TruncatedSeries<LambdaPoly> deg_polylog_series(int index, int order);

/// log(1 + λt) / λ: the coefficient of t^n (n >= 1) is (-λ)^(n-1) / n. This is
/// the numerator kernel of the fully degenerate Bernoulli generating function.
TruncatedSeries<LambdaPoly> log1p_scaled_series(int order);

/// Classical Mercator series log(1+t) with rational coefficients lifted into C.
template <typename C>
TruncatedSeries<C> log1p_series(int order) {
    TruncatedSeries<C> s(order);
    for (int n = 1; n <= order; ++n) {
        Rational c = Rational((n % 2) ? 1 : -1, n);
        s.set_coeff(n, RingTraits<C>::from_rational(c));
    }
    return s;
}

}  // namespace degen
