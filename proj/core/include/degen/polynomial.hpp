#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen {

template <typename C>
class DensePoly;

/// Ring operations the polynomial and series templates need beyond the
/// arithmetic operators. Specialized for Rational and recursively for
/// DensePoly levels.
template <typename C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& v) { return v == 0; }
    static std::optional<Rational> as_rational(const Rational& v) { return v; }
    static Rational scale(const Rational& v, const Rational& q) { return v * q; }
};

/// Dense univariate polynomial over a coefficient ring C, ascending degree.
/// Canonical form: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient list. All operations return canonical results.
template <typename C>
class DensePoly {
public:
    DensePoly() = default;

    explicit DensePoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static DensePoly constant(C value) {
        DensePoly p;
        if (!RingTraits<C>::is_zero(value)) p.coeffs_.push_back(std::move(value));
        return p;
    }

    /// The generator of this level (coefficient 1 at degree 1).
    static DensePoly variable() {
        DensePoly p;
        p.coeffs_ = {RingTraits<C>::zero(), RingTraits<C>::one()};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<C>& coeffs() const { return coeffs_; }

    /// Coefficient of degree i; zero beyond the stored range.
    C coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : RingTraits<C>::zero();
    }

    bool operator==(const DensePoly&) const = default;

    DensePoly operator-() const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (const C& c : coeffs_) out.push_back(-c);
        return DensePoly(std::move(out));
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<C> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RingTraits<C>::zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return DensePoly(std::move(out));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        std::vector<C> out(std::max(a.coeffs_.size(), b.coeffs_.size()), RingTraits<C>::zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return DensePoly(std::move(out));
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<C>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return DensePoly(std::move(out));
    }

    DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
    DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    /// Horner evaluation at a coefficient-ring element.
    C eval(const C& at) const {
        C acc = RingTraits<C>::zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    /// Multiplies every coefficient by an exact rational.
    DensePoly scaled(const Rational& q) const {
        if (q == 0) return {};
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (const C& c : coeffs_) out.push_back(RingTraits<C>::scale(c, q));
        return DensePoly(std::move(out));
    }

    /// Applies f to every coefficient, re-trimming the result.
    template <typename F>
    auto map(F&& f) const -> DensePoly<decltype(f(std::declval<const C&>()))> {
        using C2 = decltype(f(std::declval<const C&>()));
        std::vector<C2> out;
        out.reserve(coeffs_.size());
        for (const C& c : coeffs_) out.push_back(f(c));
        return DensePoly<C2>(std::move(out));
    }

private:
    void trim() {
        while (!coeffs_.empty() && RingTraits<C>::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <typename C>
struct RingTraits<DensePoly<C>> {
    static DensePoly<C> zero() { return {}; }
    static DensePoly<C> one() { return DensePoly<C>::constant(RingTraits<C>::one()); }
    static DensePoly<C> from_rational(const Rational& q) {
        return DensePoly<C>::constant(RingTraits<C>::from_rational(q));
    }
    static bool is_zero(const DensePoly<C>& p) { return p.is_zero(); }
    static std::optional<Rational> as_rational(const DensePoly<C>& p) {
        if (p.is_zero()) return Rational(0);
        if (p.degree() > 0) return std::nullopt;
        return RingTraits<C>::as_rational(p.coeff(0));
    }
    static DensePoly<C> scale(const DensePoly<C>& p, const Rational& q) { return p.scaled(q); }
};

/// Univariate polynomial in the deformation parameter λ over Rational.
using LambdaPoly = DensePoly<Rational>;

/// Polynomial in x whose coefficients are LambdaPoly (internal tower level).
using XLPoly = DensePoly<LambdaPoly>;

/// Polynomial in the fixed variable tower (λ, x, y): a polynomial in y whose
/// coefficients are polynomials in x whose coefficients are LambdaPoly.
using MultiPoly = DensePoly<XLPoly>;

// Variable and constant builders.

inline LambdaPoly lp_const(const Rational& q) { return LambdaPoly::constant(q); }
inline LambdaPoly lp_lambda() { return LambdaPoly::variable(); }

inline MultiPoly mp_const(const Rational& q) { return RingTraits<MultiPoly>::from_rational(q); }
inline MultiPoly mp_of_lambda(const LambdaPoly& p) {
    return MultiPoly::constant(XLPoly::constant(p));
}
inline MultiPoly mp_lambda() { return mp_of_lambda(lp_lambda()); }
inline MultiPoly mp_x() { return MultiPoly::constant(XLPoly::variable()); }
inline MultiPoly mp_y() { return MultiPoly::variable(); }

/// λ of the ring, where defined. Used by the generic series builders.
template <typename C>
C ring_lambda();

template <>
inline LambdaPoly ring_lambda<LambdaPoly>() { return lp_lambda(); }
template <>
inline MultiPoly ring_lambda<MultiPoly>() { return mp_lambda(); }

// Conversions within the tower.

/// Lossless view of a MultiPoly that uses neither x nor y; nullopt otherwise.
inline std::optional<LambdaPoly> as_lambda_poly(const MultiPoly& p) {
    if (p.is_zero()) return LambdaPoly{};
    if (p.degree() > 0) return std::nullopt;  // uses y
    const XLPoly& xl = p.coeff(0);
    if (xl.degree() > 0) return std::nullopt;  // uses x
    return xl.coeff(0);
}

/// True when the polynomial is a constant rational (no λ, x, or y).
inline std::optional<Rational> as_rational_const(const MultiPoly& p) {
    return RingTraits<MultiPoly>::as_rational(p);
}

/// Partial assignment of the tower variables to exact rationals.
struct Assignment {
    std::optional<Rational> lambda;
    std::optional<Rational> x;
    std::optional<Rational> y;
};

inline LambdaPoly eval_lambda(const LambdaPoly& p, const Rational& v) {
    return lp_const(p.eval(v));
}

/// Substitutes the assigned variables and returns the reduced polynomial in
/// the remaining ones. A full assignment yields a constant.
inline MultiPoly eval(const MultiPoly& p, const Assignment& at) {
    MultiPoly r = p;
    if (at.y) {
        XLPoly folded = r.eval(XLPoly::constant(lp_const(*at.y)));
        r = MultiPoly::constant(folded);
    }
    if (at.x) {
        r = r.map([&](const XLPoly& xl) { return XLPoly::constant(xl.eval(lp_const(*at.x))); });
    }
    if (at.lambda) {
        r = r.map([&](const XLPoly& xl) {
            return xl.map([&](const LambdaPoly& lp) { return eval_lambda(lp, *at.lambda); });
        });
    }
    return r;
}

/// Substitutes λ -> -λ. Involution.
inline LambdaPoly negate_lambda(const LambdaPoly& p) {
    std::vector<Rational> out(p.coeffs());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return LambdaPoly(std::move(out));
}

inline MultiPoly negate_lambda(const MultiPoly& p) {
    return p.map([](const XLPoly& xl) {
        return xl.map([](const LambdaPoly& lp) { return negate_lambda(lp); });
    });
}

/// Simultaneous substitution of the x and y slots by arbitrary polynomials
/// (λ is never substituted here). Evaluates the nested Horner forms treating
/// the λ-level coefficients as constants.
inline MultiPoly substitute(const MultiPoly& p, const MultiPoly& x_repl, const MultiPoly& y_repl) {
    MultiPoly acc;
    for (int j = p.degree(); j >= 0; --j) {
        const XLPoly& xc = p.coeff(static_cast<std::size_t>(j));
        MultiPoly inner;
        for (int i = xc.degree(); i >= 0; --i) {
            inner = inner * x_repl + mp_of_lambda(xc.coeff(static_cast<std::size_t>(i)));
        }
        acc = acc * y_repl + inner;
    }
    return acc;
}

/// Substitutes x -> x + c, expanding to canonical form.
inline MultiPoly shift_x(const MultiPoly& p, const Rational& c) {
    return substitute(p, mp_x() + mp_const(c), mp_y());
}

/// Exact antiderivative with respect to y, vanishing at y = 0.
inline MultiPoly antideriv_y(const MultiPoly& p) {
    if (p.is_zero()) return {};
    std::vector<XLPoly> out(static_cast<std::size_t>(p.degree()) + 2, XLPoly{});
    for (int j = 0; j <= p.degree(); ++j) {
        out[static_cast<std::size_t>(j) + 1] =
            p.coeff(static_cast<std::size_t>(j)).scaled(Rational(1, j + 1));
    }
    return MultiPoly(std::move(out));
}

/// Degree in x (max over the y levels); -1 for the zero polynomial.
inline int x_degree(const MultiPoly& p) {
    int d = -1;
    for (const XLPoly& xl : p.coeffs()) d = std::max(d, xl.degree());
    return d;
}

/// Degree in λ (max over all monomials); -1 for the zero polynomial.
inline int lambda_degree(const MultiPoly& p) {
    int d = -1;
    for (const XLPoly& xl : p.coeffs())
        for (const LambdaPoly& lp : xl.coeffs()) d = std::max(d, lp.degree());
    return d;
}

enum class PolyBinaryOp { add, sub, mul };

/// Spec-surface entry point for ring arithmetic on tower polynomials.
inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyBinaryOp op) {
    switch (op) {
        case PolyBinaryOp::add: return a + b;
        case PolyBinaryOp::sub: return a - b;
        case PolyBinaryOp::mul: return a * b;
    }
    return {};
}

}  // namespace degen
