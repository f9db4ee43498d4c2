#include "degen/stirling.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "degen/series.hpp"

namespace degen {

namespace {

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw NegativeIndexError(std::string(what) + ": negative index");
}

// Thread-safe cache for the small, repeatedly requested tables. The value is
// computed outside the lock; a losing racer simply discards its copy.
template <typename K, typename V>
class MemoTable {
  public:
    template <typename F>
    V get(const K& key, F&& make) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end()) return it->second;
        }
        V fresh = make();
        std::lock_guard<std::mutex> lock(mutex_);
        return table_.emplace(key, std::move(fresh)).first->second;
    }

  private:
    std::mutex mutex_;
    std::map<K, V> table_;
};

LambdaPoly stirling2_deg_uncached(int n, int k) {
    std::vector<LambdaPoly> values;
    values.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        values.push_back(falling_deg(Rational(j), n));
    }
    LambdaPoly diff = forward_difference(values, k);
    return diff.scaled(Rational(1) / Rational(factorial(k)));
}

LambdaPoly rstirling2_deg_uncached(int n, int k, int r) {
    std::vector<LambdaPoly> values;
    values.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        values.push_back(falling_deg(Rational(j + r), n));
    }
    LambdaPoly diff = forward_difference(values, k);
    return diff.scaled(Rational(1) / Rational(factorial(k)));
}

MultiPoly stirling_poly_uncached(int n, int k) {
    MultiPoly conv = mp_const(0);
    for (int l = 0; l <= n; ++l) {
        MultiPoly term = mp_of_lambda(stirling2_deg(l, k)) *
                         falling_factorial(FallingKind::degenerate, mp_x(), n - l);
        conv = conv + term.scaled(Rational(binomial(n, l)));
    }

    std::vector<MultiPoly> values;
    values.reserve(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        values.push_back(
            falling_factorial(FallingKind::degenerate, mp_x() + mp_const(j), n));
    }
    MultiPoly shifted =
        forward_difference(values, k).scaled(Rational(1) / Rational(factorial(k)));

    if (!(conv == shifted)) {
        throw InternalIdentityError("stirling_poly: closed forms disagree at n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    }
    return conv;
}

}  // namespace

MultiPoly falling_factorial(FallingKind kind, const MultiPoly& argument, int n) {
    require_nonnegative(n, "falling_factorial");
    MultiPoly step = (kind == FallingKind::degenerate) ? mp_lambda() : mp_const(1);
    MultiPoly acc = mp_const(1);
    MultiPoly offset = mp_const(0);
    for (int i = 0; i < n; ++i) {
        acc = acc * (argument - offset);
        offset = offset + step;
    }
    return acc;
}

LambdaPoly falling_deg(const Rational& argument, int n) {
    require_nonnegative(n, "falling_deg");
    LambdaPoly acc = lp_const(1);
    for (int i = 0; i < n; ++i) {
        acc = acc * (lp_const(argument) - lp_lambda().scaled(Rational(i)));
    }
    return acc;
}

LambdaPoly stirling2_deg(int n, int k) {
    require_nonnegative(n, "stirling2_deg");
    require_nonnegative(k, "stirling2_deg");
    static MemoTable<std::pair<int, int>, LambdaPoly> memo;
    return memo.get({n, k}, [&] { return stirling2_deg_uncached(n, k); });
}

std::vector<LambdaPoly> stirling2_deg_gf(int n_max, int k) {
    require_nonnegative(n_max, "stirling2_deg_gf");
    require_nonnegative(k, "stirling2_deg_gf");
    auto e = exp_deg_series<LambdaPoly>(lp_const(1), n_max);
    e.set_coeff(0, e.coeff(0) - lp_const(1));
    auto powed = series_pow(e, k);
    auto gf = powed.scaled(Rational(1) / Rational(factorial(k)));
    return egf_coefficients(gf);
}

LambdaPoly rstirling2_deg(int n, int k, int r) {
    require_nonnegative(n, "rstirling2_deg");
    require_nonnegative(k, "rstirling2_deg");
    require_nonnegative(r, "rstirling2_deg");
    static MemoTable<std::tuple<int, int, int>, LambdaPoly> memo;
    return memo.get({n, k, r}, [&] { return rstirling2_deg_uncached(n, k, r); });
}

LambdaPoly rstirling2_via_convolution(int n, int k, int r) {
    require_nonnegative(n, "rstirling2_via_convolution");
    require_nonnegative(k, "rstirling2_via_convolution");
    require_nonnegative(r, "rstirling2_via_convolution");
    LambdaPoly acc = lp_const(0);
    for (int l = 0; l <= n; ++l) {
        LambdaPoly term = stirling2_deg(l, k) * falling_deg(Rational(r), n - l);
        acc = acc + term.scaled(Rational(binomial(n, l)));
    }
    return acc;
}

MultiPoly stirling_poly(int n, int k) {
    require_nonnegative(n, "stirling_poly");
    require_nonnegative(k, "stirling_poly");
    static MemoTable<std::pair<int, int>, MultiPoly> memo;
    return memo.get({n, k}, [&] { return stirling_poly_uncached(n, k); });
}

std::vector<MultiPoly> stirling_poly_gf(int n_max, int k) {
    require_nonnegative(n_max, "stirling_poly_gf");
    require_nonnegative(k, "stirling_poly_gf");
    auto e = exp_deg_series<MultiPoly>(mp_const(1), n_max);
    e.set_coeff(0, e.coeff(0) - mp_const(1));
    auto powed = series_pow(e, k).scaled(Rational(1) / Rational(factorial(k)));
    auto gf = series_mul(powed, exp_deg_series<MultiPoly>(mp_x(), n_max));
    return egf_coefficients(gf);
}

}  // namespace degen
