#include "degen/series.hpp"

namespace degen {

TruncatedSeries<LambdaPoly> deg_log_series(int order) {
    TruncatedSeries<LambdaPoly> s(order);
    LambdaPoly prod = lp_const(1);  // prod_{j=1}^{n-1} (λ - j), empty for n = 1
    for (int n = 1; n <= order; ++n) {
        if (n > 1) prod = prod * (lp_lambda() - lp_const(n - 1));
        s.set_coeff(n, prod.scaled(Rational(1) / Rational(factorial(n))));
    }
    return s;
}

TruncatedSeries<LambdaPoly> deg_polylog_series(int index, int order) {
    TruncatedSeries<LambdaPoly> s(order);
    LambdaPoly prod = lp_const(1);  // prod_{j=1}^{n-1} (j - λ)
    for (int n = 1; n <= order; ++n) {
        if (n > 1) prod = prod * (lp_const(n - 1) - lp_lambda());
        Rational w = Rational(1) / Rational(factorial(n - 1));
        w *= pow_rational(Rational(n), -index);
        s.set_coeff(n, prod.scaled(w));
    }
    return s;
}

TruncatedSeries<LambdaPoly> log1p_scaled_series(int order) {
    TruncatedSeries<LambdaPoly> s(order);
    LambdaPoly pw = lp_const(1);  // (-λ)^(n-1)
    for (int n = 1; n <= order; ++n) {
        if (n > 1) pw = pw * (-lp_lambda());
        s.set_coeff(n, pw.scaled(Rational(1, n)));
    }
    return s;
}

}  // namespace degen
