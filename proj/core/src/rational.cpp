#include "degen/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "degen/errors.hpp"

namespace degen {

Integer factorial(int n) {
    if (n < 0) throw NegativeIndexError("factorial: negative argument");
    // Memo table; invisible to callers and guarded for concurrent use.
    static std::mutex mu;
    static std::vector<Integer> table{1};
    std::lock_guard lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<int>(table.size()));
    }
    return table[static_cast<std::size_t>(n)];
}

Integer binomial(int n, int k) {
    if (n < 0) throw NegativeIndexError("binomial: negative row");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Rational pow_rational(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: zero base, negative exponent");
    Rational acc(1);
    Rational b = base;
    int m = e < 0 ? -e : e;
    for (int i = 0; i < m; ++i) acc *= b;
    return e < 0 ? Rational(1) / acc : acc;
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den) || Integer(std::string(den)) == 0) {
            throw std::invalid_argument("parse_rational: denominator must be a positive integer: '" +
                                        std::string(text) + "'");
        }
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) {
        throw std::invalid_argument("parse_rational: malformed rational: '" + std::string(text) + "'");
    }
    Integer p{std::string(num)};
    Integer q = den.empty() ? Integer(1) : Integer(std::string(den));
    return Rational(p, q);
}

}  // namespace degen
