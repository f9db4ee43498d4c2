#pragma once

#include <random>

#include "degen/polynomial.hpp"
#include "degen/rational.hpp"

namespace degen_test {

// Deterministic value generators for property tests. Fixed seeds keep every
// run byte-for-byte reproducible.
class Gen {
  public:
    explicit Gen(unsigned seed = 20240817u) : rng_(seed) {}

    degen::Rational rational(int num_bound = 12, int den_bound = 9) {
        std::uniform_int_distribution<int> num(-num_bound, num_bound);
        std::uniform_int_distribution<int> den(1, den_bound);
        return degen::Rational(num(rng_), den(rng_));
    }

    degen::LambdaPoly lambda_poly(int max_degree = 4) {
        std::uniform_int_distribution<int> deg(0, max_degree);
        const int d = deg(rng_);
        std::vector<degen::Rational> coeffs;
        coeffs.reserve(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) coeffs.push_back(rational());
        return degen::LambdaPoly(std::move(coeffs));
    }

    degen::MultiPoly multi_poly(int max_y = 2, int max_x = 3) {
        std::uniform_int_distribution<int> ydeg(0, max_y);
        std::uniform_int_distribution<int> xdeg(0, max_x);
        const int dy = ydeg(rng_);
        std::vector<degen::XLPoly> ycoeffs;
        for (int j = 0; j <= dy; ++j) {
            const int dx = xdeg(rng_);
            std::vector<degen::LambdaPoly> xcoeffs;
            for (int i = 0; i <= dx; ++i) xcoeffs.push_back(lambda_poly());
            ycoeffs.push_back(degen::XLPoly(std::move(xcoeffs)));
        }
        return degen::MultiPoly(std::move(ycoeffs));
    }

    std::mt19937& engine() { return rng_; }

  private:
    std::mt19937 rng_;
};

}  // namespace degen_test
