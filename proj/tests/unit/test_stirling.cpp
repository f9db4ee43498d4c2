#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "degen/errors.hpp"
#include "degen/stirling.hpp"
#include "support/partition_oracle.hpp"

using namespace degen;

namespace {

Rational at_lambda(const LambdaPoly& p, const Rational& v) { return p.eval(v); }

}  // namespace

TEST_CASE("falling factorials expand correctly") {
    MultiPoly x = mp_x();
    CHECK(falling_factorial(FallingKind::ordinary, x, 0) == mp_const(Rational(1)));
    CHECK(falling_factorial(FallingKind::ordinary, x, 2) == x * x - x);
    CHECK(falling_factorial(FallingKind::degenerate, x, 2) == x * (x - mp_lambda()));
    CHECK(falling_factorial(FallingKind::degenerate, x, 3) ==
          x * (x - mp_lambda()) * (x - mp_lambda().scaled(Rational(2))));
    CHECK_THROWS_AS(falling_factorial(FallingKind::ordinary, x, -1), NegativeIndexError);
}

TEST_CASE("scalar degenerate falling factorial agrees with the tower version") {
    for (int n = 0; n <= 6; ++n) {
        LambdaPoly direct = falling_deg(Rational(3, 2), n);
        MultiPoly towered =
            falling_factorial(FallingKind::degenerate, mp_const(Rational(3, 2)), n);
        CHECK(mp_of_lambda(direct) == towered);
    }
}

TEST_CASE("forward differences annihilate low-degree sequences") {
    std::vector<Rational> cubes;
    for (int j = 0; j <= 4; ++j) cubes.push_back(Rational(j * j * j));
    // 4th difference of a cubic sequence vanishes; 3rd equals 3! = 6.
    CHECK(forward_difference(cubes, 4) == Rational(0));
    std::vector<Rational> first4(cubes.begin(), cubes.begin() + 4);
    CHECK(forward_difference(first4, 3) == Rational(6));
    CHECK_THROWS_AS(forward_difference(first4, 2), ArityMismatchError);
    CHECK_THROWS_AS(forward_difference(first4, -1), NegativeIndexError);
}

TEST_CASE("frozen small degenerate Stirling values") {
    LambdaPoly l = lp_lambda();
    LambdaPoly one = lp_const(Rational(1));
    CHECK(stirling2_deg(0, 0) == one);
    CHECK(stirling2_deg(1, 1) == one);
    CHECK(stirling2_deg(2, 1) == one - l);
    CHECK(stirling2_deg(2, 2) == one);
    CHECK(stirling2_deg(3, 1) == (one - l) * (one - l.scaled(Rational(2))));
    CHECK(stirling2_deg(3, 2) == lp_const(Rational(3)) - l.scaled(Rational(3)));
    CHECK(stirling2_deg(3, 0) == LambdaPoly());
    CHECK(stirling2_deg(2, 3) == LambdaPoly());
    CHECK_THROWS_AS(stirling2_deg(-1, 0), NegativeIndexError);
}

TEST_CASE("stirling numbers satisfy the defining expansion") {
    // (x)_{n,l} = sum_k S(n,k) (x)_k as polynomials in x and l.
    for (int n = 0; n <= 7; ++n) {
        MultiPoly lhs = falling_factorial(FallingKind::degenerate, mp_x(), n);
        MultiPoly rhs;
        for (int k = 0; k <= n; ++k) {
            rhs = rhs + falling_factorial(FallingKind::ordinary, mp_x(), k) *
                            mp_of_lambda(stirling2_deg(n, k));
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("generating function route matches the sum route") {
    for (int k = 0; k <= 6; ++k) {
        std::vector<LambdaPoly> col = stirling2_deg_gf(8, k);
        REQUIRE(col.size() == 9);
        for (int n = 0; n <= 8; ++n) {
            CHECK(col[static_cast<std::size_t>(n)] == stirling2_deg(n, k));
        }
    }
}

TEST_CASE("lambda zero recovers classical set partition counts") {
    for (int n = 0; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            Rational classical = at_lambda(stirling2_deg(n, k), Rational(0));
            CHECK(classical == Rational(degen_test::set_partition_count(n, k)));
        }
    }
}

TEST_CASE("frozen r-shifted values") {
    LambdaPoly l = lp_lambda();
    CHECK(rstirling2_deg(2, 1, 1) == lp_const(Rational(3)) - l);
    CHECK(rstirling2_deg(1, 0, 2) == lp_const(Rational(2)));
    CHECK(rstirling2_deg(0, 0, 3) == lp_const(Rational(1)));
    CHECK(rstirling2_deg(2, 3, 1) == LambdaPoly());
    CHECK_THROWS_AS(rstirling2_deg(1, 1, -1), NegativeIndexError);
}

TEST_CASE("r equal zero degenerates to the plain numbers") {
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(rstirling2_deg(n, k, 0) == stirling2_deg(n, k));
        }
    }
}

TEST_CASE("shifted sum route equals the convolution route") {
    for (int r = 0; r <= 4; ++r) {
        for (int n = 0; n <= 7; ++n) {
            for (int k = 0; k <= n; ++k) {
                CHECK(rstirling2_deg(n, k, r) == rstirling2_via_convolution(n, k, r));
            }
        }
    }
}

TEST_CASE("lambda zero r-shifted counts match restricted partitions") {
    for (int r = 0; r <= 4; ++r) {
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= n; ++k) {
                Rational classical = at_lambda(rstirling2_deg(n, k, r), Rational(0));
                CHECK(classical == Rational(degen_test::r_partition_count(n, k, r)));
            }
        }
    }
}

TEST_CASE("stirling polynomials specialize at x equal zero") {
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= n; ++k) {
            MultiPoly at0 = eval(stirling_poly(n, k),
                                 Assignment{.lambda = {}, .x = Rational(0), .y = {}});
            CHECK(at0 == mp_of_lambda(stirling2_deg(n, k)));
        }
    }
}

TEST_CASE("stirling polynomials specialize at integer x to shifted numbers") {
    for (int r = 0; r <= 3; ++r) {
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= n; ++k) {
                MultiPoly at_r = eval(stirling_poly(n, k),
                                      Assignment{.lambda = {}, .x = Rational(r), .y = {}});
                CHECK(at_r == mp_of_lambda(rstirling2_deg(n, k, r)));
            }
        }
    }
}

TEST_CASE("frozen small stirling polynomial") {
    CHECK(stirling_poly(1, 0) == mp_x());
    CHECK(stirling_poly(1, 1) == mp_const(Rational(1)));
    CHECK(stirling_poly(2, 1) ==
          mp_of_lambda(lp_const(Rational(1)) - lp_lambda()) + mp_x().scaled(Rational(2)));
}

TEST_CASE("stirling polynomial generating function route agrees") {
    for (int k = 0; k <= 5; ++k) {
        std::vector<MultiPoly> col = stirling_poly_gf(7, k);
        REQUIRE(col.size() == 8);
        for (int n = 0; n <= 7; ++n) {
            CHECK(col[static_cast<std::size_t>(n)] == stirling_poly(n, k));
        }
    }
}
