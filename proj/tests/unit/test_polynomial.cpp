#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "degen/polynomial.hpp"
#include "support/generators.hpp"

using namespace degen;

TEST_CASE("dense polynomial ring arithmetic") {
    using P = DensePoly<Rational>;
    P x = P::variable();
    P one = P::constant(Rational(1));
    CHECK((x - one) * (x + one) == x * x - one);
    CHECK((x + one) * (x + one) == x * x + x.scaled(Rational(2)) + one);
    CHECK(x - x == P());
    CHECK((x - x).degree() == -1);
    CHECK(x.degree() == 1);
    CHECK((x * x * x).degree() == 3);
}

TEST_CASE("zero handling and trimming") {
    using P = DensePoly<Rational>;
    P z = P(std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(z.is_zero());
    CHECK(z == P());
    P p = P(std::vector<Rational>{Rational(1), Rational(0)});
    CHECK(p.degree() == 0);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
    degen_test::Gen gen;
    for (int trial = 0; trial < 25; ++trial) {
        LambdaPoly a = gen.lambda_poly();
        LambdaPoly b = gen.lambda_poly();
        Rational v = gen.rational();
        CHECK((a + b).eval(v) == a.eval(v) + b.eval(v));
        CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
        CHECK((a - b).eval(v) == a.eval(v) - b.eval(v));
    }
}

TEST_CASE("tower builders and degrees") {
    MultiPoly p = mp_x() * mp_x() + mp_lambda() * mp_y() + mp_const(Rational(1, 2));
    CHECK(x_degree(p) == 2);
    CHECK(lambda_degree(p) == 1);
    CHECK(p.degree() == 1);  // degree in y
    CHECK(x_degree(mp_y()) == 0);
    CHECK(lambda_degree(mp_const(Rational(7))) == 0);
}

TEST_CASE("as_rational_const and as_lambda_poly classify constants") {
    CHECK(as_rational_const(mp_const(Rational(3, 4))) == Rational(3, 4));
    CHECK(as_rational_const(mp_x()) == std::nullopt);
    CHECK(as_rational_const(MultiPoly()) == Rational(0));

    std::optional<LambdaPoly> lp = as_lambda_poly(mp_lambda() + mp_const(Rational(2)));
    REQUIRE(lp.has_value());
    CHECK(*lp == lp_lambda() + lp_const(Rational(2)));
    CHECK(!as_lambda_poly(mp_x()).has_value());
    CHECK(!as_lambda_poly(mp_y() * mp_lambda()).has_value());
}

TEST_CASE("full assignment evaluates to a constant") {
    MultiPoly p = mp_x() * mp_y() + mp_lambda() * mp_x() + mp_const(Rational(1));
    Assignment at{.lambda = Rational(1, 2), .x = Rational(2), .y = Rational(-1)};
    CHECK(as_rational_const(eval(p, at)) == Rational(-2) + Rational(1) + Rational(1));
}

TEST_CASE("partial assignment leaves the other variables symbolic") {
    MultiPoly p = mp_x() * mp_y() + mp_lambda();
    MultiPoly at_y1 = eval(p, Assignment{.lambda = {}, .x = {}, .y = Rational(1)});
    CHECK(at_y1 == mp_x() + mp_lambda());
    MultiPoly at_l0 = eval(p, Assignment{.lambda = Rational(0), .x = {}, .y = {}});
    CHECK(at_l0 == mp_x() * mp_y());
}

TEST_CASE("substitute performs simultaneous replacement") {
    MultiPoly p = mp_x() * mp_x() + mp_y();
    // x -> y, y -> x simultaneously; nothing cascades.
    MultiPoly q = substitute(p, mp_y(), mp_x());
    CHECK(q == mp_y() * mp_y() + mp_x());
    MultiPoly swap_twice = substitute(q, mp_y(), mp_x());
    CHECK(swap_twice == p);
}

TEST_CASE("shift_x expands binomially") {
    MultiPoly sq = mp_x() * mp_x();
    CHECK(shift_x(sq, Rational(1)) ==
          mp_x() * mp_x() + mp_x().scaled(Rational(2)) + mp_const(Rational(1)));
    CHECK(shift_x(mp_y(), Rational(5)) == mp_y());

    degen_test::Gen gen;
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = gen.multi_poly();
        Rational c = gen.rational();
        CHECK(shift_x(shift_x(p, c), -c) == p);
    }
}

TEST_CASE("negate_lambda is an involution and commutes with shift_x") {
    degen_test::Gen gen(7u);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = gen.multi_poly();
        CHECK(negate_lambda(negate_lambda(p)) == p);
        Rational c = gen.rational();
        CHECK(negate_lambda(shift_x(p, c)) == shift_x(negate_lambda(p), c));
    }
    CHECK(negate_lambda(mp_lambda()) == MultiPoly() - mp_lambda());
}

TEST_CASE("negate_lambda matches evaluation at the negated point") {
    degen_test::Gen gen(11u);
    for (int trial = 0; trial < 10; ++trial) {
        LambdaPoly p = gen.lambda_poly();
        Rational v = gen.rational();
        CHECK(negate_lambda(p).eval(v) == p.eval(-v));
    }
}

TEST_CASE("antideriv_y integrates monomials with zero constant") {
    MultiPoly prim = antideriv_y(mp_y());
    CHECK(prim == (mp_y() * mp_y()).scaled(Rational(1, 2)));
    CHECK(as_rational_const(eval(prim, Assignment{.lambda = {}, .x = {}, .y = Rational(1)})) ==
          Rational(1, 2));
    CHECK(antideriv_y(mp_const(Rational(3))) == mp_y().scaled(Rational(3)));
    CHECK(antideriv_y(MultiPoly()).is_zero());
}

TEST_CASE("poly_arith dispatches the three operations") {
    MultiPoly a = mp_x() + mp_const(Rational(1));
    MultiPoly b = mp_y();
    CHECK(poly_arith(a, b, PolyBinaryOp::add) == a + b);
    CHECK(poly_arith(a, b, PolyBinaryOp::sub) == a - b);
    CHECK(poly_arith(a, b, PolyBinaryOp::mul) == a * b);
}

TEST_CASE("ring traits expose scalar embedding") {
    CHECK(RingTraits<MultiPoly>::from_rational(Rational(5)) == mp_const(Rational(5)));
    CHECK(RingTraits<MultiPoly>::is_zero(MultiPoly()));
    CHECK(RingTraits<LambdaPoly>::one() == lp_const(Rational(1)));
    CHECK(RingTraits<Rational>::as_rational(Rational(2, 3)) == Rational(2, 3));
}
