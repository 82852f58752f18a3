#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hermops/weyl.hpp"
#include "random_ops.hpp"

using namespace hermops;
using hermops::testing::Gen;

namespace {

WeylOp dh() { return hermite_operator(); }  // xD - D^2

}  // namespace

TEST_CASE("addition examples") {
    WeylOp xd = WeylOp::term(1, {1, 0, 1, 0});
    REQUIRE((xd + Scalar(-1) * xd).is_zero());

    WeylOp sum = xd + Scalar(-1) * WeylOp::term(1, {0, 0, 2, 0});
    REQUIRE(sum == dh());
    REQUIRE(sum.terms().size() == 2);
    REQUIRE(sum.terms().at({1, 0, 1, 0}) == Scalar(1));
    REQUIRE(sum.terms().at({0, 0, 2, 0}) == Scalar(-1));

    REQUIRE(op_d(1) + op_d(1) == Scalar(2) * op_d(1));
}

TEST_CASE("addition rejects variable-count mismatch") {
    REQUIRE_THROWS_AS(op_d(1) + op_d(2), std::invalid_argument);
    REQUIRE_THROWS_AS(wo_mul(op_d(1), op_d(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(apply(op_d(2), Poly::monomial(1, 1, 0)), std::invalid_argument);
}

TEST_CASE("composition examples") {
    // D o x = 1 + xD
    REQUIRE(wo_mul(op_d(1), op_x(1)) == WeylOp::identity(1) + WeylOp::term(1, {1, 0, 1, 0}));
    // x o D = xD, already normal ordered
    REQUIRE(wo_mul(op_x(1), op_d(1)) == WeylOp::term(1, {1, 0, 1, 0}));
}

TEST_CASE("(xD)(xD) via its action on monomials") {
    // The product must act on x^m as m + m(m-1) = m^2.
    WeylOp xd = WeylOp::term(1, {1, 0, 1, 0});
    WeylOp sq = wo_mul(xd, xd);
    REQUIRE(sq == xd + WeylOp::term(1, {2, 0, 2, 0}));
    for (int m = 0; m <= 5; ++m) {
        Poly xm = Poly::monomial(1, m, 0);
        REQUIRE(apply(sq, xm) == Scalar(m * m) * xm);
    }
}

TEST_CASE("commutator examples") {
    REQUIRE(commutator(op_d(1), op_x(1)) == WeylOp::identity(1));

    // [e, f] = 2h for the weight-3 generators written out directly.
    Scalar n(3);
    WeylOp e = op_d(1);
    WeylOp f = WeylOp::term(1, {2, 0, 1, 0}) - n * op_x(1);
    WeylOp two_h = Scalar(2) * WeylOp::term(1, {1, 0, 1, 0}) - WeylOp::constant(1, n);
    REQUIRE(commutator(e, f) == two_h);

    REQUIRE(commutator(dh(), op_d(1)) == Scalar(-1) * op_d(1));
}

TEST_CASE("apply examples") {
    REQUIRE(apply(op_d(1), Poly::monomial(1, 3, 0)) == Poly::monomial(1, 2, 0, Scalar(3)));

    Poly p = Poly::monomial(1, 2, 0) - Poly::constant(1, Scalar(1));  // x^2 - 1
    Poly expect = Poly::monomial(1, 2, 0, Scalar(2)) - Poly::constant(1, Scalar(2));
    REQUIRE(apply(dh(), p) == expect);  // eigenvalue 2

    REQUIRE(apply(WeylOp::term(2, {0, 0, 1, 1}), Poly::monomial(2, 1, 1)) ==
            Poly::constant(2, Scalar(1)));
}

TEST_CASE("scalar_multiple_of") {
    auto s = scalar_multiple_of(commutator(dh(), op_d(1)), op_d(1));
    REQUIRE(s);
    REQUIRE(*s == Scalar(-1));

    // [h, f] = f for any weight.
    Scalar n = Scalar::rational(7, 2);
    WeylOp h = WeylOp::term(1, {1, 0, 1, 0}) - WeylOp::constant(1, n / Scalar(2));
    WeylOp f = WeylOp::term(1, {2, 0, 1, 0}) - n * op_x(1);
    auto sf = scalar_multiple_of(commutator(h, f), f);
    REQUIRE(sf);
    REQUIRE(*sf == Scalar(1));

    REQUIRE_FALSE(scalar_multiple_of(op_x(1), op_d(1)));
    auto zero = scalar_multiple_of(WeylOp::zero(1), op_d(1));
    REQUIRE(zero);
    REQUIRE(zero->is_zero());
    REQUIRE_THROWS_AS(scalar_multiple_of(op_x(1), WeylOp::zero(1)), std::invalid_argument);
}

TEST_CASE("action is a homomorphism: 500 random cases") {
    Gen gen(20240801);
    for (int i = 0; i < 500; ++i) {
        int nvars = 1 + (i % 2);
        WeylOp a = gen.op(nvars, 4), b = gen.op(nvars, 4);
        Poly p = gen.poly(nvars, 8);
        REQUIRE(apply(wo_mul(a, b), p) == apply(a, apply(b, p)));
    }
}

TEST_CASE("commutator antisymmetry: 500 random cases") {
    Gen gen(7031);
    for (int i = 0; i < 500; ++i) {
        int nvars = 1 + (i % 2);
        WeylOp a = gen.op(nvars, 4), b = gen.op(nvars, 4);
        REQUIRE(commutator(a, b) == Scalar(-1) * commutator(b, a));
    }
}

TEST_CASE("jacobi identity: 500 random cases") {
    Gen gen(90125);
    for (int i = 0; i < 500; ++i) {
        int nvars = 1 + (i % 2);
        WeylOp a = gen.op(nvars, 3), b = gen.op(nvars, 3), c = gen.op(nvars, 3);
        WeylOp total = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                       commutator(c, commutator(a, b));
        REQUIRE(total.is_zero());
    }
}

TEST_CASE("products are canonical: no zero coefficients stored") {
    Gen gen(424242);
    for (int i = 0; i < 200; ++i) {
        WeylOp product = wo_mul(gen.op(2, 4), gen.op(2, 4));
        for (const auto& [k, c] : product.terms()) REQUIRE_FALSE(c.is_zero());
    }
    // A cancellation that must prune: Dx - xD - 1 = 0.
    WeylOp z = wo_mul(op_d(1), op_x(1)) - wo_mul(op_x(1), op_d(1)) - WeylOp::identity(1);
    REQUIRE(z.is_zero());
    REQUIRE(z.terms().empty());
}

TEST_CASE("single terms shift monomial degrees by (i-k, j-l) or kill them") {
    Gen gen(5150);
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<int> d(0, 3);
        WeylKey key{d(gen.rng), d(gen.rng), d(gen.rng), d(gen.rng)};
        WeylOp t = WeylOp::term(2, key);
        std::uniform_int_distribution<int> degd(0, 6);
        int p = degd(gen.rng), q = degd(gen.rng);
        Poly image = apply(t, Poly::monomial(2, p, q));
        if (key.dx > p || key.dy > q) {
            REQUIRE(image.is_zero());
        } else {
            REQUIRE(image.terms().size() == 1);
            auto [mk, mc] = *image.terms().begin();
            REQUIRE(mk.first == p - key.dx + key.xp);
            REQUIRE(mk.second == q - key.dy + key.yp);
        }
    }
}

TEST_CASE("zero operator annihilates") {
    Poly p = Poly::monomial(1, 3, 0, Scalar::rational(2, 3));
    REQUIRE(apply(WeylOp::zero(1), p).is_zero());
}
