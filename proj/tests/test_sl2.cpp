#include <catch2/catch_amalgamated.hpp>

#include "hermops/sl2.hpp"

using namespace hermops;

TEST_CASE("univariate generators satisfy the bracket table") {
    // n = 0: [e, f] = [D, x^2 D] = 2xD = 2h.
    auto g0 = univariate_generators(Scalar(0));
    REQUIRE(commutator(g0.e, g0.f) == Scalar(2) * g0.h);

    // n = 2: [h, e] = [xD - 1, D] = -D.
    auto g2 = univariate_generators(Scalar(2));
    REQUIRE(commutator(g2.h, g2.e) == Scalar(-1) * g2.e);

    for (const Scalar& n : {Scalar(0), Scalar(1), Scalar(5), Scalar::rational(5, 2)}) {
        auto g = univariate_generators(n);
        REQUIRE(commutator(g.h, g.f) == g.f);
        auto report = check_relations(g);
        REQUIRE(report.all_pass());
        REQUIRE(report.family == kFamilyUnivariate);
    }
}

TEST_CASE("conjugated univariate generators satisfy the bracket table") {
    for (const Scalar& n : {Scalar(0), Scalar(2), Scalar(5), Scalar::rational(7, 3)}) {
        auto g = hermite_conjugated_generators(n);
        REQUIRE(commutator(g.h, g.e) == Scalar(-1) * g.e);   // [X1, X2] = -X2
        REQUIRE(commutator(g.e, g.f) == Scalar(2) * g.h);    // [X2, X3] = 2 X1
        REQUIRE(commutator(g.h, g.f) == g.f);                // [X1, X3] = X3
        REQUIRE(check_relations(g).all_pass());
    }
}

TEST_CASE("conjugated raising generator matches the Gaussian conjugate in matrix form") {
    const Scalar n(10);
    const int N = 10;
    GradedSpace domain(1, N), codomain(1, N + 1);

    OpMatrix x3 = to_matrix(hermite_conjugated_generators(n).f, domain, codomain);
    OpMatrix f = to_matrix(univariate_generators(n).f, domain, codomain);
    OpMatrix t = exp_exact_nilpotent(neg_half_laplacian(1), codomain);
    OpMatrix t_inv = exp_exact_nilpotent(Scalar(-1) * neg_half_laplacian(1), domain);
    OpMatrix conj = omat_mul(omat_mul(t, f), t_inv);

    REQUIRE(max_abs_diff(x3, conj).is_zero());
}

TEST_CASE("literal bivariate family: only [h,e] = -e holds") {
    auto g = bivariate_generators_literal(Scalar(1));
    REQUIRE(g.e == WeylOp::term(2, {0, 0, 1, 1}));
    REQUIRE(commutator(g.h, g.e) == Scalar(-1) * g.e);

    auto report = check_relations(g);
    REQUIRE_FALSE(report.checks[0].exact_pass);  // [e,f] - 2h != 0
    REQUIRE(report.checks[1].exact_pass);        // [h,e] + e == 0
    REQUIRE_FALSE(report.checks[2].exact_pass);  // [h,f] - f != 0

    // The [e,f] residual is -h: the bracket gives h, not 2h.
    REQUIRE(*report.checks[0].residual_op == Scalar(-1) * g.h);

    REQUIRE_THROWS_AS(bivariate_generators_literal(Scalar(0)), std::invalid_argument);
}

TEST_CASE("eigen-relation of the literal h on the u polynomials") {
    LambdaForm lam(Scalar(1), Scalar::rational(1, 2), Scalar(1));
    auto g = bivariate_generators_literal(-lam.mixed());
    Poly u11 = u_poly(1, 1, lam);
    REQUIRE(apply(g.h, u11) == Scalar::rational(3, 2) * u11);

    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 4; ++m) {
            Poly u = u_poly(n, m, lam);
            REQUIRE(apply(g.h, u) == (Scalar(n + m + 1) / Scalar(2)) * u);
        }
}

TEST_CASE("repaired bivariate family passes all three relations") {
    for (const Scalar& alpha : {Scalar(1), Scalar::rational(-1, 2), Scalar(3)}) {
        auto lit = bivariate_generators_literal(alpha);
        auto rep = bivariate_generators_repaired(alpha);
        REQUIRE(rep.h == lit.h);
        REQUIRE(rep.e == lit.e);
        REQUIRE(rep.f != lit.f);
        REQUIRE(check_relations(rep).all_pass());
        // Independent confirmation of the brackets, not via check_relations.
        REQUIRE(commutator(rep.e, rep.f) == Scalar(2) * rep.h);
        REQUIRE(commutator(rep.h, rep.f) == rep.f);
    }
}

TEST_CASE("repaired h keeps its eigenvalue on the u polynomials") {
    LambdaForm lam(Scalar(2), Scalar(1), Scalar(3));
    auto rep = bivariate_generators_repaired(-lam.mixed());
    Poly u11 = u_poly(1, 1, lam);
    REQUIRE(apply(rep.h, u11) == Scalar::rational(3, 2) * u11);
}

TEST_CASE("conjugated bivariate family: lowering relation holds exactly") {
    LambdaForm lam(Scalar(1), Scalar::rational(1, 2), Scalar(1));
    auto g = conjugated_bivariate_generators(lam);

    // A- = e' = -(b/sqrt(ac)) dx dy
    REQUIRE(g.e == (-lam.mixed()) * WeylOp::term(2, {0, 0, 1, 1}));
    REQUIRE(commutator(g.h, g.e) == Scalar(-1) * g.e);

    auto report = check_relations(g);
    REQUIRE(report.checks[1].exact_pass);

    // h' eigen-relation carried to the bivariate Hermite polynomials.
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            Poly h = bivariate_hermite(n, m, lam);
            REQUIRE(apply(g.h, h) == (Scalar(n + m + 1) / Scalar(2)) * h);
        }

    REQUIRE_THROWS_AS(
        conjugated_bivariate_generators(LambdaForm(Scalar(1), Scalar(0), Scalar(1))),
        std::invalid_argument);
}

TEST_CASE("conjugated family is the matrix conjugate of the literal one") {
    LambdaForm lam(Scalar(2), Scalar(1), Scalar(3));
    auto lit = bivariate_generators_literal(-lam.mixed());
    auto conj = conjugated_bivariate_generators(lam);
    GradedSpace s(2, 6);
    OpMatrix t = exp_exact_nilpotent(neg_half_laplacian(2), s);
    OpMatrix t_inv = exp_exact_nilpotent(Scalar(-1) * neg_half_laplacian(2), s);
    REQUIRE(conjugate(to_matrix(lit.h, s), t, t_inv) == to_matrix(conj.h, s));
    REQUIRE(conjugate(to_matrix(lit.e, s), t, t_inv) == to_matrix(conj.e, s));
}

TEST_CASE("ladder matrices: frozen small case") {
    LadderRep rep(Scalar(2), 3);
    auto m = ladder_matrices(rep, /*restricted=*/true);

    // h = diag(-1, 0, 1)
    REQUIRE(m.h.at(0, 0) == Scalar(-1));
    REQUIRE(m.h.at(1, 1) == Scalar(0));
    REQUIRE(m.h.at(2, 2) == Scalar(1));

    // e applied to the index-2 basis vector gives 2 times the index-1 vector.
    REQUIRE(m.e.at(1, 2) == Scalar(2));
    REQUIRE(m.e.at(0, 1) == Scalar(1));

    // f raises with coefficient k - n.
    REQUIRE(m.f.at(1, 0) == Scalar(-2));
    REQUIRE(m.f.at(2, 1) == Scalar(-1));

    // Unrestricted build of the same weight-2, dim-3 ladder is the invariant
    // case: the top f action has coefficient zero, so no overflow.
    REQUIRE_NOTHROW(ladder_matrices(rep, false));
    // A non-matching weight overflows without restriction.
    REQUIRE_THROWS_AS(ladder_matrices(LadderRep(Scalar(5), 3), false), DegreeOverflow);
}

TEST_CASE("ladder relations hold exactly on the interior block") {
    for (long n : {0L, 1L, 2L, 5L})
        for (int dim : {2, 3, 8, 16}) {
            auto report = check_ladder_relations(LadderRep(Scalar(n), dim));
            REQUIRE(report.all_pass());
            REQUIRE(report.max_residual().is_zero());
        }
    // Rational weights work too.
    REQUIRE(check_ladder_relations(LadderRep(Scalar::rational(1, 2), 6)).all_pass());
}

TEST_CASE("conjugation preserves relations in matrix form") {
    // At integer weight n = N the whole triple acts inside the degree-N
    // space, so the matrix bracket table can be checked directly.
    const Scalar n(6);
    const GradedSpace s(1, 6);
    auto g = univariate_generators(n);
    OpMatrix t = exp_exact_nilpotent(neg_half_laplacian(1), s);
    OpMatrix t_inv = exp_exact_nilpotent(Scalar(-1) * neg_half_laplacian(1), s);

    auto comm = [](const OpMatrix& a, const OpMatrix& b) {
        return omat_add(omat_mul(a, b), omat_scal(Scalar(-1), omat_mul(b, a)));
    };

    SECTION("exact mode: residuals are identically zero") {
        OpMatrix h = conjugate(to_matrix(g.h, s), t, t_inv);
        OpMatrix e = conjugate(to_matrix(g.e, s), t, t_inv);
        OpMatrix f = conjugate(to_matrix(g.f, s), t, t_inv);
        REQUIRE(max_abs_diff(comm(e, f), omat_scal(Scalar(2), h)).is_zero());
        REQUIRE(max_abs_diff(comm(h, e), omat_scal(Scalar(-1), e)).is_zero());
        REQUIRE(max_abs_diff(comm(h, f), f).is_zero());
    }

    SECTION("float mode: residual norm at most 1e-10") {
        OpMatrix tf = exp_numeric(to_matrix(neg_half_laplacian(1), s), 50);
        OpMatrix tf_inv = exp_numeric(omat_scal(Scalar(-1), to_matrix(neg_half_laplacian(1), s)), 50);
        OpMatrix h = conjugate(to_matrix(g.h, s), tf, tf_inv);
        OpMatrix e = conjugate(to_matrix(g.e, s), tf, tf_inv);
        OpMatrix f = conjugate(to_matrix(g.f, s), tf, tf_inv);
        Scalar tol = Scalar(1) / Scalar(10).pow(10);
        REQUIRE(max_abs_diff(comm(e, f), omat_scal(Scalar(2), h)) < tol);
        REQUIRE(max_abs_diff(comm(h, e), omat_scal(Scalar(-1), e)) < tol);
        REQUIRE(max_abs_diff(comm(h, f), f) < tol);
    }
}

TEST_CASE("ladder h spectrum is k - n/2") {
    LadderRep rep(Scalar(5), 9);
    auto m = ladder_matrices(rep, true);
    for (int k = 0; k < 9; ++k)
        REQUIRE(m.h.at(k, k) == Scalar(k) - Scalar::rational(5, 2));
}
