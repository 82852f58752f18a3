#include <catch2/catch_amalgamated.hpp>

#include "hermops/io.hpp"
#include "hermops/suite.hpp"
#include "hermops/verify.hpp"

using namespace hermops;

namespace {

Scalar tol10(int k) { return Scalar(1) / Scalar(10).pow(k); }

}  // namespace

TEST_CASE("product of exponentials: computed scalar for the Hermite pair is -1") {
    auto r = bch_check(hermite_operator(), op_d(1), GradedSpace(1, 10), 50, tol10(10), "eq22");
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE(r.params.at("computed_s") == "-1");
    REQUIRE(r.residual < tol10(10));
}

TEST_CASE("product of exponentials: commuting pair uses the limit value") {
    auto r = bch_check(op_d(1), op_d(1), GradedSpace(1, 6), 50, tol10(10), "bch-commuting");
    REQUIRE(r.verdict == Verdict::pass);
    REQUIRE(r.params.at("computed_s") == "0");
    REQUIRE(r.notes.find("limit") != std::string::npos);
}

TEST_CASE("product of exponentials: bivariate pair has computed scalar -2") {
    LambdaForm lam(Scalar(1), Scalar::rational(1, 2), Scalar(1));
    for (const Scalar& kappa : {Scalar(1), Scalar::rational(-3, 7)}) {
        auto r = bch_check(bivariate_hermite_operator(lam.mixed()),
                           kappa * WeylOp::term(2, {0, 0, 1, 1}), GradedSpace(2, 8), 50,
                           tol10(10), "eq65");
        REQUIRE(r.verdict == Verdict::pass);
        REQUIRE(r.params.at("computed_s") == "-2");
    }
}

TEST_CASE("product of exponentials: non-proportional commutator is reported, not asserted") {
    // [x, D] = -1 is not a multiple of D.
    auto r = bch_check(op_x(1), op_d(1), GradedSpace(1, 4), 50, tol10(10));
    REQUIRE(r.verdict == Verdict::not_proportional);
}

TEST_CASE("product of exponentials: degree overflow becomes a verdict") {
    // [xD, x^2 D] = x^2 D, so the pair is proportional, but the raising
    // operator's matrix does not fit the space.
    auto r = bch_check(euler_op(1), WeylOp::term(1, {2, 0, 1, 0}), GradedSpace(1, 4), 50,
                       tol10(10));
    REQUIRE(r.verdict == Verdict::overflow);
    REQUIRE(r.params.at("computed_s") == "1");
}

TEST_CASE("hermite route equivalence reports") {
    for (int n = 0; n <= 12; ++n) {
        auto r = verify_eq1(n);
        REQUIRE(r.verdict == Verdict::pass);
        REQUIRE(r.residual.is_zero());
    }
}

TEST_CASE("binomial shift identity is exact") {
    for (int n : {0, 1, 2, 7, 12}) {
        auto r = verify_eq25(n);
        REQUIRE(r.verdict == Verdict::pass);
        REQUIRE(r.mode == CheckMode::exact);
        REQUIRE(r.residual.is_zero());
    }
}

TEST_CASE("shifted-binomial numeric identity") {
    auto r0 = verify_eq31(0, 8, 50, tol10(10));
    REQUIRE(r0.verdict == Verdict::pass);

    auto r1 = verify_eq31(1, 9, 50, tol10(10));
    REQUIRE(r1.verdict == Verdict::pass);

    auto r6 = verify_eq31(6, 14, 50, tol10(8));
    REQUIRE(r6.verdict == Verdict::pass);

    // Truncation stability: growing the space does not move the residual.
    auto r6b = verify_eq31(6, 18, 50, tol10(8));
    REQUIRE(r6b.verdict == Verdict::pass);
    REQUIRE((r6.residual - r6b.residual).abs() < tol10(8));

    REQUIRE(verify_eq31(5, 3, 50, tol10(8)).verdict == Verdict::overflow);
}

TEST_CASE("eigen-relations are exactly zero") {
    for (int n : {0, 1, 3, 8}) REQUIRE(verify_eigen(EigenCheck::eq2, n).residual.is_zero());

    for (const auto& lam : standard_lambdas())
        for (int total = 0; total <= 4; ++total)
            for (int n = total; n >= 0; --n) {
                int m = total - n;
                REQUIRE(verify_eigen(EigenCheck::eq36, n, m, lam).verdict == Verdict::pass);
                REQUIRE(verify_eigen(EigenCheck::eq50, n, m, lam).verdict == Verdict::pass);
                REQUIRE(verify_eigen(EigenCheck::eq55, n, m, lam).verdict == Verdict::pass);
            }

    // Worked instance: the u operator on xy - 1/2 doubles it.
    LambdaForm lam(Scalar(1), Scalar::rational(1, 2), Scalar(1));
    Poly u11 = u_poly(1, 1, lam);
    REQUIRE(apply(u_operator(lam.mixed()), u11) == Scalar(2) * u11);
}

TEST_CASE("conjugation identities are exact matrix equalities") {
    REQUIRE(verify_conjugation(ConjCheck::eq12, 8).verdict == Verdict::pass);
    for (const auto& lam : standard_lambdas())
        REQUIRE(verify_conjugation(ConjCheck::eq42_49, 6, lam).verdict == Verdict::pass);
    for (long n : {0L, 1L, 2L, 5L, 10L})
        REQUIRE(verify_prop1(Scalar(n), 10).verdict == Verdict::pass);
}

TEST_CASE("transform-route consistency reports") {
    LambdaForm lam(Scalar(2), Scalar(1), Scalar(3));
    for (int total = 0; total <= 6; ++total)
        for (int n = total; n >= 0; --n)
            REQUIRE(verify_eq41(n, total - n, lam).verdict == Verdict::pass);
}

TEST_CASE("bivariate product identity: computed variant passes, literal variants are data") {
    LambdaForm lam(Scalar(1), Scalar::rational(1, 2), Scalar(1));

    auto trivial =
        verify_theorem1(0, 0, lam, Theorem1Variant::computed_s, 0, 50, tol10(6));
    REQUIRE(trivial.verdict == Verdict::pass);
    REQUIRE(trivial.residual.is_zero());

    auto computed = verify_theorem1(1, 1, lam, Theorem1Variant::computed_s, 2, 50, tol10(8));
    REQUIRE(computed.verdict == Verdict::pass);
    REQUIRE(computed.params.at("computed_s") == "-2");

    // The two printed substitutions are executed and recorded; whether they
    // pass is measured, not presumed.
    auto v1 = verify_theorem1(1, 1, lam, Theorem1Variant::paper_1_minus_e, 2, 50, tol10(6));
    auto v2 = verify_theorem1(1, 1, lam, Theorem1Variant::paper_e_minus_1, 2, 50, tol10(6));
    REQUIRE(v1.params.at("variant") == "paper-1-minus-e");
    REQUIRE(v2.params.at("variant") == "paper-e-minus-1");
    REQUIRE((v1.verdict == Verdict::pass || v1.verdict == Verdict::fail));
    REQUIRE((v2.verdict == Verdict::pass || v2.verdict == Verdict::fail));

    // Exit-code gating: only the computed variant gates.
    REQUIRE(report_gates(computed));
    REQUIRE_FALSE(report_gates(v1));
    REQUIRE_FALSE(report_gates(v2));
}

TEST_CASE("ladder product identity") {
    REQUIRE(verify_eq78(2, Scalar(0), 50, tol10(12)).verdict == Verdict::pass);
    REQUIRE(verify_eq78(16, Scalar(0), 50, tol10(10)).verdict == Verdict::pass);
    // Degenerate scaling: exp(h+0)exp(0) = exp(h) trivially; covered by the
    // commuting-pair route above, kept here for the dim-1 edge.
    REQUIRE(verify_eq78(1, Scalar(0), 50, tol10(12)).verdict == Verdict::pass);
}

TEST_CASE("rodrigues reports") {
    for (int n : {0, 1, 2, 11, 20}) {
        REQUIRE(verify_eq73(n).verdict == Verdict::pass);
        REQUIRE(verify_eq74(n).verdict == Verdict::pass);
    }
}

TEST_CASE("relation reports gate as configured") {
    auto literal = relation_report(check_relations(bivariate_generators_literal(Scalar(1))),
                                   "eq53-literal", {});
    REQUIRE(literal.verdict == Verdict::fail);
    REQUIRE_FALSE(literal.residual.is_zero());

    auto conj = relation_report(
        check_relations(conjugated_bivariate_generators(standard_lambdas().front())), "eq60", {},
        /*gate_index=*/1);
    REQUIRE(conj.verdict == Verdict::pass);
    REQUIRE(conj.notes.find("recorded, not gating") != std::string::npos);
}

TEST_CASE("suite runs are deterministic and honestly report known failures") {
    SuiteConfig cfg;
    cfg.max_nm = 2;
    cfg.eq1_max_n = 4;
    cfg.eq2_max_n = 4;
    cfg.eq25_max_n = 4;
    cfg.eq31_max_n = 1;
    cfg.rodrigues_max_n = 4;
    cfg.conj_degree = 4;
    cfg.prop1_degree = 4;
    cfg.bch_degree = 6;
    cfg.bch_bivariate_degree = 6;
    cfg.ladder_dims = {2, 4};
    cfg.weights = {0, 2};

    auto a = run_suite(cfg);
    auto b = run_suite(cfg);
    REQUIRE(reports_to_json(a).dump() == reports_to_json(b).dump());

    // Everything passes except the literal-family relations and the two
    // printed theorem1 substitutions, which are reported as data.
    for (const auto& r : a) {
        if (r.check_id == "eq53-literal") {
            REQUIRE(r.verdict == Verdict::fail);
        } else if (r.check_id == "theorem1" && r.params.at("variant") != "computed-s") {
            continue;  // measured, no presumption
        } else {
            INFO(r.check_id << " " << params_compact(r.params) << " " << r.notes);
            REQUIRE(r.verdict == Verdict::pass);
        }
    }
    REQUIRE_FALSE(suite_passes(a));  // the literal family's failure gates
}

TEST_CASE("report serialization shapes") {
    auto r = verify_eq25(3);
    Json j = report_to_json(r);
    REQUIRE(j["check_id"] == "eq25");
    REQUIRE(j["mode"] == "exact");
    REQUIRE(j["residual"] == "0");
    REQUIRE(j["verdict"] == "pass");

    auto csv = reports_to_csv({r});
    REQUIRE(csv.find("check_id,params,residual,verdict") == 0);
    REQUIRE(csv.find("eq25") != std::string::npos);

    Poly p = hermite_oracle(3);
    Json pj = poly_to_json("hermite", {{"n", "3"}}, p);
    REQUIRE(pj["terms"].size() == 2);
    REQUIRE(pj["terms"][0]["xdeg"] == 3);
    REQUIRE(pj["terms"][0]["coeff"] == "1");
    REQUIRE(pj["terms"][1]["coeff"] == "-3");
}
