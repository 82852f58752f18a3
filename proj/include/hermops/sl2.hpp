#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hermops/hermite.hpp"
#include "hermops/scalar.hpp"
#include "hermops/space.hpp"
#include "hermops/weyl.hpp"

namespace hermops {

inline constexpr const char* kFamilyUnivariate = "univariate-eq7";
inline constexpr const char* kFamilyHermite = "hermite-eq13";
inline constexpr const char* kFamilyBivariateLiteral = "bivariate-eq51";
inline constexpr const char* kFamilyBivariateRepaired = "bivariate-repaired";
inline constexpr const char* kFamilyBivariateConjugated = "bivariate-conjugated-eq56";

/// One sl(2,R) generator family (h, e, f) realized by differential operators.
struct GeneratorTriple {
    WeylOp h, e, f;
    std::string family;
};

/// Result of checking the three bracket relations [e,f]=2h, [h,e]=-e,
/// [h,f]=f. Failure is data, not an error: each residual is reported
/// verbatim.
struct RelationCheck {
    std::string relation;
    Scalar residual_norm;
    bool exact_pass = false;
    std::optional<WeylOp> residual_op;
};

struct RelationReport {
    std::string family;
    std::array<RelationCheck, 3> checks;

    bool all_pass() const {
        return checks[0].exact_pass && checks[1].exact_pass && checks[2].exact_pass;
    }
    Scalar max_residual() const {
        Scalar m(0);
        for (const auto& c : checks)
            if (m < c.residual_norm) m = c.residual_norm;
        return m;
    }
};

/// h = xD - n/2, e = D, f = x^2 D - n x on one variable. The weight n is a
/// Scalar so that n/2 stays exact.
inline GeneratorTriple univariate_generators(const Scalar& n) {
    WeylOp h = euler_op(1) - WeylOp::constant(1, n / Scalar(2));
    WeylOp e = op_d(1);
    WeylOp f = WeylOp::term(1, {2, 0, 1, 0}) - n * op_x(1);
    return {std::move(h), std::move(e), std::move(f), kFamilyUnivariate};
}

/// The Gaussian-conjugated family: X1 = (xD - D^2) - n/2, X2 = D,
/// X3 = (x - D)(xD - D^2 - n).
inline GeneratorTriple hermite_conjugated_generators(const Scalar& n) {
    WeylOp dh = hermite_operator();
    WeylOp x1 = dh - WeylOp::constant(1, n / Scalar(2));
    WeylOp x2 = op_d(1);
    WeylOp x3 = wo_mul(op_x(1) - op_d(1), dh - WeylOp::constant(1, n));
    return {std::move(x1), std::move(x2), std::move(x3), kFamilyHermite};
}

/// The bivariate family exactly as printed:
///   h = (1/2)(x dx + y dy + 1) + alpha dx dy
///   e = alpha dx dy
///   f = (1/(2 alpha)) xy + (1/2)(x dx + y dy) + (alpha/4) dx dy
/// No claim that the bracket table holds; run check_relations for residuals.
inline GeneratorTriple bivariate_generators_literal(const Scalar& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("bivariate generators: alpha must be nonzero");
    const Scalar half = Scalar::rational(1, 2);
    const WeylOp mixed = WeylOp::term(2, {0, 0, 1, 1});
    WeylOp h = half * euler_op(2) + WeylOp::constant(2, half) + alpha * mixed;
    WeylOp e = alpha * mixed;
    WeylOp f = (half / alpha) * WeylOp::term(2, {1, 1, 0, 0}) + half * euler_op(2) +
               (alpha / Scalar(4)) * mixed;
    return {std::move(h), std::move(e), std::move(f), kFamilyBivariateLiteral};
}

namespace detail {

// Exact Gaussian elimination on an augmented system; empty when inconsistent
// or underdetermined.
inline std::optional<std::vector<Scalar>> solve_linear(std::vector<std::vector<Scalar>> rows,
                                                       int unknowns) {
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < unknowns && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;  // free unknown: underdetermined
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        auto& prow = rows[static_cast<size_t>(rank)];
        Scalar inv = Scalar(1) / prow[static_cast<size_t>(col)];
        for (auto& v : prow) v *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            Scalar factor = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor.is_zero()) continue;
            for (int c = col; c <= unknowns; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * prow[static_cast<size_t>(c)];
        }
        ++rank;
    }
    // Consistency of the remaining rows.
    for (int r = rank; r < nrows; ++r)
        if (!rows[static_cast<size_t>(r)][static_cast<size_t>(unknowns)].is_zero())
            return std::nullopt;
    if (rank < unknowns) return std::nullopt;
    std::vector<Scalar> sol(static_cast<size_t>(unknowns), Scalar(0));
    for (int r = 0; r < unknowns; ++r)
        sol[static_cast<size_t>(r)] = rows[static_cast<size_t>(r)][static_cast<size_t>(unknowns)];
    return sol;
}

}  // namespace detail

/// Same h and e as the literal family, with f re-derived over the ansatz
/// span {xy, x dx + y dy, dx dy, 1} by an exact linear solve so that
/// [e,f] = 2h and [h,f] = f hold identically.
inline GeneratorTriple bivariate_generators_repaired(const Scalar& alpha) {
    GeneratorTriple lit = bivariate_generators_literal(alpha);

    const std::array<WeylOp, 4> basis = {
        WeylOp::term(2, {1, 1, 0, 0}),  // xy
        euler_op(2),                    // x dx + y dy
        WeylOp::term(2, {0, 0, 1, 1}),  // dx dy
        WeylOp::identity(2),
    };

    // [e, f] - 2h = 0 and [h, f] - f = 0 are linear in the ansatz
    // coefficients; collect one equation per operator term.
    std::array<WeylOp, 4> br_e, br_h;
    for (size_t i = 0; i < basis.size(); ++i) {
        br_e[i] = commutator(lit.e, basis[i]);
        br_h[i] = commutator(lit.h, basis[i]) - basis[i];
    }
    const WeylOp rhs_e = Scalar(2) * lit.h;

    std::map<WeylKey, std::pair<std::array<Scalar, 4>, Scalar>> eq_e, eq_h;
    auto collect = [](std::map<WeylKey, std::pair<std::array<Scalar, 4>, Scalar>>& eqs,
                      const std::array<WeylOp, 4>& cols, const WeylOp& rhs) {
        for (size_t i = 0; i < cols.size(); ++i)
            for (const auto& [k, c] : cols[i].terms()) eqs[k].first[i] = c;
        for (const auto& [k, c] : rhs.terms()) eqs[k].second = c;
    };
    collect(eq_e, br_e, rhs_e);
    collect(eq_h, br_h, WeylOp::zero(2));

    std::vector<std::vector<Scalar>> rows;
    for (const auto* eqs : {&eq_e, &eq_h})
        for (const auto& [k, row] : *eqs) {
            std::vector<Scalar> r(row.first.begin(), row.first.end());
            r.push_back(row.second);
            rows.push_back(std::move(r));
        }

    auto sol = detail::solve_linear(std::move(rows), 4);
    if (!sol)
        throw std::logic_error(
            "bivariate_generators_repaired: ansatz admits no exact solution");

    WeylOp f = WeylOp::zero(2);
    for (size_t i = 0; i < basis.size(); ++i) f += (*sol)[i] * basis[i];
    return {std::move(lit.h), std::move(lit.e), std::move(f), kFamilyBivariateRepaired};
}

/// The conjugated bivariate family h', e', f' (the lowering operator A- is
/// e'). Requires b != 0 since f' carries 1/b.
inline GeneratorTriple conjugated_bivariate_generators(const LambdaForm& lam) {
    if (lam.b().is_zero())
        throw std::invalid_argument("conjugated bivariate generators: b must be nonzero");
    const Scalar half = Scalar::rational(1, 2);
    const Scalar mixed = lam.mixed();  // b / sqrt(ac)
    const WeylOp dxdy = WeylOp::term(2, {0, 0, 1, 1});
    const WeylOp dh_sum = hermite_operator_x() + hermite_operator_y();

    WeylOp h = half * dh_sum + WeylOp::constant(2, half) - mixed * dxdy;
    WeylOp e = (-mixed) * dxdy;
    WeylOp f = (-(lam.sqrt_ac() / (Scalar(2) * lam.b()))) *
                   wo_mul(op_x(2) - op_d(2), op_y() - op_dy()) +
               half * dh_sum + WeylOp::constant(2, half) - mixed * dxdy;
    return {std::move(h), std::move(e), std::move(f), kFamilyBivariateConjugated};
}

/// Exact residuals of the three bracket relations for a generator triple.
inline RelationReport check_relations(const GeneratorTriple& t) {
    RelationReport rep;
    rep.family = t.family;
    const std::array<std::pair<const char*, WeylOp>, 3> residuals = {{
        {"[e,f]-2h", commutator(t.e, t.f) - Scalar(2) * t.h},
        {"[h,e]+e", commutator(t.h, t.e) + t.e},
        {"[h,f]-f", commutator(t.h, t.f) - t.f},
    }};
    for (size_t i = 0; i < residuals.size(); ++i) {
        const WeylOp& r = residuals[i].second;
        rep.checks[i] = RelationCheck{residuals[i].first, r.max_abs_coeff(), r.is_zero(), r};
    }
    return rep;
}

/// Index actions of the general basis-function family on powers B^k:
/// h: k - n/2 (diagonal), e: k down one step, f: k - n up one step. The top
/// f action leaves the truncation and is dropped only in restricted mode.
struct LadderRep {
    Scalar weight_n;
    int dim;

    LadderRep(Scalar n, int d) : weight_n(std::move(n)), dim(d) {
        if (d < 1) throw std::invalid_argument("LadderRep: dim must be >= 1");
    }

    Scalar h_action(int k) const { return Scalar(k) - weight_n / Scalar(2); }
    Scalar e_action(int k) const { return Scalar(k); }          // coefficient on index k-1
    Scalar f_action(int k) const { return Scalar(k) - weight_n; }  // coefficient on index k+1
};

struct LadderMatrices {
    OpMatrix h, e, f;
};

/// Matrices of the ladder actions on the index basis (coordinates indexed by
/// the power k). In restricted mode the overflowing top column of f is
/// dropped; relation checks then run on the interior block 0..dim-2.
inline LadderMatrices ladder_matrices(const LadderRep& rep, bool restricted = false) {
    if (!rep.weight_n.is_exact())
        throw std::invalid_argument("ladder_matrices: weight must be exact");
    GradedSpace space(1, rep.dim - 1);
    const int n = rep.dim;
    detail::MatQ h(n, n, Rational(0)), e(n, n, Rational(0)), f(n, n, Rational(0));
    for (int k = 0; k < n; ++k) {
        h.at(k, k) = rep.h_action(k).exact();
        if (k > 0) e.at(k - 1, k) = rep.e_action(k).exact();
        if (k + 1 < n) {
            f.at(k + 1, k) = rep.f_action(k).exact();
        } else if (!rep.f_action(k).is_zero() && !restricted) {
            throw DegreeOverflow(k + 1, 0, rep.dim - 1);
        }
    }
    return {OpMatrix(space, space, std::move(h)), OpMatrix(space, space, std::move(e)),
            OpMatrix(space, space, std::move(f))};
}

/// Bracket relations for a ladder representation, checked exactly on the
/// interior block 0..dim-2 (where the dropped f column has no influence).
inline RelationReport check_ladder_relations(const LadderRep& rep) {
    LadderMatrices m = ladder_matrices(rep, /*restricted=*/true);
    auto comm = [](const OpMatrix& a, const OpMatrix& b) {
        return omat_add(omat_mul(a, b), omat_scal(Scalar(-1), omat_mul(b, a)));
    };
    const std::array<std::pair<const char*, OpMatrix>, 3> residuals = {{
        {"[e,f]-2h", omat_add(comm(m.e, m.f), omat_scal(Scalar(-2), m.h))},
        {"[h,e]+e", omat_add(comm(m.h, m.e), m.e)},
        {"[h,f]-f", omat_add(comm(m.h, m.f), omat_scal(Scalar(-1), m.f))},
    }};

    const int interior = rep.dim - 1;
    RelationReport rep_out;
    rep_out.family = "ladder";
    for (size_t i = 0; i < residuals.size(); ++i) {
        Scalar norm(0);
        const OpMatrix& r = residuals[i].second;
        for (int row = 0; row < interior; ++row)
            for (int col = 0; col < interior; ++col) {
                Scalar a = r.at(row, col).abs();
                if (norm < a) norm = a;
            }
        rep_out.checks[i] =
            RelationCheck{residuals[i].first, norm, norm.is_zero(), std::nullopt};
    }
    return rep_out;
}

}  // namespace hermops
