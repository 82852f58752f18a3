#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "hermops/poly.hpp"
#include "hermops/scalar.hpp"

namespace hermops {

/// One normal-ordered term x^xp y^yp (d/dx)^dx (d/dy)^dy.
struct WeylKey {
    int xp = 0, yp = 0, dx = 0, dy = 0;
    auto operator<=>(const WeylKey&) const = default;
    int coordinate_order() const { return xp + yp; }
    int derivative_order() const { return dx + dy; }
};

/// Polynomial-coefficient differential operator in one or two variables,
/// kept in normal-ordered canonical form (all multiplications by coordinates
/// to the left of all derivatives, no zero coefficients). Two operators are
/// equal iff their term maps are equal.
class WeylOp {
public:
    using Terms = std::map<WeylKey, Scalar>;

    explicit WeylOp(int nvars = 1) : nvars_(check_nvars(nvars)) {}

    static WeylOp zero(int nvars) { return WeylOp(nvars); }

    static WeylOp constant(int nvars, Scalar c) { return term(nvars, {0, 0, 0, 0}, std::move(c)); }

    static WeylOp identity(int nvars) { return constant(nvars, Scalar(1)); }

    static WeylOp term(int nvars, WeylKey k, Scalar c = Scalar(1)) {
        WeylOp op(nvars);
        if (k.xp < 0 || k.yp < 0 || k.dx < 0 || k.dy < 0)
            throw std::invalid_argument("WeylOp: negative exponent");
        if (nvars == 1 && (k.yp != 0 || k.dy != 0))
            throw std::invalid_argument("WeylOp: y factor in univariate operator");
        op.add_term(k, std::move(c));
        return op;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const WeylKey& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar max_abs_coeff() const {
        Scalar m(0);
        for (const auto& [k, c] : terms_) {
            Scalar a = c.abs();
            if (m < a) m = a;
        }
        return m;
    }

    friend bool operator==(const WeylOp& a, const WeylOp& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    friend WeylOp operator+(const WeylOp& a, const WeylOp& b) {
        require_same_vars(a, b);
        WeylOp r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }

    friend WeylOp operator-(const WeylOp& a) {
        WeylOp r(a.nvars_);
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend WeylOp operator-(const WeylOp& a, const WeylOp& b) { return a + (-b); }

    friend WeylOp operator*(const Scalar& s, const WeylOp& a) {
        WeylOp r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.add_term(k, s * c);
        return r;
    }

    /// Normal-ordered composition; see wo_mul below.
    friend WeylOp operator*(const WeylOp& a, const WeylOp& b);

    WeylOp& operator+=(const WeylOp& o) { return *this = *this + o; }
    WeylOp& operator-=(const WeylOp& o) { return *this = *this - o; }

private:
    static int check_nvars(int nvars) {
        if (nvars != 1 && nvars != 2) throw std::invalid_argument("WeylOp: nvars must be 1 or 2");
        return nvars;
    }
    static void require_same_vars(const WeylOp& a, const WeylOp& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("WeylOp: variable-count mismatch");
    }

    int nvars_;
    Terms terms_;
};

inline WeylOp wo_add(const WeylOp& a, const WeylOp& b) { return a + b; }

namespace detail {

// D^k x^p = sum_j C(k,j) * p!/(p-j)! * x^(p-j) D^(k-j), the single-variable
// reordering rule; x and y factors commute across each other.
inline void compose_terms(WeylOp& out, const WeylKey& a, const WeylKey& b, const Scalar& coeff) {
    const int jx_max = std::min(a.dx, b.xp);
    const int jy_max = std::min(a.dy, b.yp);
    for (int jx = 0; jx <= jx_max; ++jx) {
        Scalar cx = Scalar(Integer(binomial(a.dx, jx) * falling_factorial(b.xp, jx)));
        for (int jy = 0; jy <= jy_max; ++jy) {
            Scalar cy = Scalar(Integer(binomial(a.dy, jy) * falling_factorial(b.yp, jy)));
            WeylKey k{a.xp + b.xp - jx, a.yp + b.yp - jy, a.dx + b.dx - jx, a.dy + b.dy - jy};
            out.add_term(k, coeff * cx * cy);
        }
    }
}

}  // namespace detail

/// Normal-ordered composition a o b, rewriting d*x -> x*d + 1 independently
/// per variable. Exact when both operands are exact.
inline WeylOp wo_mul(const WeylOp& a, const WeylOp& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("WeylOp: variable-count mismatch");
    WeylOp r(a.nvars());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) detail::compose_terms(r, ka, kb, ca * cb);
    return r;
}

inline WeylOp operator*(const WeylOp& a, const WeylOp& b) { return wo_mul(a, b); }

inline WeylOp commutator(const WeylOp& a, const WeylOp& b) {
    return wo_mul(a, b) - wo_mul(b, a);
}

/// Image of p under the operator, exact for exact inputs. Satisfies
/// apply(wo_mul(a,b), p) == apply(a, apply(b, p)).
inline Poly apply(const WeylOp& op, const Poly& p) {
    if (op.nvars() != p.nvars()) throw std::invalid_argument("apply: variable-count mismatch");
    Poly r(p.nvars());
    for (const auto& [k, c] : op.terms()) {
        for (const auto& [m, pc] : p.terms()) {
            if (k.dx > m.first || k.dy > m.second) continue;
            Scalar factor(Integer(falling_factorial(m.first, k.dx) * falling_factorial(m.second, k.dy)));
            r.add_term(m.first - k.dx + k.xp, m.second - k.dy + k.yp, c * pc * factor);
        }
    }
    return r;
}

/// Returns s with a = s*b when a is a scalar multiple of b (s = 0 for a = 0);
/// empty when the operators are not proportional. b must be nonzero.
inline std::optional<Scalar> scalar_multiple_of(const WeylOp& a, const WeylOp& b) {
    if (b.is_zero()) throw std::invalid_argument("scalar_multiple_of: zero reference operator");
    if (a.is_zero()) return Scalar(0);
    if (a.nvars() != b.nvars() || a.terms().size() != b.terms().size()) return std::nullopt;
    std::optional<Scalar> ratio;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return std::nullopt;
        Scalar r = ia->second / ib->second;
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            return std::nullopt;
    }
    return ratio;
}

// Named operators used throughout.

/// d/dx.
inline WeylOp op_d(int nvars = 1) { return WeylOp::term(nvars, {0, 0, 1, 0}); }
/// Multiplication by x.
inline WeylOp op_x(int nvars = 1) { return WeylOp::term(nvars, {1, 0, 0, 0}); }
/// d/dy.
inline WeylOp op_dy() { return WeylOp::term(2, {0, 0, 0, 1}); }
/// Multiplication by y.
inline WeylOp op_y() { return WeylOp::term(2, {0, 1, 0, 0}); }

/// Euler operator x d/dx (plus y d/dy when bivariate).
inline WeylOp euler_op(int nvars = 1) {
    WeylOp r = WeylOp::term(nvars, {1, 0, 1, 0});
    if (nvars == 2) r += WeylOp::term(2, {0, 1, 0, 1});
    return r;
}

/// xD - D^2, the operator with the probabilists' Hermite polynomials as
/// eigenfunctions (eigenvalue n on the degree-n one).
inline WeylOp hermite_operator() {
    return WeylOp::term(1, {1, 0, 1, 0}) - WeylOp::term(1, {0, 0, 2, 0});
}

/// x dx - dx^2 acting on the x variable of a bivariate operator.
inline WeylOp hermite_operator_x() {
    return WeylOp::term(2, {1, 0, 1, 0}) - WeylOp::term(2, {0, 0, 2, 0});
}

/// y dy - dy^2.
inline WeylOp hermite_operator_y() {
    return WeylOp::term(2, {0, 1, 0, 1}) - WeylOp::term(2, {0, 0, 0, 2});
}

/// -(1/2) D^2 (univariate) or -(1/2)(dx^2 + dy^2) (bivariate); its operator
/// exponential carries monomials to Hermite polynomials.
inline WeylOp neg_half_laplacian(int nvars = 1) {
    Scalar half = Scalar::rational(1, 2);
    WeylOp r = (-half) * WeylOp::term(nvars, {0, 0, 2, 0});
    if (nvars == 2) r += (-half) * WeylOp::term(2, {0, 0, 0, 2});
    return r;
}

/// The bivariate Hermite eigen-operator
/// (x dx - dx^2) + (y dy - dy^2) - 2*mixed * dx dy.
inline WeylOp bivariate_hermite_operator(const Scalar& mixed) {
    return hermite_operator_x() + hermite_operator_y() -
           (Scalar(2) * mixed) * WeylOp::term(2, {0, 0, 1, 1});
}

/// x dx + y dy - 2*mixed * dx dy, the operator with the u polynomials as
/// eigenfunctions (eigenvalue n+m on the (n,m) one).
inline WeylOp u_operator(const Scalar& mixed) {
    return euler_op(2) - (Scalar(2) * mixed) * WeylOp::term(2, {0, 0, 1, 1});
}

}  // namespace hermops
