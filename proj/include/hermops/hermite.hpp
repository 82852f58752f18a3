#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "hermops/poly.hpp"
#include "hermops/scalar.hpp"
#include "hermops/space.hpp"
#include "hermops/weyl.hpp"

namespace hermops {

/// Positive-definite quadratic form [[a, b], [b, c]] entered through the
/// square roots of its diagonal, so that the half-integer powers a^((n-k)/2),
/// c^((m-k)/2) appearing in the bivariate Hermite sum stay exact.
class LambdaForm {
public:
    LambdaForm(Scalar sqrt_a, Scalar b, Scalar sqrt_c)
        : sqrt_a_(std::move(sqrt_a)), b_(std::move(b)), sqrt_c_(std::move(sqrt_c)) {
        if (!(Scalar(0) < sqrt_a_) || !(Scalar(0) < sqrt_c_))
            throw std::invalid_argument("LambdaForm: sqrt_a and sqrt_c must be positive");
        if (!(b_ * b_ < a() * c()))
            throw std::invalid_argument("LambdaForm: requires a*c - b^2 > 0 with a, c > 0");
    }

    const Scalar& sqrt_a() const { return sqrt_a_; }
    const Scalar& b() const { return b_; }
    const Scalar& sqrt_c() const { return sqrt_c_; }

    Scalar a() const { return sqrt_a_ * sqrt_a_; }
    Scalar c() const { return sqrt_c_ * sqrt_c_; }
    Scalar sqrt_ac() const { return sqrt_a_ * sqrt_c_; }
    /// b / sqrt(a*c), the mixed-derivative coefficient scale.
    Scalar mixed() const { return b_ / sqrt_ac(); }

private:
    Scalar sqrt_a_, b_, sqrt_c_;
};

/// Exponent pairing for the u polynomial sum: whether the n index rides on
/// x (the default, matching the bivariate Hermite pairing) or on y.
enum class ExponentConvention { n_with_x, n_with_y };

/// Probabilists' Hermite polynomial by the classical three-term recurrence
/// He_{k+1} = x He_k - k He_{k-1}. Independent of the operator route.
inline Poly hermite_oracle(int n) {
    if (n < 0) throw std::invalid_argument("hermite_oracle: negative index");
    Poly prev = Poly::constant(1, Scalar(1));  // He_0
    if (n == 0) return prev;
    Poly cur = Poly::monomial(1, 1, 0);  // He_1
    const Poly x = Poly::monomial(1, 1, 0);
    for (int k = 1; k < n; ++k) {
        Poly next = x * cur - Scalar(k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Probabilists' Hermite polynomial as the Gaussian-transform image of x^n:
/// the exact nilpotent exponential of -(1/2)D^2 applied to the monomial.
inline Poly hermite_e(int n) {
    if (n < 0) throw std::invalid_argument("hermite_e: negative index");
    return exp_apply_nilpotent(neg_half_laplacian(1), Poly::monomial(1, n, 0));
}

/// sum_k C(n,k) He_{n-k}(x), the binomial expansion equal to He_n(x+1).
inline Poly shift_expansion(int n) {
    if (n < 0) throw std::invalid_argument("shift_expansion: negative index");
    Poly r(1);
    for (int k = 0; k <= n; ++k) r += Scalar(Integer(binomial(n, k))) * hermite_oracle(n - k);
    return r;
}

namespace detail {

/// The u polynomial sum with raw scalars and no positive-definiteness
/// screening: sum_k (-1)^k k! C(m,k) C(n,k) sqrt_a^(n-k) b^k sqrt_c^(m-k)
/// x^(n-k) y^(m-k) under the default pairing.
inline Poly u_sum(int n, int m, const Scalar& sqrt_a, const Scalar& b, const Scalar& sqrt_c,
                  ExponentConvention conv) {
    Poly r(2);
    for (int k = 0; k <= std::min(n, m); ++k) {
        Scalar coeff = Scalar(Integer(factorial(k) * binomial(m, k) * binomial(n, k)));
        if (k % 2 == 1) coeff = -coeff;
        coeff *= sqrt_a.pow(n - k) * b.pow(k) * sqrt_c.pow(m - k);
        if (conv == ExponentConvention::n_with_x)
            r.add_term(n - k, m - k, coeff);
        else
            r.add_term(m - k, n - k, coeff);
    }
    return r;
}

/// The bivariate Hermite sum with raw scalars:
/// sum_k (-1)^k k! C(m,k) C(n,k) sqrt_a^(n-k) b^k sqrt_c^(m-k)
/// He_{n-k}(x) He_{m-k}(y).
inline Poly bivariate_hermite_sum(int n, int m, const Scalar& sqrt_a, const Scalar& b,
                                  const Scalar& sqrt_c) {
    Poly r(2);
    for (int k = 0; k <= std::min(n, m); ++k) {
        Scalar coeff = Scalar(Integer(factorial(k) * binomial(m, k) * binomial(n, k)));
        if (k % 2 == 1) coeff = -coeff;
        coeff *= sqrt_a.pow(n - k) * b.pow(k) * sqrt_c.pow(m - k);
        const Poly hex = hermite_oracle(n - k);
        const Poly hey = hermite_oracle(m - k);
        Poly hx(2), hy(2);
        for (const auto& [key, c] : hex.terms()) hx.add_term(key.first, 0, c);
        for (const auto& [key, c] : hey.terms()) hy.add_term(0, key.first, c);
        r += coeff * (hx * hy);
    }
    return r;
}

}  // namespace detail

/// The u polynomial u_{n,m}(x,y): pre-image of the bivariate Hermite
/// polynomial under the two-variable Gaussian transform.
inline Poly u_poly(int n, int m, const LambdaForm& lam,
                   ExponentConvention conv = ExponentConvention::n_with_x) {
    if (n < 0 || m < 0) throw std::invalid_argument("u_poly: negative index");
    return detail::u_sum(n, m, lam.sqrt_a(), lam.b(), lam.sqrt_c(), conv);
}

/// Bivariate Hermite polynomial for the form Lambda. Generated twice — by
/// the direct double-Hermite sum and by the Gaussian transform of the u
/// polynomial — and cross-checked for exact agreement.
inline Poly bivariate_hermite(int n, int m, const LambdaForm& lam) {
    if (n < 0 || m < 0) throw std::invalid_argument("bivariate_hermite: negative index");
    Poly direct = detail::bivariate_hermite_sum(n, m, lam.sqrt_a(), lam.b(), lam.sqrt_c());
    Poly transformed = exp_apply_nilpotent(neg_half_laplacian(2), u_poly(n, m, lam));
    if (direct != transformed)
        throw std::logic_error("bivariate_hermite: direct sum and transform route disagree");
    return direct;
}

/// Legendre polynomial from the n-th derivative of (x^2-1)^n over 2^n n!.
inline Poly legendre_rodrigues(int n) {
    if (n < 0) throw std::invalid_argument("legendre_rodrigues: negative index");
    Poly base = Poly::monomial(1, 2, 0) - Poly::constant(1, Scalar(1));
    Poly p = Poly::constant(1, Scalar(1));
    for (int i = 0; i < n; ++i) p *= base;
    for (int i = 0; i < n; ++i) p = p.derivative(0);
    return (Scalar(1) / Scalar(Integer(factorial(n) << n))) * p;
}

/// Legendre recurrence oracle (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
inline Poly legendre_oracle(int n) {
    if (n < 0) throw std::invalid_argument("legendre_oracle: negative index");
    Poly prev = Poly::constant(1, Scalar(1));
    if (n == 0) return prev;
    Poly cur = Poly::monomial(1, 1, 0);
    const Poly x = Poly::monomial(1, 1, 0);
    for (int k = 1; k < n; ++k) {
        Poly next = (Scalar(2 * k + 1) * (x * cur) - Scalar(k) * prev);
        next = (Scalar(1) / Scalar(k + 1)) * next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Laguerre polynomial from the operator formula (1/n!) (D - 1)^n x^n.
inline Poly laguerre_rodrigues(int n) {
    if (n < 0) throw std::invalid_argument("laguerre_rodrigues: negative index");
    Poly p = Poly::monomial(1, n, 0);
    for (int i = 0; i < n; ++i) p = p.derivative(0) - p;
    return (Scalar(1) / Scalar(Integer(factorial(n)))) * p;
}

/// Laguerre recurrence oracle (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
inline Poly laguerre_oracle(int n) {
    if (n < 0) throw std::invalid_argument("laguerre_oracle: negative index");
    Poly prev = Poly::constant(1, Scalar(1));
    if (n == 0) return prev;
    Poly cur = Poly::constant(1, Scalar(1)) - Poly::monomial(1, 1, 0);
    const Poly x = Poly::monomial(1, 1, 0);
    for (int k = 1; k < n; ++k) {
        Poly next = Scalar(2 * k + 1) * cur - x * cur - Scalar(k) * prev;
        next = (Scalar(1) / Scalar(k + 1)) * next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace hermops
