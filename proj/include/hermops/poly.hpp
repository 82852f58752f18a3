#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "hermops/scalar.hpp"

namespace hermops {

/// Sparse polynomial in one or two variables with Scalar coefficients.
/// Keys are (x-degree, y-degree); univariate polynomials keep y-degree 0.
/// Zero coefficients are never stored, so map equality is value equality.
class Poly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Scalar>;

    explicit Poly(int nvars = 1) : nvars_(check_nvars(nvars)) {}

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, Scalar c) {
        Poly p(nvars);
        p.add_term(0, 0, std::move(c));
        return p;
    }

    static Poly monomial(int nvars, int xdeg, int ydeg, Scalar c = Scalar(1)) {
        if (xdeg < 0 || ydeg < 0) throw std::invalid_argument("Poly: negative degree");
        if (nvars == 1 && ydeg != 0) throw std::invalid_argument("Poly: y power in univariate");
        Poly p(nvars);
        p.add_term(xdeg, ydeg, std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(int xdeg, int ydeg = 0) const {
        auto it = terms_.find({xdeg, ydeg});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
        return d;
    }

    void add_term(int xdeg, int ydeg, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace({xdeg, ydeg}, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_vars(a, b);
        Poly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }

    friend Poly operator-(const Poly& a) {
        Poly r(a.nvars_);
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Scalar& s, const Poly& a) {
        Poly r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : a.terms_) r.add_term(k.first, k.second, s * c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_vars(a, b);
        Poly r(a.nvars_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// d/dx (var 0) or d/dy (var 1).
    Poly derivative(int var = 0) const {
        Poly r(nvars_);
        for (const auto& [k, c] : terms_) {
            int deg = var == 0 ? k.first : k.second;
            if (deg == 0) continue;
            Key nk = var == 0 ? Key{k.first - 1, k.second} : Key{k.first, k.second - 1};
            r.add_term(nk.first, nk.second, Scalar(deg) * c);
        }
        return r;
    }

    /// Substitution x -> sx*x, y -> sy*y.
    Poly scale_vars(const Scalar& sx, const Scalar& sy = Scalar(1)) const {
        Poly r(nvars_);
        for (const auto& [k, c] : terms_)
            r.add_term(k.first, k.second, c * sx.pow(k.first) * sy.pow(k.second));
        return r;
    }

    /// Substitution swapping x and y (bivariate only).
    Poly swap_vars() const {
        if (nvars_ != 2) throw std::invalid_argument("Poly: swap_vars needs two variables");
        Poly r(2);
        for (const auto& [k, c] : terms_) r.add_term(k.second, k.first, c);
        return r;
    }

    Scalar max_abs_coeff() const {
        Scalar m(0);
        for (const auto& [k, c] : terms_) {
            Scalar a = c.abs();
            if (m < a) m = a;
        }
        return m;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    static int check_nvars(int nvars) {
        if (nvars != 1 && nvars != 2) throw std::invalid_argument("Poly: nvars must be 1 or 2");
        return nvars;
    }
    static void require_same_vars(const Poly& a, const Poly& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable-count mismatch");
    }

    int nvars_;
    Terms terms_;
};

}  // namespace hermops
