#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hermops/poly.hpp"
#include "hermops/scalar.hpp"
#include "hermops/weyl.hpp"

namespace hermops {

inline std::string monomial_name(int xdeg, int ydeg) {
    if (xdeg == 0 && ydeg == 0) return "1";
    std::string s;
    if (xdeg > 0) s += xdeg == 1 ? "x" : "x^" + std::to_string(xdeg);
    if (ydeg > 0) {
        if (!s.empty()) s += "*";
        s += ydeg == 1 ? "y" : "y^" + std::to_string(ydeg);
    }
    return s;
}

/// An operator mapped a basis monomial outside the truncated space. Never a
/// silent truncation; callers needing a degree-raising operator allocate a
/// larger codomain and restrict afterwards.
class DegreeOverflow : public std::runtime_error {
public:
    DegreeOverflow(int xdeg, int ydeg, int max_degree)
        : std::runtime_error("degree overflow: image monomial " + monomial_name(xdeg, ydeg) +
                             " exceeds total degree " + std::to_string(max_degree)),
          xdeg_(xdeg), ydeg_(ydeg) {}
    int xdeg() const { return xdeg_; }
    int ydeg() const { return ydeg_; }

private:
    int xdeg_, ydeg_;
};

class NotNilpotent : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotInverse : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Monomial basis of total degree <= N in graded-lexicographic order:
/// degrees ascend; within a degree block the x-power descends. The ordering
/// is deterministic and stable across runs.
class GradedSpace {
public:
    GradedSpace(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
        if (nvars != 1 && nvars != 2)
            throw std::invalid_argument("GradedSpace: nvars must be 1 or 2");
        if (max_degree < 0) throw std::invalid_argument("GradedSpace: negative degree");
    }

    int nvars() const { return nvars_; }
    int max_degree() const { return max_degree_; }

    int dim() const {
        return nvars_ == 1 ? max_degree_ + 1 : (max_degree_ + 1) * (max_degree_ + 2) / 2;
    }

    std::pair<int, int> monomial(int index) const {
        if (nvars_ == 1) return {index, 0};
        int d = 0;
        while ((d + 1) * (d + 2) / 2 <= index) ++d;
        int within = index - d * (d + 1) / 2;
        return {d - within, within};
    }

    /// Index of x^i y^j, or -1 when outside the space.
    int index_of(int i, int j) const {
        if (i < 0 || j < 0 || i + j > max_degree_) return -1;
        if (nvars_ == 1) return j == 0 ? i : -1;
        int d = i + j;
        return d * (d + 1) / 2 + j;
    }

    std::vector<Scalar> coords(const Poly& p) const {
        if (p.nvars() != nvars_) throw std::invalid_argument("coords: variable-count mismatch");
        std::vector<Scalar> v(static_cast<size_t>(dim()), Scalar(0));
        for (const auto& [k, c] : p.terms()) {
            int idx = index_of(k.first, k.second);
            if (idx < 0) throw DegreeOverflow(k.first, k.second, max_degree_);
            v[static_cast<size_t>(idx)] = c;
        }
        return v;
    }

    Poly poly_of(std::span<const Scalar> v) const {
        if (static_cast<int>(v.size()) != dim())
            throw std::invalid_argument("poly_of: dimension mismatch");
        Poly p(nvars_);
        for (int i = 0; i < dim(); ++i) {
            if (v[static_cast<size_t>(i)].is_zero()) continue;
            auto [xd, yd] = monomial(i);
            p.add_term(xd, yd, v[static_cast<size_t>(i)]);
        }
        return p;
    }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.nvars_ == b.nvars_ && a.max_degree_ == b.max_degree_;
    }
    friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }

private:
    int nvars_;
    int max_degree_;
};

enum class MatrixMode { exact, floating };

namespace detail {

template <class T>
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<T> a;

    DenseMat() = default;
    DenseMat(int r, int c, const T& init) : rows(r), cols(c), a(static_cast<size_t>(r) * c, init) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

using MatQ = DenseMat<Rational>;
using MatF = DenseMat<Float>;

inline MatQ identity_q(int n) {
    MatQ m(n, n, Rational(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline MatF identity_f(int n, int digits) {
    MatF m(n, n, Float(0, static_cast<unsigned>(digits)));
    for (int i = 0; i < n; ++i) m.at(i, i) = Float(1, static_cast<unsigned>(digits));
    return m;
}

// Zero entries are skipped on both sides, so products against sparse or
// block-triangular factors cost far less than dense cubic time.
template <class T>
DenseMat<T> matmul(const DenseMat<T>& x, const DenseMat<T>& y, const T& zero) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: dimension mismatch");
    DenseMat<T> r(x.rows, y.cols, zero);
    T prod = zero;
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k) {
            const T& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const T& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                prod = xik;
                prod *= ykj;
                r.at(i, j) += prod;
            }
        }
    }
    return r;
}

template <class T>
void add_inplace(DenseMat<T>& x, const DenseMat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw std::invalid_argument("matrix add: dimension mismatch");
    for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
}

template <class T>
void scal_inplace(DenseMat<T>& x, const T& s) {
    for (auto& e : x.a) e *= s;
}

template <class T>
std::vector<T> matvec(const DenseMat<T>& x, const std::vector<T>& v, const T& zero) {
    if (x.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<T> r(static_cast<size_t>(x.rows), zero);
    T prod = zero;
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) {
            const T& e = x.at(i, j);
            if (e.is_zero() || v[static_cast<size_t>(j)].is_zero()) continue;
            prod = e;
            prod *= v[static_cast<size_t>(j)];
            r[static_cast<size_t>(i)] += prod;
        }
    }
    return r;
}

inline MatF to_matf(const MatQ& m, int digits) {
    MatF r(m.rows, m.cols, Float(0, static_cast<unsigned>(digits)));
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Float(m.a[i], static_cast<unsigned>(digits));
    return r;
}

inline MatF reprec(const MatF& m, int digits) {
    MatF r(m.rows, m.cols, Float(0, static_cast<unsigned>(digits)));
    for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Float(m.a[i], static_cast<unsigned>(digits));
    return r;
}

}  // namespace detail

/// Dense matrix of an operator on a truncated graded basis. Column c holds
/// the coordinates of the image of basis monomial c. Square matrices carry
/// one space; restrictions of degree-raising operators use a larger codomain.
class OpMatrix {
public:
    OpMatrix(GradedSpace domain, GradedSpace codomain, detail::MatQ m)
        : domain_(domain), codomain_(codomain), m_(std::move(m)), digits_(0) {}

    OpMatrix(GradedSpace domain, GradedSpace codomain, detail::MatF m, int digits)
        : domain_(domain), codomain_(codomain), m_(std::move(m)), digits_(digits) {}

    const GradedSpace& domain() const { return domain_; }
    const GradedSpace& codomain() const { return codomain_; }
    const GradedSpace& space() const {
        if (!is_square()) throw std::logic_error("OpMatrix: rectangular matrix has two spaces");
        return domain_;
    }

    MatrixMode mode() const {
        return std::holds_alternative<detail::MatQ>(m_) ? MatrixMode::exact : MatrixMode::floating;
    }
    int digits() const { return digits_; }
    bool is_square() const { return rows() == cols(); }
    int rows() const {
        return std::visit([](const auto& m) { return m.rows; }, m_);
    }
    int cols() const {
        return std::visit([](const auto& m) { return m.cols; }, m_);
    }

    Scalar at(int i, int j) const {
        if (mode() == MatrixMode::exact) return Scalar(std::get<detail::MatQ>(m_).at(i, j));
        return Scalar::floating(std::get<detail::MatF>(m_).at(i, j));
    }

    const detail::MatQ& exact() const { return std::get<detail::MatQ>(m_); }
    const detail::MatF& floating() const { return std::get<detail::MatF>(m_); }

    /// Lossless view in floating form at the given precision.
    detail::MatF as_float(int digits) const {
        if (mode() == MatrixMode::exact) return detail::to_matf(exact(), digits);
        return detail::reprec(floating(), digits);
    }

    Scalar max_abs_entry() const {
        Scalar m(0);
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < cols(); ++j) {
                Scalar a = at(i, j).abs();
                if (m < a) m = a;
            }
        return m;
    }

    friend bool operator==(const OpMatrix& a, const OpMatrix& b) {
        if (a.mode() != MatrixMode::exact || b.mode() != MatrixMode::exact)
            throw std::logic_error("OpMatrix: exact equality requires exact mode");
        return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.exact().a == b.exact().a;
    }
    friend bool operator!=(const OpMatrix& a, const OpMatrix& b) { return !(a == b); }

private:
    GradedSpace domain_;
    GradedSpace codomain_;
    std::variant<detail::MatQ, detail::MatF> m_;
    int digits_;
};

namespace detail {

inline int op_float_digits(const WeylOp& op) {
    int d = 0;
    for (const auto& [k, c] : op.terms()) d = std::max(d, c.digits());
    return d;
}

}  // namespace detail

inline OpMatrix identity_matrix(const GradedSpace& space) {
    return OpMatrix(space, space, detail::identity_q(space.dim()));
}

/// Matrix of the operator action from `domain` into `codomain`. Throws
/// DegreeOverflow, naming the offending monomial, if any basis image leaves
/// the codomain.
inline OpMatrix to_matrix(const WeylOp& op, const GradedSpace& domain,
                          const GradedSpace& codomain) {
    if (op.nvars() != domain.nvars() || domain.nvars() != codomain.nvars())
        throw std::invalid_argument("to_matrix: variable-count mismatch");
    const int fdigits = detail::op_float_digits(op);
    const int n = domain.dim(), rows = codomain.dim();

    auto fill = [&](auto& m, auto convert) {
        for (int c = 0; c < n; ++c) {
            auto [xd, yd] = domain.monomial(c);
            Poly image = apply(op, Poly::monomial(domain.nvars(), xd, yd));
            for (const auto& [k, coeff] : image.terms()) {
                int idx = codomain.index_of(k.first, k.second);
                if (idx < 0) throw DegreeOverflow(k.first, k.second, codomain.max_degree());
                m.at(idx, c) = convert(coeff);
            }
        }
    };

    if (fdigits == 0) {
        detail::MatQ m(rows, n, Rational(0));
        fill(m, [](const Scalar& s) { return s.exact(); });
        return OpMatrix(domain, codomain, std::move(m));
    }
    detail::MatF m(rows, n, Float(0, static_cast<unsigned>(fdigits)));
    fill(m, [&](const Scalar& s) { return s.to_float(fdigits); });
    return OpMatrix(domain, codomain, std::move(m), fdigits);
}

inline OpMatrix to_matrix(const WeylOp& op, const GradedSpace& space) {
    return to_matrix(op, space, space);
}

/// Exact exponential of a strictly degree-decreasing operator: the series
/// sum_{p<=P} M^p/p! with P = ceil(N/min_drop) closes because M is nilpotent
/// on the space.
inline OpMatrix exp_exact_nilpotent(const WeylOp& op, const GradedSpace& space) {
    if (op.nvars() != space.nvars())
        throw std::invalid_argument("exp_exact_nilpotent: variable-count mismatch");
    int min_drop = 0;
    for (const auto& [k, c] : op.terms()) {
        int drop = k.derivative_order() - k.coordinate_order();
        if (drop <= 0)
            throw NotNilpotent("exp_exact_nilpotent: term " +
                               monomial_name(k.xp, k.yp) + "*d^(" + std::to_string(k.dx) + "," +
                               std::to_string(k.dy) + ") does not strictly decrease degree");
        min_drop = min_drop == 0 ? drop : std::min(min_drop, drop);
    }
    if (op.is_zero()) return identity_matrix(space);

    const int N = space.max_degree();
    const int P = (N + min_drop - 1) / min_drop;
    const OpMatrix m = to_matrix(op, space);

    if (m.mode() == MatrixMode::exact) {
        detail::MatQ r = detail::identity_q(space.dim());
        detail::MatQ term = detail::identity_q(space.dim());
        for (int p = 1; p <= P; ++p) {
            term = detail::matmul(term, m.exact(), Rational(0));
            detail::scal_inplace(term, Rational(Integer(1), Integer(p)));
            detail::add_inplace(r, term);
        }
        return OpMatrix(space, space, std::move(r));
    }
    const int digits = m.digits();
    const Float zero(0, static_cast<unsigned>(digits));
    detail::MatF r = detail::identity_f(space.dim(), digits);
    detail::MatF term = detail::identity_f(space.dim(), digits);
    for (int p = 1; p <= P; ++p) {
        term = detail::matmul(term, m.floating(), zero);
        detail::scal_inplace(term, Float(Rational(Integer(1), Integer(p)),
                                         static_cast<unsigned>(digits)));
        detail::add_inplace(r, term);
    }
    return OpMatrix(space, space, std::move(r), digits);
}

/// Image of p under the exponential of a strictly degree-decreasing
/// operator: the same terminating series as exp_exact_nilpotent, applied to
/// the polynomial itself. Exact for exact inputs.
inline Poly exp_apply_nilpotent(const WeylOp& op, const Poly& p) {
    for (const auto& [k, c] : op.terms())
        if (k.derivative_order() - k.coordinate_order() <= 0)
            throw NotNilpotent("exp_apply_nilpotent: term " + monomial_name(k.xp, k.yp) + "*d^(" +
                               std::to_string(k.dx) + "," + std::to_string(k.dy) +
                               ") does not strictly decrease degree");
    Poly sum = p;
    Poly term = p;
    for (long k = 1; !term.is_zero(); ++k) {
        term = (Scalar(1) / Scalar(k)) * apply(op, term);
        sum += term;
    }
    return sum;
}

namespace detail {

inline Float one_norm(const MatF& m, int digits) {
    Float best(0, static_cast<unsigned>(digits));
    Float col(0, static_cast<unsigned>(digits));
    for (int j = 0; j < m.cols; ++j) {
        col = 0;
        for (int i = 0; i < m.rows; ++i) col += abs(m.at(i, j));
        if (col > best) best = col;
    }
    return best;
}

// Truncated Taylor sum evaluated Paterson-Stockmeyer style: powers A^2..A^q
// once, then a Horner recursion in A^q. Cuts matrix products from P to about
// 2*sqrt(P).
inline MatF taylor_ps(const MatF& a, int order, int digits) {
    const unsigned prec = static_cast<unsigned>(digits);
    const Float zero(0, prec);
    const int n = a.rows;
    const int q = std::max(1, static_cast<int>(std::ceil(std::sqrt(double(order + 1)))));

    std::vector<MatF> pow;  // pow[i] = A^i, i = 0..q
    pow.push_back(identity_f(n, digits));
    pow.push_back(a);
    for (int i = 2; i <= q; ++i) pow.push_back(matmul(pow[static_cast<size_t>(i - 1)], a, zero));

    std::vector<Float> coeff;  // 1/p!
    coeff.emplace_back(1, prec);
    for (int p = 1; p <= order; ++p)
        coeff.push_back(Float(coeff.back() / p, prec));

    const int blocks = (order + q) / q;  // ceil((order+1)/q)
    MatF sum(n, n, zero);
    for (int b = blocks - 1; b >= 0; --b) {
        if (b != blocks - 1) sum = matmul(sum, pow[static_cast<size_t>(q)], zero);
        for (int i = 0; i < q; ++i) {
            int p = b * q + i;
            if (p > order) break;
            MatF scaled = pow[static_cast<size_t>(i)];
            scal_inplace(scaled, coeff[static_cast<size_t>(p)]);
            add_inplace(sum, scaled);
        }
    }
    return sum;
}

}  // namespace detail

/// Floating matrix exponential by error-controlled scaling and squaring. The
/// series order P and squarings s satisfy the a-priori 1-norm bound
/// ||M/2^s||^(P+1)/(P+1)! < 10^-w at the internal working precision w
/// (requested digits plus guard digits).
inline OpMatrix exp_numeric(const OpMatrix& m, int digits) {
    if (!m.is_square()) throw std::invalid_argument("exp_numeric: matrix not square");
    if (digits < kMinDigits) throw std::invalid_argument("exp_numeric: precision below 15 digits");

    const int guard = 20;
    const int w = digits + guard;
    const unsigned wprec = static_cast<unsigned>(w);
    detail::MatF a = m.as_float(w);

    const Float norm = detail::one_norm(a, w);
    if (norm.is_zero())
        return OpMatrix(m.space(), m.space(), detail::identity_f(m.rows(), digits), digits);

    int s = 0;
    {
        Float scaled = norm;
        while (scaled > 1) {
            scaled /= 2;
            ++s;
        }
    }
    if (s > 0) {
        Float inv_scale(1, wprec);
        for (int i = 0; i < s; ++i) inv_scale /= 2;  // exact in binary
        detail::scal_inplace(a, inv_scale);
    }

    // Smallest P with alpha^(P+1)/(P+1)! below the working tolerance.
    const Float alpha = detail::one_norm(a, w);
    const Float thresh = pow(Float(10, wprec), -w);
    int order = 0;
    Float bound = alpha;
    while (bound >= thresh && order < 10000) {
        ++order;
        bound *= alpha;
        bound /= (order + 1);
    }

    detail::MatF r = detail::taylor_ps(a, order, w);
    const Float zero(0, wprec);
    for (int i = 0; i < s; ++i) r = detail::matmul(r, r, zero);

    return OpMatrix(m.space(), m.space(), detail::reprec(r, digits), digits);
}

inline OpMatrix omat_mul(const OpMatrix& a, const OpMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("omat_mul: dimension mismatch");
    if (a.mode() == MatrixMode::exact && b.mode() == MatrixMode::exact)
        return OpMatrix(b.domain(), a.codomain(),
                        detail::matmul(a.exact(), b.exact(), Rational(0)));
    int d = std::max({a.digits(), b.digits(), kMinDigits});
    return OpMatrix(b.domain(), a.codomain(),
                    detail::matmul(a.as_float(d), b.as_float(d), Float(0, static_cast<unsigned>(d))),
                    d);
}

inline OpMatrix omat_add(const OpMatrix& a, const OpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("omat_add: dimension mismatch");
    if (a.mode() == MatrixMode::exact && b.mode() == MatrixMode::exact) {
        detail::MatQ r = a.exact();
        detail::add_inplace(r, b.exact());
        return OpMatrix(a.domain(), a.codomain(), std::move(r));
    }
    int d = std::max({a.digits(), b.digits(), kMinDigits});
    detail::MatF r = a.as_float(d);
    detail::add_inplace(r, b.as_float(d));
    return OpMatrix(a.domain(), a.codomain(), std::move(r), d);
}

inline OpMatrix omat_scal(const Scalar& s, const OpMatrix& a) {
    if (s.is_exact() && a.mode() == MatrixMode::exact) {
        detail::MatQ r = a.exact();
        detail::scal_inplace(r, s.exact());
        return OpMatrix(a.domain(), a.codomain(), std::move(r));
    }
    int d = std::max({s.digits(), a.digits(), kMinDigits});
    detail::MatF r = a.as_float(d);
    detail::scal_inplace(r, s.to_float(d));
    return OpMatrix(a.domain(), a.codomain(), std::move(r), d);
}

/// Entrywise max-abs difference, exact when both operands are exact.
inline Scalar max_abs_diff(const OpMatrix& a, const OpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    Scalar m(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Scalar d = (a.at(i, j) - b.at(i, j)).abs();
            if (m < d) m = d;
        }
    return m;
}

/// t * a * t_inv. Verifies t_inv is a right inverse of t: exactly in exact
/// mode, within 10^-(digits-4) entrywise otherwise.
inline OpMatrix conjugate(const OpMatrix& a, const OpMatrix& t, const OpMatrix& t_inv) {
    if (!a.is_square() || !t.is_square() || !t_inv.is_square() || a.rows() != t.rows() ||
        t.rows() != t_inv.rows())
        throw std::invalid_argument("conjugate: dimension mismatch");
    OpMatrix check = omat_mul(t_inv, t);
    Scalar err = max_abs_diff(check, identity_matrix(a.space()));
    if (check.mode() == MatrixMode::exact) {
        if (!err.is_zero()) throw NotInverse("conjugate: t_inv*t differs from identity");
    } else {
        int d = std::max(check.digits(), kMinDigits);
        Scalar tol = Scalar(1) / Scalar(10).pow(d - 4);
        if (tol < err) throw NotInverse("conjugate: t_inv*t differs from identity beyond tolerance");
    }
    return omat_mul(omat_mul(t, a), t_inv);
}

/// Matrix action on coordinate vectors.
inline std::vector<Scalar> apply_matrix(const OpMatrix& m, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != m.cols())
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    int fd = m.digits();
    for (const auto& s : v) fd = std::max(fd, s.digits());
    if (m.mode() == MatrixMode::exact && fd == 0) {
        std::vector<Rational> x(v.size());
        for (size_t i = 0; i < v.size(); ++i) x[i] = v[i].exact();
        auto r = detail::matvec(m.exact(), x, Rational(0));
        std::vector<Scalar> out;
        out.reserve(r.size());
        for (auto& e : r) out.emplace_back(std::move(e));
        return out;
    }
    fd = std::max(fd, kMinDigits);
    std::vector<Float> x;
    x.reserve(v.size());
    for (const auto& s : v) x.push_back(s.to_float(fd));
    auto r = detail::matvec(m.as_float(fd), x, Float(0, static_cast<unsigned>(fd)));
    std::vector<Scalar> out;
    out.reserve(r.size());
    for (auto& e : r) out.push_back(Scalar::floating(std::move(e)));
    return out;
}

/// Matrix action on a polynomial, mapped back to a polynomial.
inline Poly apply_matrix(const OpMatrix& m, const Poly& p) {
    return m.codomain().poly_of(apply_matrix(m, m.domain().coords(p)));
}

}  // namespace hermops
