#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace hermops {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Float = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;

// Minimum decimal precision accepted for floating values.
inline constexpr int kMinDigits = 15;
// Default working precision for numeric (non-exact) computations.
inline constexpr int kDefaultDigits = 50;

/// Exact rational or arbitrary-precision floating scalar.
///
/// Exact values are GMP rationals in lowest terms with positive denominator.
/// Floating values carry their decimal precision (>= 15 digits). Mixing the
/// two kinds in one operation promotes to floating at the precision of the
/// floating operand (the larger precision when both are floating).
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(long n) : v_(Rational(n)) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    explicit Scalar(Integer n) : v_(Rational(std::move(n))) {}

    static Scalar rational(Integer num, Integer den) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        return Scalar(Rational(std::move(num), std::move(den)));
    }

    /// Parses "p", "p/q" or a decimal literal like "-0.25" into an exact rational.
    static Scalar parse_rational(std::string_view s) {
        auto pos = s.find('/');
        if (pos != std::string_view::npos) {
            Integer num(std::string(s.substr(0, pos)));
            Integer den(std::string(s.substr(pos + 1)));
            return rational(std::move(num), std::move(den));
        }
        auto dot = s.find('.');
        if (dot != std::string_view::npos) {
            std::string digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
            Integer num(digits);
            Integer den(1);
            for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
            return rational(std::move(num), std::move(den));
        }
        return Scalar(Rational(Integer(std::string(s))));
    }

    static Scalar floating(Float f) {
        check_digits(static_cast<int>(f.precision()));
        return Scalar(std::move(f), from_float_tag{});
    }

    static Scalar floating(double d, int digits) {
        check_digits(digits);
        return Scalar(Float(d, static_cast<unsigned>(digits)), from_float_tag{});
    }

    /// Euler's number at the given decimal precision.
    static Scalar euler(int digits) {
        check_digits(digits);
        return floating(exp(Float(1, static_cast<unsigned>(digits))));
    }

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    bool is_float() const { return !is_exact(); }

    /// Decimal precision of a floating value; 0 for exact values.
    int digits() const {
        return is_exact() ? 0 : static_cast<int>(std::get<Float>(v_).precision());
    }

    const Rational& exact() const {
        if (!is_exact()) throw std::logic_error("Scalar: not exact");
        return std::get<Rational>(v_);
    }

    /// Value as a float at the requested precision (exact values convert losslessly
    /// up to that precision; floats re-round).
    Float to_float(int digits) const {
        check_digits(digits);
        if (is_exact()) return Float(std::get<Rational>(v_), static_cast<unsigned>(digits));
        return Float(std::get<Float>(v_), static_cast<unsigned>(digits));
    }

    bool is_zero() const {
        return is_exact() ? std::get<Rational>(v_).is_zero() : std::get<Float>(v_).is_zero();
    }

    bool is_negative() const {
        return is_exact() ? std::get<Rational>(v_) < 0 : std::get<Float>(v_) < 0;
    }

    friend Scalar operator-(const Scalar& a) {
        if (a.is_exact()) return Scalar(Rational(-a.exact()));
        return floating(Float(-std::get<Float>(a.v_)));
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) { return binop(a, b, add_op{}); }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return binop(a, b, sub_op{}); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) { return binop(a, b, mul_op{}); }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        return binop(a, b, div_op{});
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    /// Integer power; negative exponents require a nonzero base.
    Scalar pow(long e) const {
        if (e == 0) return Scalar(1);
        if (e < 0) return Scalar(1) / pow(-e);
        Scalar base = *this, acc(1);
        long k = e;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    Scalar abs() const { return is_negative() ? -*this : *this; }

    /// Exact comparison for exact pairs; floating comparison otherwise.
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
        int d = std::max(a.digits(), b.digits());
        if (d == 0) d = kMinDigits;
        return a.to_float(d) == b.to_float(d);
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
        int d = std::max({a.digits(), b.digits(), kMinDigits});
        return a.to_float(d) < b.to_float(d);
    }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

    /// "p/q" (or "p") for exact values; precision-tagged scientific form,
    /// e.g. "1.234568e-11@50", for floating values.
    std::string str() const {
        if (is_exact()) return exact().str();
        const Float& f = std::get<Float>(v_);
        return f.str(7, std::ios_base::scientific) + "@" + std::to_string(digits());
    }

private:
    struct from_float_tag {};
    Scalar(Float f, from_float_tag) : v_(std::move(f)) {}

    static void check_digits(int digits) {
        if (digits < kMinDigits)
            throw std::invalid_argument("Scalar: precision below 15 decimal digits");
    }

    struct add_op {
        template <class T> T operator()(const T& x, const T& y) const { return x + y; }
    };
    struct sub_op {
        template <class T> T operator()(const T& x, const T& y) const { return x - y; }
    };
    struct mul_op {
        template <class T> T operator()(const T& x, const T& y) const { return x * y; }
    };
    struct div_op {
        template <class T> T operator()(const T& x, const T& y) const { return x / y; }
    };

    template <class Op>
    static Scalar binop(const Scalar& a, const Scalar& b, Op op) {
        if (a.is_exact() && b.is_exact()) return Scalar(op(a.exact(), b.exact()));
        int d = std::max(a.digits(), b.digits());
        return floating(op(a.to_float(d), b.to_float(d)));
    }

    std::variant<Rational, Float> v_;
};

/// n-choose-k as an exact integer.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return Integer(0);
    if (k > n - k) k = n - k;
    Integer acc(1);
    for (long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

/// Falling factorial n(n-1)...(n-k+1).
inline Integer falling_factorial(long n, long k) {
    Integer acc(1);
    for (long i = 0; i < k; ++i) acc *= (n - i);
    return acc;
}

inline Integer factorial(long n) { return falling_factorial(n, n); }

}  // namespace hermops
