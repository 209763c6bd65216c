// Exact scalar tower for the polynomial engine:
// Rational (checked int64) -> QSqrt2 = Q + Q*sqrt2 -> ExactComplex = QSqrt2 + i*QSqrt2.
// The sqrt2 extension is what keeps the ladder-basis calculus exact.
#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tmoyal {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("rational arithmetic overflow");
    return static_cast<long long>(v);
}

}  // namespace detail

// Reduced fraction, den > 0. All arithmetic goes through __int128 and throws
// OverflowError instead of silently wrapping.
struct Rational {
    long long num{0};
    long long den{1};

    constexpr Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) { assign(n, d); }

    void assign(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = detail::narrow(n);
        den = detail::narrow(d);
    }

    bool is_zero() const { return num == 0; }
    bool is_negative() const { return num < 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Rational r;
        r.assign((__int128)a.num * b.den + (__int128)b.num * a.den, (__int128)a.den * b.den);
        return r;
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        Rational r;
        r.assign((__int128)a.num * b.den - (__int128)b.num * a.den, (__int128)a.den * b.den);
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Rational r;
        r.assign((__int128)a.num * b.num, (__int128)a.den * b.den);
        return r;
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        Rational r;
        r.assign((__int128)a.num * b.den, (__int128)a.den * b.num);
        return r;
    }
    Rational operator-() const {
        Rational r;
        r.num = -num;
        r.den = den;
        return r;
    }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }

    Rational pow_int(int e) const {
        if (e < 0) return Rational(1) / pow_int(-e);
        Rational r(1), base = *this;
        while (e) {
            if (e & 1) r *= base;
            base = (e > 1) ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        std::string s = std::to_string(num);
        if (den != 1) s += "/" + std::to_string(den);
        return s;
    }
};

// a + b*sqrt(2) with a, b rational. Closed under ring ops and division.
struct QSqrt2 {
    Rational a;  // rational part
    Rational b;  // sqrt2 part

    QSqrt2() = default;
    QSqrt2(Rational ra) : a(ra) {}
    QSqrt2(long long n) : a(n) {}
    QSqrt2(Rational ra, Rational rb) : a(ra), b(rb) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }
    static QSqrt2 inv_sqrt2() { return QSqrt2(Rational(0), Rational(1, 2)); }  // 1/sqrt2 = sqrt2/2

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    double to_double() const { return a.to_double() + b.to_double() * 1.4142135623730950488016887; }

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return {x.a * y.a + Rational(2) * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    QSqrt2 operator-() const { return {-a, -b}; }

    friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) {
        // multiply by conjugate (a - b*sqrt2); norm a^2 - 2 b^2 is nonzero for y != 0
        Rational n = y.a * y.a - Rational(2) * (y.b * y.b);
        if (n.is_zero()) throw std::domain_error("division by zero in Q(sqrt2)");
        QSqrt2 conj{y.a, -y.b};
        QSqrt2 num = x * conj;
        return {num.a / n, num.b / n};
    }

    QSqrt2& operator+=(const QSqrt2& y) { return *this = *this + y; }
    QSqrt2& operator-=(const QSqrt2& y) { return *this = *this - y; }
    QSqrt2& operator*=(const QSqrt2& y) { return *this = *this * y; }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }
};

// Exact complex scalar over Q(sqrt2).
struct ExactComplex {
    QSqrt2 re;
    QSqrt2 im;

    ExactComplex() = default;
    ExactComplex(QSqrt2 r) : re(r) {}
    ExactComplex(QSqrt2 r, QSqrt2 i) : re(r), im(i) {}
    ExactComplex(long long n) : re(QSqrt2(n)) {}
    ExactComplex(Rational r) : re(QSqrt2(r)) {}

    static ExactComplex i() { return {QSqrt2(Rational(0)), QSqrt2(Rational(1))}; }
    static ExactComplex from_rational(Rational r) { return ExactComplex(r); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    ExactComplex conj() const { return {re, -im}; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend ExactComplex operator+(const ExactComplex& x, const ExactComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend ExactComplex operator-(const ExactComplex& x, const ExactComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend ExactComplex operator*(const ExactComplex& x, const ExactComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    ExactComplex operator-() const { return {-re, -im}; }

    friend ExactComplex operator/(const ExactComplex& x, const ExactComplex& y) {
        QSqrt2 n = y.re * y.re + y.im * y.im;
        if (n.is_zero()) throw std::domain_error("exact complex division by zero");
        ExactComplex num = x * y.conj();
        return {num.re / n, num.im / n};
    }

    ExactComplex& operator+=(const ExactComplex& y) { return *this = *this + y; }
    ExactComplex& operator-=(const ExactComplex& y) { return *this = *this - y; }
    ExactComplex& operator*=(const ExactComplex& y) { return *this = *this * y; }

    friend bool operator==(const ExactComplex& x, const ExactComplex& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ExactComplex& x, const ExactComplex& y) { return !(x == y); }
};

// Uniform construction/inspection hooks so the polynomial and star engines can be
// written once for exact and float coefficients.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
    static constexpr bool exact = true;
    static ExactComplex zero() { return ExactComplex(); }
    static ExactComplex one() { return ExactComplex(1); }
    static ExactComplex imag_unit() { return ExactComplex::i(); }
    static ExactComplex from_rational(const Rational& r) { return ExactComplex(r); }
    static ExactComplex from_qsqrt2(const QSqrt2& q) { return ExactComplex(q); }
    static bool negligible(const ExactComplex& s, double) { return s.is_zero(); }
    static double abs_value(const ExactComplex& s) { return std::abs(s.to_complex()); }
    static std::complex<double> to_complex(const ExactComplex& s) { return s.to_complex(); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> imag_unit() { return {0.0, 1.0}; }
    static std::complex<double> from_rational(const Rational& r) { return {r.to_double(), 0.0}; }
    static std::complex<double> from_qsqrt2(const QSqrt2& q) { return {q.to_double(), 0.0}; }
    static bool negligible(const std::complex<double>& s, double thresh) {
        return std::abs(s) <= thresh;
    }
    static double abs_value(const std::complex<double>& s) { return std::abs(s); }
    static std::complex<double> to_complex(const std::complex<double>& s) { return s; }
};

}  // namespace tmoyal
