// Expression text <-> Polynomial2.
//
// Grammar (whitespace free between tokens):
//   expr   := term (("+"|"-") term)*
//   term   := unary ("*" unary)*
//   unary  := "-"? factor
//   factor := base ("^" UINT)?
//   base   := VAR | NUM | "i" | "sqrt2" | "(" expr ")"
//   VAR    := "x1" | "x2" | "a" | "abar"        (checked against the basis tag)
//   NUM    := UINT | UINT "/" UINT | DECIMAL    (DECIMAL may carry e[+-]dd)
//
// '^' binds tighter than '*'; '-' is unary prefix and left-associative binary.
// render() emits the canonical form (descending total degree, then descending
// first exponent) and parse(render(p)) == p.
#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "tmoyal/polynomial.hpp"

namespace tmoyal {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error("parse error at offset " + std::to_string(off) + ": " + msg),
          offset(off) {}
};

namespace detail {

template <class S>
struct NumberBuilder;

template <>
struct NumberBuilder<ExactComplex> {
    static ExactComplex from_fraction(long long p, long long q, std::size_t off) {
        if (q == 0) throw ParseError(off, "zero denominator");
        return ExactComplex(Rational(p, q));
    }
    // mantissa digits with an implied decimal point: value = digits * 10^exp10
    static ExactComplex from_decimal(std::string_view, long long digits, int exp10,
                                     std::size_t off) {
        Rational r(digits);
        try {
            r = r * Rational(10).pow_int(exp10 >= 0 ? exp10 : 0);
            if (exp10 < 0) r = r / Rational(10).pow_int(-exp10);
        } catch (const OverflowError&) {
            throw ParseError(off, "decimal literal exceeds exact range");
        }
        return ExactComplex(r);
    }
};

template <>
struct NumberBuilder<std::complex<double>> {
    static std::complex<double> from_fraction(long long p, long long q, std::size_t off) {
        if (q == 0) throw ParseError(off, "zero denominator");
        return {static_cast<double>(p) / static_cast<double>(q), 0.0};
    }
    static std::complex<double> from_decimal(std::string_view text, long long, int, std::size_t) {
        return {std::strtod(std::string(text).c_str(), nullptr), 0.0};
    }
};

template <class S>
class ExprParser {
public:
    ExprParser(std::string_view src, Basis basis) : src_(src), basis_(basis) {}

    Polynomial2<S> run() {
        skip_ws();
        Polynomial2<S> p = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    using traits = scalar_traits<S>;
    std::string_view src_;
    Basis basis_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return eof() ? '\0' : src_[pos_]; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Polynomial2<S> parse_expr() {
        Polynomial2<S> acc = parse_term();
        for (;;) {
            if (accept('+'))
                acc += parse_term();
            else if (accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial2<S> parse_term() {
        Polynomial2<S> acc = parse_unary();
        while (accept('*')) acc *= parse_unary();
        return acc;
    }

    Polynomial2<S> parse_unary() {
        if (accept('-')) return -parse_factor();
        return parse_factor();
    }

    Polynomial2<S> parse_factor() {
        Polynomial2<S> b = parse_base();
        if (accept('^')) {
            std::size_t at = pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(at, "exponent must be a non-negative integer");
            long long e = parse_uint();
            skip_ws();
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    Polynomial2<S> parse_base() {
        if (eof()) throw ParseError(pos_, "unexpected end of input");
        char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            Polynomial2<S> inner = parse_expr();
            if (!accept(')')) throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    long long parse_uint() {
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        long long v = 0;
        auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (res.ec != std::errc())
            throw ParseError(start, "integer literal out of range");
        return v;
    }

    // true when an 'e'/'E' at the cursor starts a well-formed exponent suffix
    bool at_exponent() const {
        if (eof() || (peek() != 'e' && peek() != 'E')) return false;
        std::size_t j = pos_ + 1;
        if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
        return j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]));
    }

    Polynomial2<S> parse_number() {
        std::size_t start = pos_;
        long long intpart = parse_uint();
        if (peek() == '.' || at_exponent()) {
            long long frac = 0;
            int fdigits = 0;
            if (peek() == '.') {
                ++pos_;
                std::size_t fstart = pos_;
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError(pos_, "expected digits after decimal point");
                frac = parse_uint();
                fdigits = static_cast<int>(pos_ - fstart);
            }
            int exp10 = -fdigits;
            if (at_exponent()) {
                ++pos_;
                int esign = 1;
                if (peek() == '+') ++pos_;
                else if (peek() == '-') {
                    esign = -1;
                    ++pos_;
                }
                exp10 += esign * static_cast<int>(parse_uint());
            }
            __int128 digits = static_cast<__int128>(intpart);
            for (int k = 0; k < fdigits; ++k) digits *= 10;
            digits += frac;
            if (digits > INT64_MAX) throw ParseError(start, "decimal literal out of range");
            std::string_view text = src_.substr(start, pos_ - start);
            skip_ws();
            return Polynomial2<S>::constant(
                NumberBuilder<S>::from_decimal(text, static_cast<long long>(digits), exp10, start),
                basis_);
        }
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError(pos_, "expected denominator");
            long long q = parse_uint();
            skip_ws();
            return Polynomial2<S>::constant(NumberBuilder<S>::from_fraction(intpart, q, start),
                                            basis_);
        }
        return Polynomial2<S>::constant(NumberBuilder<S>::from_fraction(intpart, 1, start), basis_);
    }

    Polynomial2<S> parse_word() {
        std::size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())))) ++pos_;
        std::string_view w = src_.substr(start, pos_ - start);
        skip_ws();
        if (w == "i") return Polynomial2<S>::constant(traits::imag_unit(), basis_);
        if (w == "sqrt2")
            return Polynomial2<S>::constant(traits::from_qsqrt2(QSqrt2::sqrt2()), basis_);
        if (w == "x1" || w == "x2") {
            if (basis_ != Basis::cartesian)
                throw ParseError(start, std::string(w) + " is not a ladder-basis variable");
            return Polynomial2<S>::variable(w == "x1" ? 1 : 2, basis_);
        }
        if (w == "a" || w == "abar") {
            if (basis_ != Basis::ladder)
                throw ParseError(start, std::string(w) + " is not a cartesian-basis variable");
            return Polynomial2<S>::variable(w == "a" ? 1 : 2, basis_);
        }
        throw ParseError(start, "unknown symbol '" + std::string(w) + "'");
    }
};

inline std::string fmt_double(double v) {
    if (v == static_cast<long long>(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- canonical coefficient rendering -------------------------------------

inline std::string qsqrt2_str(const QSqrt2& q, bool* compound) {
    *compound = false;
    if (q.b.is_zero()) return q.a.str();
    std::string rt2 = (q.b == Rational(1))    ? "sqrt2"
                      : (q.b == Rational(-1)) ? "-sqrt2"
                                              : q.b.str() + "*sqrt2";
    if (q.a.is_zero()) return rt2;
    *compound = true;
    if (q.b.is_negative()) {
        QSqrt2 nb{Rational(0), -q.b};
        bool unused;
        return q.a.str() + "-" + qsqrt2_str(nb, &unused);
    }
    return q.a.str() + "+" + rt2;
}

struct CoeffText {
    std::string text;  // rendering of |coefficient| (without the leading sign)
    bool negative;     // true when the term should join with " - "
    bool is_one;       // |coefficient| == 1 (omit in front of a monomial)
    bool compound;     // needs parentheses when multiplying a monomial
};

inline CoeffText coeff_text(const ExactComplex& c) {
    CoeffText out{};
    if (c.im.is_zero()) {
        ExactComplex v = c;
        double d = c.re.to_double();
        if (d < 0) {
            out.negative = true;
            v = -v;
        }
        out.text = qsqrt2_str(v.re, &out.compound);
        out.is_one = (v == ExactComplex(1));
        return out;
    }
    if (c.re.is_zero()) {
        ExactComplex v = c;
        if (c.im.to_double() < 0) {
            out.negative = true;
            v = -v;
        }
        bool comp = false;
        std::string im = qsqrt2_str(v.im, &comp);
        if (v.im == QSqrt2(Rational(1)))
            out.text = "i";
        else
            out.text = (comp ? "(" + im + ")" : im) + "*i";
        return out;
    }
    bool comp = false;
    std::string re = qsqrt2_str(c.re, &comp);
    std::string res = comp ? "(" + re + ")" : re;
    ExactComplex imabs = c;
    bool imneg = c.im.to_double() < 0;
    if (imneg) imabs = ExactComplex(c.re, -c.im);
    std::string im = qsqrt2_str(imabs.im, &comp);
    std::string ims = (imabs.im == QSqrt2(Rational(1))) ? "i" : (comp ? "(" + im + ")" : im) + "*i";
    out.text = "(" + res + (imneg ? "-" : "+") + ims + ")";
    out.compound = false;  // already parenthesised
    return out;
}

inline CoeffText coeff_text(const std::complex<double>& c) {
    CoeffText out{};
    if (c.imag() == 0.0) {
        double v = c.real();
        out.negative = v < 0;
        out.text = fmt_double(std::abs(v));
        out.is_one = std::abs(v) == 1.0;
        return out;
    }
    if (c.real() == 0.0) {
        double v = c.imag();
        out.negative = v < 0;
        out.text = (std::abs(v) == 1.0) ? "i" : fmt_double(std::abs(v)) + "*i";
        return out;
    }
    double ia = std::abs(c.imag());
    out.text = "(" + fmt_double(c.real()) + (c.imag() < 0 ? "-" : "+") +
               (ia == 1.0 ? "i" : fmt_double(ia) + "*i") + ")";
    return out;
}

}  // namespace detail

template <class S>
Polynomial2<S> parse_expression(std::string_view src, Basis basis) {
    return detail::ExprParser<S>(src, basis).run();
}

inline PolyExact parse_exact(std::string_view src, Basis basis = Basis::cartesian) {
    return parse_expression<ExactComplex>(src, basis);
}
inline PolyFloat parse_float(std::string_view src, Basis basis = Basis::cartesian) {
    return parse_expression<std::complex<double>>(src, basis);
}

template <class S>
std::string render(const Polynomial2<S>& p) {
    if (p.is_zero()) return "0";
    const char* v1 = p.basis() == Basis::cartesian ? "x1" : "a";
    const char* v2 = p.basis() == Basis::cartesian ? "x2" : "abar";

    std::vector<typename Polynomial2<S>::Key> keys;
    keys.reserve(p.term_count());
    for (const auto& [key, c] : p.terms()) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });

    std::string out;
    bool first = true;
    for (const auto& key : keys) {
        auto ct = detail::coeff_text(p.coeff(key.first, key.second));
        std::string mono;
        if (key.first > 0) {
            mono = v1;
            if (key.first > 1) mono += "^" + std::to_string(key.first);
        }
        if (key.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += v2;
            if (key.second > 1) mono += "^" + std::to_string(key.second);
        }
        std::string body;
        if (mono.empty())
            body = ct.compound ? "(" + ct.text + ")" : ct.text;
        else if (ct.is_one)
            body = mono;
        else
            body = (ct.compound ? "(" + ct.text + ")" : ct.text) + "*" + mono;

        if (first) {
            out += (ct.negative ? "-" : "") + body;
            first = false;
        } else {
            out += (ct.negative ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace tmoyal
