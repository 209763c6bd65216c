// Sparse bivariate polynomial ring over an exact or floating complex scalar.
// Variables are (x1, x2) in the cartesian basis and (a, abar) in the ladder basis;
// the basis tag travels with the value and mixed-basis arithmetic is rejected.
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tmoyal/rational.hpp"

namespace tmoyal {

enum class Basis { cartesian, ladder };

inline const char* basis_name(Basis b) { return b == Basis::cartesian ? "cartesian" : "ladder"; }

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class S>
class Polynomial2 {
public:
    using Key = std::pair<int, int>;  // exponents of (x1,x2) or (a,abar)
    using Terms = std::map<Key, S>;
    using traits = scalar_traits<S>;

    explicit Polynomial2(Basis b = Basis::cartesian) : basis_(b) {}

    static Polynomial2 zero(Basis b = Basis::cartesian) { return Polynomial2(b); }
    static Polynomial2 constant(const S& c, Basis b = Basis::cartesian) {
        Polynomial2 p(b);
        p.add_term(0, 0, c);
        return p;
    }
    static Polynomial2 monomial(int m, int n, const S& c, Basis b = Basis::cartesian) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative exponent");
        Polynomial2 p(b);
        p.add_term(m, n, c);
        return p;
    }
    // var index 1 = x1 (or a), 2 = x2 (or abar)
    static Polynomial2 variable(int var, Basis b = Basis::cartesian) {
        return monomial(var == 1 ? 1 : 0, var == 1 ? 0 : 1, traits::one(), b);
    }

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    double prune_threshold() const { return prune_; }
    void set_prune_threshold(double t) { prune_ = t; }

    int total_degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
        return d;
    }

    S coeff(int m, int n) const {
        auto it = terms_.find({m, n});
        return it == terms_.end() ? traits::zero() : it->second;
    }

    void add_term(int m, int n, const S& c) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative exponent");
        auto it = terms_.find({m, n});
        if (it == terms_.end()) {
            if (!traits::negligible(c, prune_)) terms_.emplace(Key{m, n}, c);
        } else {
            it->second += c;
            if (traits::negligible(it->second, prune_)) terms_.erase(it);
        }
    }

    friend Polynomial2 operator+(const Polynomial2& p, const Polynomial2& q) {
        p.require_same_basis(q);
        Polynomial2 r = p;
        for (const auto& [key, c] : q.terms_) r.add_term(key.first, key.second, c);
        return r;
    }
    friend Polynomial2 operator-(const Polynomial2& p, const Polynomial2& q) {
        p.require_same_basis(q);
        Polynomial2 r = p;
        for (const auto& [key, c] : q.terms_) r.add_term(key.first, key.second, -c);
        return r;
    }
    Polynomial2 operator-() const {
        Polynomial2 r(basis_);
        r.prune_ = prune_;
        for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
        return r;
    }
    friend Polynomial2 operator*(const Polynomial2& p, const Polynomial2& q) {
        p.require_same_basis(q);
        Polynomial2 r(p.basis_);
        r.prune_ = p.prune_;
        for (const auto& [kp, cp] : p.terms_)
            for (const auto& [kq, cq] : q.terms_)
                r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
        return r;
    }
    friend Polynomial2 operator*(const S& s, const Polynomial2& p) { return p.scaled(s); }
    friend Polynomial2 operator*(const Polynomial2& p, const S& s) { return p.scaled(s); }

    Polynomial2& operator+=(const Polynomial2& q) { return *this = *this + q; }
    Polynomial2& operator-=(const Polynomial2& q) { return *this = *this - q; }
    Polynomial2& operator*=(const Polynomial2& q) { return *this = *this * q; }

    Polynomial2 scaled(const S& s) const {
        Polynomial2 r(basis_);
        r.prune_ = prune_;
        if (traits::negligible(s, r.prune_)) return r;
        for (const auto& [key, c] : terms_) r.add_term(key.first, key.second, c * s);
        return r;
    }

    Polynomial2 pow(unsigned e) const {
        Polynomial2 r = constant(traits::one(), basis_);
        r.prune_ = prune_;
        Polynomial2 base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    // Formal partial derivative w.r.t. var (1 or 2), applied `order` times.
    Polynomial2 derivative(int var, int order = 1) const {
        if (var != 1 && var != 2) throw std::invalid_argument("variable index must be 1 or 2");
        if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
        Polynomial2 r = *this;
        for (int o = 0; o < order; ++o) {
            Polynomial2 d(basis_);
            d.prune_ = prune_;
            for (const auto& [key, c] : r.terms_) {
                int e = (var == 1) ? key.first : key.second;
                if (e == 0) continue;
                S cc = c * traits::from_rational(Rational(e));
                if (var == 1)
                    d.add_term(key.first - 1, key.second, cc);
                else
                    d.add_term(key.first, key.second - 1, cc);
            }
            r = std::move(d);
        }
        return r;
    }

    template <class P>
    P evaluate(const P& v1, const P& v2) const {
        P acc{};
        std::vector<P> pow1{P{1}}, pow2{P{1}};
        for (const auto& [key, c] : terms_) {
            while ((int)pow1.size() <= key.first) pow1.push_back(pow1.back() * v1);
            while ((int)pow2.size() <= key.second) pow2.push_back(pow2.back() * v2);
            if constexpr (std::is_same_v<P, ExactComplex>)
                acc += c * pow1[key.first] * pow2[key.second];
            else
                acc += traits::to_complex(c) * pow1[key.first] * pow2[key.second];
        }
        return acc;
    }

    // Rewrites between the bases using a = (x1 + i x2)/sqrt2, abar = (x1 - i x2)/sqrt2.
    // Exact (and an involution) over ExactComplex thanks to the sqrt2 extension.
    Polynomial2 change_basis() const {
        const S half_rt2 = traits::from_qsqrt2(QSqrt2::inv_sqrt2());
        const S i = traits::imag_unit();
        Basis target = (basis_ == Basis::cartesian) ? Basis::ladder : Basis::cartesian;
        Polynomial2 v1(target), v2(target);
        if (basis_ == Basis::cartesian) {
            // x1 -> (a + abar)/sqrt2,  x2 -> i(abar - a)/sqrt2
            v1 = (Polynomial2::variable(1, target) + Polynomial2::variable(2, target)).scaled(half_rt2);
            v2 = (Polynomial2::variable(2, target) - Polynomial2::variable(1, target))
                     .scaled(i * half_rt2);
        } else {
            // a -> (x1 + i x2)/sqrt2,  abar -> (x1 - i x2)/sqrt2
            Polynomial2 x1 = Polynomial2::variable(1, target);
            Polynomial2 x2s = Polynomial2::variable(2, target).scaled(i);
            v1 = (x1 + x2s).scaled(half_rt2);
            v2 = (x1 - x2s).scaled(half_rt2);
        }
        Polynomial2 r(target);
        r.prune_ = prune_;
        for (const auto& [key, c] : terms_) r += (v1.pow(key.first) * v2.pow(key.second)).scaled(c);
        return r;
    }

    // Max modulus over stored coefficients; basis-independent within a fixed basis.
    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [key, c] : terms_) m = std::max(m, traits::abs_value(c));
        return m;
    }

    friend bool operator==(const Polynomial2& p, const Polynomial2& q) {
        return p.basis_ == q.basis_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const Polynomial2& p, const Polynomial2& q) { return !(p == q); }

    void require_same_basis(const Polynomial2& q) const {
        if (basis_ != q.basis_)
            throw BasisMismatch(std::string("basis mismatch: ") + basis_name(basis_) + " vs " +
                                basis_name(q.basis_));
    }

private:
    Basis basis_;
    Terms terms_;
    double prune_ = 1e-14;  // ignored in exact mode
};

using PolyExact = Polynomial2<ExactComplex>;
using PolyFloat = Polynomial2<std::complex<double>>;

inline PolyFloat to_float(const PolyExact& p) {
    PolyFloat r(p.basis());
    for (const auto& [key, c] : p.terms()) r.add_term(key.first, key.second, c.to_complex());
    return r;
}

}  // namespace tmoyal
