// Position-dependent Moyal star product on Polynomial2, in two published forms:
//   determinant mode — the n-th bidifferential term is multiplied by (theta*einv/2)^n
//                      after the pointwise merge (the e-factors are not differentiated),
//   vielbein mode    — honest operator powers of X_a = e_a^mu d_mu in the exponential
//                      series (derivatives act on the e-factors too).
// The two agree at bidifferential order <= 1 and differ from order 2 on when the
// twist is nonzero; star_mode_gap() measures that difference.
#pragma once

#include "tmoyal/polynomial.hpp"

namespace tmoyal {

enum class StarMode { determinant, vielbein };

// theta > 0 plus the two twist coefficients omega_12^1 (multiplies x2 in 1/e)
// and omega_12^2 (multiplies x1). Stored as rationals so the exact engine can
// use them; doubles are derived views.
struct DeformationParams {
    Rational theta_q{1, 1};
    Rational om1_q{0, 1};  // omega_12^1
    Rational om2_q{0, 1};  // omega_12^2

    DeformationParams() = default;
    DeformationParams(Rational th, Rational o1, Rational o2) : theta_q(th), om1_q(o1), om2_q(o2) {
        if (!(Rational(0) < theta_q)) throw std::invalid_argument("theta must be > 0");
    }
    static DeformationParams from_doubles(double th, double o1, double o2) {
        auto to_q = [](double v) {
            // CLI inputs are finite decimals; 1e9 denominator keeps them exact enough
            // for the float paths and representable for the exact ones.
            return Rational(static_cast<long long>(std::llround(v * 1e9)), 1000000000LL);
        };
        return DeformationParams(to_q(th), to_q(o1), to_q(o2));
    }

    double theta() const { return theta_q.to_double(); }
    double om1() const { return om1_q.to_double(); }
    double om2() const { return om2_q.to_double(); }

    // 1/e = 1 + om1*x2 - om2*x1; in the ladder basis 1 - omega*a - conj(omega)*abar
    // with omega = (om2 + i*om1)/sqrt2.
    template <class S>
    Polynomial2<S> einv(Basis b) const {
        using T = scalar_traits<S>;
        Polynomial2<S> p = Polynomial2<S>::constant(T::one(), b);
        if (b == Basis::cartesian) {
            p.add_term(0, 1, T::from_rational(om1_q));
            p.add_term(1, 0, -T::from_rational(om2_q));
        } else {
            const S inv_rt2 = T::from_qsqrt2(QSqrt2::inv_sqrt2());
            S omega = (T::from_rational(om2_q) + T::imag_unit() * T::from_rational(om1_q)) * inv_rt2;
            S omega_bar =
                (T::from_rational(om2_q) - T::imag_unit() * T::from_rational(om1_q)) * inv_rt2;
            p.add_term(1, 0, -omega);
            p.add_term(0, 1, -omega_bar);
        }
        return p;
    }

    ExactComplex omega_exact() const {
        ExactComplex num = ExactComplex(om2_q) + ExactComplex::i() * ExactComplex(om1_q);
        return num * ExactComplex(QSqrt2::inv_sqrt2());
    }
    std::complex<double> omega() const { return omega_exact().to_complex(); }
};

namespace stardetail {

inline Rational binom_q(int n, int k) {
    Rational r(1);
    for (int j = 1; j <= k; ++j) r = r * Rational(n - k + j) / Rational(j);
    return r;
}

// derivative table D[i][j] = d1^i d2^j p for i+j <= order
template <class S>
std::vector<std::vector<Polynomial2<S>>> derivative_table(const Polynomial2<S>& p, int order) {
    std::vector<std::vector<Polynomial2<S>>> D(order + 1);
    for (int i = 0; i <= order; ++i) D[i].resize(order + 1 - i, Polynomial2<S>(p.basis()));
    D[0][0] = p;
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (i == 0 && j == 0) continue;
            D[i][j] = (i > 0) ? D[i - 1][j].derivative(1) : D[i][j - 1].derivative(2);
        }
    return D;
}

template <class S>
Polynomial2<S> star_determinant(const Polynomial2<S>& f, const Polynomial2<S>& g,
                                const DeformationParams& d) {
    using T = scalar_traits<S>;
    const Basis b = f.basis();
    const int N = std::min(f.total_degree(), g.total_degree());
    auto Df = derivative_table(f, N);
    auto Dg = derivative_table(g, N);

    // cartesian: prefactor (i theta/2)^n; ladder: (theta/2)^n — same contraction
    // pattern, related exactly by the basis change.
    const S half_theta = T::from_rational(d.theta_q * Rational(1, 2));
    const S step = (b == Basis::cartesian) ? T::imag_unit() * half_theta : half_theta;

    Polynomial2<S> einv = d.template einv<S>(b);
    Polynomial2<S> result = f * g;
    Polynomial2<S> einv_pow = Polynomial2<S>::constant(T::one(), b);
    S step_pow = T::one();
    for (int n = 1; n <= N; ++n) {
        einv_pow *= einv;
        step_pow = step_pow * step;
        Polynomial2<S> inner(b);
        for (int k = 0; k <= n; ++k) {
            Rational c = binom_q(n, k);
            if ((n - k) % 2 != 0) c = -c;
            inner += (Df[k][n - k] * Dg[n - k][k]).scaled(T::from_rational(c));
        }
        if (inner.is_zero()) continue;
        Rational fact(1);
        for (int j = 2; j <= n; ++j) fact = fact * Rational(j);
        result += (einv_pow * inner).scaled(step_pow * T::from_rational(Rational(1) / fact));
    }
    return result;
}

// X_1 = (1 + om1 x2) d1 + om2 x2 d2 ;  X_2 = -om1 x1 d1 + (1 - om2 x1) d2
template <class S>
Polynomial2<S> apply_vector_field(int a, const Polynomial2<S>& p, const DeformationParams& d) {
    using T = scalar_traits<S>;
    const Basis b = Basis::cartesian;
    Polynomial2<S> d1 = p.derivative(1), d2 = p.derivative(2);
    Polynomial2<S> r(b);
    if (a == 1) {
        Polynomial2<S> c1 = Polynomial2<S>::constant(T::one(), b);
        c1.add_term(0, 1, T::from_rational(d.om1_q));
        r = c1 * d1 + Polynomial2<S>::monomial(0, 1, T::from_rational(d.om2_q), b) * d2;
    } else {
        Polynomial2<S> c2 = Polynomial2<S>::constant(T::one(), b);
        c2.add_term(1, 0, -T::from_rational(d.om2_q));
        r = Polynomial2<S>::monomial(1, 0, -T::from_rational(d.om1_q), b) * d1 + c2 * d2;
    }
    return r;
}

template <class S>
void vielbein_descend(const Polynomial2<S>& fcur, const Polynomial2<S>& gcur, int depth,
                      int max_depth, int sign, const DeformationParams& d,
                      std::vector<Polynomial2<S>>& order_sums) {
    if (sign > 0)
        order_sums[depth] += fcur * gcur;
    else
        order_sums[depth] -= fcur * gcur;
    if (depth == max_depth) return;
    if (fcur.is_zero() || gcur.is_zero()) return;
    vielbein_descend(apply_vector_field(1, fcur, d), apply_vector_field(2, gcur, d), depth + 1,
                     max_depth, sign, d, order_sums);
    vielbein_descend(apply_vector_field(2, fcur, d), apply_vector_field(1, gcur, d), depth + 1,
                     max_depth, -sign, d, order_sums);
}

template <class S>
Polynomial2<S> star_vielbein(const Polynomial2<S>& f, const Polynomial2<S>& g,
                             const DeformationParams& d, int max_order) {
    using T = scalar_traits<S>;
    const int N = (max_order >= 0) ? max_order : std::min(f.total_degree(), g.total_degree());
    std::vector<Polynomial2<S>> order_sums(N + 1, Polynomial2<S>(Basis::cartesian));
    vielbein_descend(f, g, 0, N, +1, d, order_sums);
    const S step = T::imag_unit() * T::from_rational(d.theta_q * Rational(1, 2));
    Polynomial2<S> result(Basis::cartesian);
    S step_pow = T::one();
    Rational fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            step_pow = step_pow * step;
            fact = fact * Rational(n);
        }
        result += order_sums[n].scaled(step_pow * T::from_rational(Rational(1) / fact));
    }
    return result;
}

}  // namespace stardetail

// The exponential bidifferential series truncates at min(deg f, deg g) in
// determinant mode; vielbein mode does not self-terminate (X_a preserves degree
// through the twist), so it is cut at the same order unless max_order says
// otherwise.
template <class S>
Polynomial2<S> star_product(const Polynomial2<S>& f, const Polynomial2<S>& g,
                            const DeformationParams& d, StarMode mode = StarMode::determinant,
                            int max_order = -1) {
    f.require_same_basis(g);
    if (mode == StarMode::determinant) return stardetail::star_determinant(f, g, d);
    if (f.basis() == Basis::ladder) {
        Polynomial2<S> r = stardetail::star_vielbein(f.change_basis(), g.change_basis(), d, max_order);
        return r.change_basis();
    }
    return stardetail::star_vielbein(f, g, d, max_order);
}

template <class S>
Polynomial2<S> star_commutator(const Polynomial2<S>& f, const Polynomial2<S>& g,
                               const DeformationParams& d, StarMode mode = StarMode::determinant) {
    return star_product(f, g, d, mode) - star_product(g, f, d, mode);
}

template <class S>
Polynomial2<S> star_anticommutator(const Polynomial2<S>& f, const Polynomial2<S>& g,
                                   const DeformationParams& d,
                                   StarMode mode = StarMode::determinant) {
    return star_product(f, g, d, mode) + star_product(g, f, d, mode);
}

template <class S>
Polynomial2<S> associator(const Polynomial2<S>& f, const Polynomial2<S>& g, const Polynomial2<S>& h,
                          const DeformationParams& d, StarMode mode = StarMode::determinant) {
    return star_product(star_product(f, g, d, mode), h, d, mode) -
           star_product(f, star_product(g, h, d, mode), d, mode);
}

// [x^mu, [x^nu, x^rho]] + cyclic, for every (mu,nu,rho) in {1,2}^3, through the
// star engine. Returns the max coefficient norm over all index triples.
template <class S>
double jacobi_residual(const DeformationParams& d, StarMode mode = StarMode::determinant) {
    using P = Polynomial2<S>;
    auto x = [](int mu) { return P::variable(mu, Basis::cartesian); };
    double worst = 0.0;
    for (int mu = 1; mu <= 2; ++mu)
        for (int nu = 1; nu <= 2; ++nu)
            for (int rho = 1; rho <= 2; ++rho) {
                P j = star_commutator(x(mu), star_commutator(x(nu), x(rho), d, mode), d, mode) +
                      star_commutator(x(rho), star_commutator(x(mu), x(nu), d, mode), d, mode) +
                      star_commutator(x(nu), star_commutator(x(rho), x(mu), d, mode), d, mode);
                worst = std::max(worst, j.max_abs_coeff());
            }
    return worst;
}

// Structure coefficients of [X_1, X_2] read off by applying the composed
// commutator to probe polynomials. The constant parts reproduce
// (-2 om1, -2 om2); the position-dependent remainder is O(omega^2) and its
// norm is reported rather than hidden.
struct VielbeinBracket {
    double c1 = 0.0;               // constant part of the d1 coefficient
    double c2 = 0.0;               // constant part of the d2 coefficient
    double linear_remainder = 0.0; // norm of the position-dependent remainder
    double quadratic_probe = 0.0;  // residual of first-order action on quadratics
};

inline VielbeinBracket vielbein_bracket(const DeformationParams& d) {
    using P = PolyExact;
    auto bk = [&](const P& p) {
        return stardetail::apply_vector_field(1, stardetail::apply_vector_field(2, p, d), d) -
               stardetail::apply_vector_field(2, stardetail::apply_vector_field(1, p, d), d);
    };
    P x1 = P::variable(1), x2 = P::variable(2);
    P coeff1 = bk(x1);  // coefficient polynomial of d1
    P coeff2 = bk(x2);  // coefficient polynomial of d2
    VielbeinBracket out;
    out.c1 = coeff1.coeff(0, 0).to_complex().real();
    out.c2 = coeff2.coeff(0, 0).to_complex().real();
    P rem1 = coeff1 - P::constant(coeff1.coeff(0, 0));
    P rem2 = coeff2 - P::constant(coeff2.coeff(0, 0));
    out.linear_remainder = std::max(rem1.max_abs_coeff(), rem2.max_abs_coeff());
    // a vector-field commutator is first order: on quadratics it must act as
    // coeff1*d1 + coeff2*d2 exactly
    for (const P& q : {x1 * x1, x1 * x2, x2 * x2}) {
        P expect = coeff1 * q.derivative(1) + coeff2 * q.derivative(2);
        out.quadratic_probe = std::max(out.quadratic_probe, (bk(q) - expect).max_abs_coeff());
    }
    return out;
}

enum class Side { left, right };

// Closed forms x1*f ± (i theta/2) einv d2 f and x2*f ∓ (i theta/2) einv d1 f;
// must coincide with the determinant-mode engine exactly.
template <class S>
Polynomial2<S> x_action_closed_form(int mu, const Polynomial2<S>& f, Side side,
                                    const DeformationParams& d) {
    using T = scalar_traits<S>;
    if (f.basis() != Basis::cartesian)
        throw BasisMismatch("x_action_closed_form expects a cartesian operand");
    Polynomial2<S> xmu = Polynomial2<S>::variable(mu, Basis::cartesian);
    Polynomial2<S> einv = d.template einv<S>(Basis::cartesian);
    S half = T::imag_unit() * T::from_rational(d.theta_q * Rational(1, 2));
    if (side == Side::right) half = -half;
    if (mu == 1) return xmu * f + (einv * f.derivative(2)).scaled(half);
    return xmu * f - (einv * f.derivative(1)).scaled(half);
}

// The explicit second-order operators mu_1 (left) and mu_2 (right) assembled
// verbatim, acting as (1/2) mu f. They carry constant -(theta^2/4) omega terms
// that the engine product with H = (x1^2+x2^2)/2 does not produce; the two
// coincide exactly only at omega = 0 and the gap is a measured diagnostic.
template <class S>
Polynomial2<S> hamiltonian_action(const Polynomial2<S>& f, Side side, const DeformationParams& d) {
    using T = scalar_traits<S>;
    if (f.basis() != Basis::cartesian)
        throw BasisMismatch("hamiltonian_action expects a cartesian operand");
    const Basis b = Basis::cartesian;
    Polynomial2<S> einv = d.template einv<S>(b);
    Polynomial2<S> r2 = Polynomial2<S>::monomial(2, 0, T::one(), b);
    r2.add_term(0, 2, T::one());

    const S i_theta = T::imag_unit() * T::from_rational(d.theta_q);
    const Rational th2_4 = d.theta_q * d.theta_q * Rational(1, 4);

    // i theta einv x^1 - (theta^2/4) om1   and   i theta einv x^2 - (theta^2/4) om2
    Polynomial2<S> A = (einv * Polynomial2<S>::variable(1, b)).scaled(i_theta);
    A.add_term(0, 0, -T::from_rational(th2_4 * d.om1_q));
    Polynomial2<S> B = (einv * Polynomial2<S>::variable(2, b)).scaled(i_theta);
    B.add_term(0, 0, -T::from_rational(th2_4 * d.om2_q));

    Polynomial2<S> lap = f.derivative(1, 2) + f.derivative(2, 2);
    Polynomial2<S> acc = r2 * f;
    Polynomial2<S> first = A * f.derivative(2) - B * f.derivative(1);
    if (side == Side::right) first = -first;
    acc += first;
    acc -= (einv * einv * lap).scaled(T::from_rational(th2_4));
    return acc.scaled(T::from_rational(Rational(1, 2)));
}

template <class S>
Polynomial2<S> hamiltonian_polynomial(Basis b = Basis::cartesian) {
    using T = scalar_traits<S>;
    Polynomial2<S> h(Basis::cartesian);
    h.add_term(2, 0, T::from_rational(Rational(1, 2)));
    h.add_term(0, 2, T::from_rational(Rational(1, 2)));
    return b == Basis::cartesian ? h : h.change_basis();
}

// Difference of the two published product forms at the given truncation order.
template <class S>
Polynomial2<S> star_mode_gap(const Polynomial2<S>& f, const Polynomial2<S>& g,
                             const DeformationParams& d, int max_order = -1) {
    return star_product(f, g, d, StarMode::determinant) -
           star_product(f, g, d, StarMode::vielbein, max_order);
}

}  // namespace tmoyal
