#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmoyal/expr.hpp"
#include "tmoyal/prng.hpp"
#include "tmoyal/star.hpp"

using namespace tmoyal;

namespace {
const DeformationParams kTwist{Rational(1), Rational(1, 10), Rational(1, 20)};
const DeformationParams kFlat{Rational(2), Rational(0), Rational(0)};

PolyExact einv_poly(const DeformationParams& d, Basis b = Basis::cartesian) {
    return d.einv<ExactComplex>(b);
}

PolyExact random_poly(SplitMix64& rng, int max_deg, Basis b = Basis::cartesian) {
    PolyExact p(b);
    for (int j = 0; j < 5; ++j) {
        int m = (int)rng.integer(0, max_deg);
        p.add_term(m, (int)rng.integer(0, max_deg - m),
                   ExactComplex(QSqrt2(rng.rational(9, 4)), QSqrt2(rng.rational(9, 4))));
    }
    return p;
}
}  // namespace

TEST_CASE("x1 * x2 produces the first-order frame term") {
    auto x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
    auto s = star_product(x1, x2, kTwist);
    auto expect = x1 * x2 + einv_poly(kTwist).scaled(ExactComplex::i() * ExactComplex(Rational(1, 2)));
    CHECK(s == expect);
    CHECK(star_product(x1, x1, kTwist) == x1 * x1);
    // flat case, theta = 2: [x1, x2] = 2i
    auto c = star_commutator(x1, x2, kFlat);
    CHECK(c == PolyExact::constant(ExactComplex::i() * ExactComplex(2)));
}

TEST_CASE("coordinate commutator equals i theta / e") {
    auto x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
    auto expect = einv_poly(kTwist).scaled(ExactComplex::i());
    CHECK(star_commutator(x1, x2, kTwist) == expect);
    CHECK(star_commutator(x1, x2, kTwist, StarMode::vielbein) == expect);

    // {x1, f} = 2 x1 f on a worked example
    auto f = parse_exact("x2^2");
    CHECK(star_anticommutator(x1, f, kTwist) == (x1 * f).scaled(ExactComplex(2)));

    // ladder pair: [a, abar] = theta / e in the ladder basis
    auto a = PolyExact::variable(1, Basis::ladder), ab = PolyExact::variable(2, Basis::ladder);
    CHECK(star_commutator(a, ab, kTwist) == einv_poly(kTwist, Basis::ladder));
}

TEST_CASE("associator vanishes flat and takes its closed value twisted") {
    SplitMix64 rng(7);
    for (int t = 0; t < 25; ++t) {
        DeformationParams d0(rng.positive_rational(6, 3), Rational(0), Rational(0));
        CHECK(associator(random_poly(rng, 4), random_poly(rng, 4), random_poly(rng, 4), d0)
                  .is_zero());
    }
    auto x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
    auto a = associator(x1, x1, x2, kTwist);
    auto expect = einv_poly(kTwist).scaled(ExactComplex(Rational(1, 4) * Rational(1, 10)));
    CHECK(a == expect);

    // halving both twist parameters roughly halves the associator norm
    DeformationParams half(Rational(1), Rational(1, 20), Rational(1, 40));
    double r = associator(x1, x1, x2, kTwist).max_abs_coeff() /
               associator(x1, x1, x2, half).max_abs_coeff();
    CHECK(std::abs(r - 2.0) < 0.2);
}

TEST_CASE("jacobi identity holds through the engine") {
    CHECK(jacobi_residual<ExactComplex>(kTwist) == 0.0);
    CHECK(jacobi_residual<ExactComplex>(kFlat) == 0.0);
    DeformationParams d(Rational(1), Rational(1, 10), Rational(0));
    CHECK(jacobi_residual<ExactComplex>(d) == 0.0);
    CHECK(jacobi_residual<ExactComplex>(d, StarMode::vielbein) == 0.0);
}

TEST_CASE("vielbein bracket structure constants") {
    auto vb1 = vielbein_bracket({Rational(1), Rational(3, 10), Rational(0)});
    CHECK(vb1.c1 == doctest::Approx(-0.6).epsilon(1e-15));
    CHECK(vb1.c2 == doctest::Approx(0.0));
    auto vb0 = vielbein_bracket({Rational(1), Rational(0), Rational(0)});
    CHECK(vb0.c1 == 0.0);
    CHECK(vb0.c2 == 0.0);
    CHECK(vb0.linear_remainder == 0.0);
    auto vb2 = vielbein_bracket({Rational(1), Rational(1, 10), Rational(1, 10)});
    CHECK(vb2.c1 == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(vb2.c2 == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(vb2.quadratic_probe == 0.0);  // commutator acts as a first-order operator
}

TEST_CASE("closed-form coordinate actions match the engine") {
    auto x2 = PolyExact::variable(2);
    auto left = x_action_closed_form(1, x2, Side::left, kTwist);
    auto expect = PolyExact::variable(1) * x2 +
                  einv_poly(kTwist).scaled(ExactComplex::i() * ExactComplex(Rational(1, 2)));
    CHECK(left == expect);
    auto right = x_action_closed_form(1, x2, Side::right, kTwist);
    CHECK(right == PolyExact::variable(1) * x2 -
                       einv_poly(kTwist).scaled(ExactComplex::i() * ExactComplex(Rational(1, 2))));
    auto l21 = x_action_closed_form(2, PolyExact::variable(1), Side::left, kTwist);
    CHECK(l21 == PolyExact::variable(1) * PolyExact::variable(2) -
                     einv_poly(kTwist).scaled(ExactComplex::i() * ExactComplex(Rational(1, 2))));

    SplitMix64 rng(11);
    for (int t = 0; t < 20; ++t) {
        PolyExact f = random_poly(rng, 5);
        for (int mu = 1; mu <= 2; ++mu) {
            PolyExact x = PolyExact::variable(mu);
            CHECK(x_action_closed_form(mu, f, Side::left, kTwist) == star_product(x, f, kTwist));
            CHECK(x_action_closed_form(mu, f, Side::right, kTwist) == star_product(f, x, kTwist));
        }
    }
}

TEST_CASE("hamiltonian action: flat equality, twisted gap in closed form") {
    auto H = hamiltonian_polynomial<ExactComplex>();
    // constant operand: only the potential term survives
    auto one = PolyExact::constant(ExactComplex(1));
    CHECK(hamiltonian_action(one, Side::left, kTwist) == H);

    DeformationParams d0(Rational(1), Rational(0), Rational(0));
    auto f = parse_exact("x1^3*x2 - 2*x2^2 + x1");
    CHECK(hamiltonian_action(f, Side::left, d0) == star_product(H, f, d0));
    CHECK(hamiltonian_action(f, Side::right, d0) == star_product(f, H, d0));
    CHECK(hamiltonian_action(f, Side::left, d0) - hamiltonian_action(f, Side::right, d0) ==
          star_commutator(H, f, d0));

    // degree-1 operand stays finite and polynomial
    auto e = einv_poly(kTwist);
    auto me = hamiltonian_action(e, Side::left, kTwist);
    CHECK(me.total_degree() == 3);

    // twisted: the one-sided gap has the closed form (theta^2/8)(om2 d1 - om1 d2) f
    auto gap = hamiltonian_action(f, Side::left, kTwist) - star_product(H, f, kTwist);
    auto expect = (f.derivative(1).scaled(ExactComplex(Rational(1, 20))) -
                   f.derivative(2).scaled(ExactComplex(Rational(1, 10))))
                      .scaled(ExactComplex(Rational(1, 8)));
    CHECK(gap == expect);
}

TEST_CASE("product forms agree through order one and split at order two") {
    SplitMix64 rng(5);
    auto lin = PolyExact::variable(1) + PolyExact::constant(ExactComplex(Rational(2, 3)));
    for (int t = 0; t < 10; ++t) {
        PolyExact g = random_poly(rng, 4);
        CHECK(star_mode_gap(lin, g, kTwist).is_zero());
        CHECK(star_mode_gap(g, lin, kTwist).is_zero());
        DeformationParams d0(Rational(1), Rational(0), Rational(0));
        CHECK(star_mode_gap(random_poly(rng, 4), g, d0).is_zero());
    }
    auto f2 = PolyExact::variable(1).pow(2), g2 = PolyExact::variable(2).pow(2);
    CHECK(star_mode_gap(f2, g2, kTwist).max_abs_coeff() > 0.0);
    // at truncation order 2 the gap on (x1, x2) has the closed form
    // (theta^2/4) om1 om2 / e, from composing the order-2 operator powers
    auto det = star_product(PolyExact::variable(1), PolyExact::variable(2), kTwist);
    auto v2 = star_product(PolyExact::variable(1), PolyExact::variable(2), kTwist,
                           StarMode::vielbein, 2);
    auto expect2 = einv_poly(kTwist).scaled(
        ExactComplex(Rational(1, 4) * Rational(1, 10) * Rational(1, 20)));
    CHECK(det - v2 == expect2);
    // ladder-basis operands run through the same vielbein engine
    auto a = PolyExact::variable(1, Basis::ladder), ab = PolyExact::variable(2, Basis::ladder);
    CHECK(star_product(a, ab, kTwist, StarMode::vielbein) == star_product(a, ab, kTwist));
}

TEST_CASE("determinant star product commutes with the basis change") {
    SplitMix64 rng(21);
    for (int t = 0; t < 15; ++t) {
        PolyExact f = random_poly(rng, 4), g = random_poly(rng, 4);
        PolyExact lhs = star_product(f, g, kTwist).change_basis();
        PolyExact rhs = star_product(f.change_basis(), g.change_basis(), kTwist);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("star product rejects mixed bases") {
    auto x1 = PolyExact::variable(1);
    auto a = PolyExact::variable(1, Basis::ladder);
    CHECK_THROWS_AS(star_product(x1, a, kTwist), BasisMismatch);
    CHECK_THROWS_AS(hamiltonian_action(a, Side::left, kTwist), BasisMismatch);
    CHECK_THROWS_AS(x_action_closed_form(1, a, Side::left, kTwist), BasisMismatch);
    CHECK_THROWS_AS(DeformationParams(Rational(0), Rational(0), Rational(0)),
                    std::invalid_argument);
}
