#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tmoyal/expr.hpp"
#include "tmoyal/prng.hpp"

using namespace tmoyal;

namespace {
ExactComplex rc(long long p, long long q = 1) { return ExactComplex(Rational(p, q)); }
}  // namespace

TEST_CASE("rational arithmetic is reduced and checked") {
    Rational a(3, 6);
    CHECK(a.num == 1);
    CHECK(a.den == 2);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-4, 8) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    Rational huge(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(huge * Rational(8), OverflowError);
}

TEST_CASE("sqrt2 extension closes under ring ops and division") {
    QSqrt2 s = QSqrt2::sqrt2();
    CHECK(s * s == QSqrt2(Rational(2)));
    CHECK(QSqrt2::inv_sqrt2() * s == QSqrt2(Rational(1)));
    QSqrt2 x(Rational(1, 2), Rational(-3, 4));
    CHECK(x / x == QSqrt2(Rational(1)));
    CHECK(doctest::Approx(x.to_double()) == 0.5 - 0.75 * std::sqrt(2.0));
}

TEST_CASE("parse: direct expansion examples") {
    auto p = parse_exact("x1^2 + x2^2");
    CHECK(p.term_count() == 2);
    CHECK(p.coeff(2, 0) == rc(1));
    CHECK(p.coeff(0, 2) == rc(1));

    CHECK(parse_exact("(x1 + i*x2)*(x1 - i*x2)") == p);

    auto q = parse_exact("3/2*x1*x2 - x1*x2");
    CHECK(q.term_count() == 1);
    CHECK(q.coeff(1, 1) == rc(1, 2));

    auto dec = parse_exact("0.5*x1 + 1.25");
    CHECK(dec.coeff(1, 0) == rc(1, 2));
    CHECK(dec.coeff(0, 0) == rc(5, 4));
    CHECK(parse_exact("1e-3").coeff(0, 0) == rc(1, 1000));
    CHECK(parse_exact("2.5e2").coeff(0, 0) == rc(250));
    CHECK(parse_exact("1.5E+1").coeff(0, 0) == rc(15));
}

TEST_CASE("parse: errors carry byte offsets") {
    CHECK_THROWS_AS(parse_exact("x1 +"), ParseError);
    try {
        parse_exact("x1 + $");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse_exact("x1^x2"), ParseError);         // exponent not an integer
    CHECK_THROWS_AS(parse_exact("a", Basis::cartesian), ParseError);
    CHECK_THROWS_AS(parse_exact("x1", Basis::ladder), ParseError);
    CHECK_THROWS_AS(parse_exact("x1 / 2"), ParseError);        // '/' only inside NUM
    CHECK_THROWS_AS(parse_exact("1/0"), ParseError);
}

TEST_CASE("ring operations and canonical form") {
    auto x1 = PolyExact::variable(1), x2 = PolyExact::variable(2);
    CHECK((x1 * x2).coeff(1, 1) == rc(1));
    auto p = parse_exact("2*x1^2 - 3/7*x2 + 1");
    CHECK((p + (-p)).is_zero());
    auto sq = (x1 + x2) * (x1 + x2);
    CHECK(sq == parse_exact("x1^2 + 2*x1*x2 + x2^2"));
    CHECK_THROWS_AS(x1 + PolyExact::variable(1, Basis::ladder), BasisMismatch);
    // no stored zero coefficients
    auto z = parse_exact("x1 - x1 + x2");
    CHECK(z.term_count() == 1);
}

TEST_CASE("differentiate") {
    auto p = parse_exact("x1^2*x2");
    CHECK(p.derivative(1) == parse_exact("2*x1*x2"));
    CHECK(parse_exact("x1^2").derivative(2, 2).is_zero());
    auto l = parse_exact("a*abar", Basis::ladder);
    CHECK(l.derivative(1) == parse_exact("abar", Basis::ladder));
    CHECK(parse_exact("5").derivative(1).is_zero());
    CHECK(p.derivative(1).derivative(2) == p.derivative(2).derivative(1));
}

TEST_CASE("evaluate exactly and in floating point") {
    auto p = parse_exact("x1^2 + x2^2");
    CHECK(p.evaluate(rc(3), rc(4)) == rc(25));
    CHECK(PolyExact().evaluate(rc(7), rc(9)) == rc(0));
    // einv at the origin is 1
    auto einv = parse_exact("1 + 1/10*x2 - 1/20*x1");
    CHECK(einv.evaluate(rc(0), rc(0)) == rc(1));
    auto pf = to_float(p);
    CHECK(std::abs(pf.evaluate(std::complex<double>{3, 0}, {4, 0}) - 25.0) < 1e-14);
}

TEST_CASE("change_basis is exact and involutive") {
    auto x1 = PolyExact::variable(1).change_basis();
    // x1 -> (a + abar)/sqrt2
    CHECK(x1.coeff(1, 0) == ExactComplex(QSqrt2::inv_sqrt2()));
    CHECK(x1.coeff(0, 1) == ExactComplex(QSqrt2::inv_sqrt2()));

    auto h = parse_exact("a*abar", Basis::ladder).change_basis();
    CHECK(h == parse_exact("1/2*x1^2 + 1/2*x2^2"));

    SplitMix64 rng(99);
    for (int t = 0; t < 40; ++t) {
        PolyExact p(Basis::cartesian);
        for (int j = 0; j < 5; ++j) {
            int m = (int)rng.integer(0, 6);
            p.add_term(m, (int)rng.integer(0, 6 - m),
                       ExactComplex(QSqrt2(rng.rational(9, 4)), QSqrt2(rng.rational(9, 4))));
        }
        CHECK(p.change_basis().change_basis() == p);
    }
}

TEST_CASE("render: canonical ordering and round-trip") {
    auto p = parse_exact("1 + x2^2 + x1*x2 + x1^2");
    CHECK(render(p) == "x1^2 + x1*x2 + x2^2 + 1");
    CHECK(render(parse_exact("0")) == "0");
    CHECK(render(parse_exact("-x1 - 1/2")) == "-x1 - 1/2");
    CHECK(render(parse_exact("i*x2 - 2*i")) == "i*x2 - 2*i");
    CHECK(render(parse_exact("(1+2*i)*x1")) == "(1+2*i)*x1");

    SplitMix64 rng(123);
    for (int t = 0; t < 50; ++t) {
        Basis b = rng.integer(0, 1) ? Basis::cartesian : Basis::ladder;
        PolyExact p2(b);
        for (int j = 0; j < 4; ++j) {
            int m = (int)rng.integer(0, 5);
            p2.add_term(m, (int)rng.integer(0, 5 - m),
                        ExactComplex(QSqrt2(rng.rational(9, 4), rng.rational(3, 2)),
                                     QSqrt2(rng.rational(9, 4))));
        }
        CAPTURE(render(p2));
        CHECK(parse_expression<ExactComplex>(render(p2), b) == p2);
    }
}

TEST_CASE("float mode prunes below the configurable threshold") {
    PolyFloat p(Basis::cartesian);
    p.add_term(1, 0, {1.0, 0.0});
    p.add_term(0, 1, {1e-15, 0.0});
    CHECK(p.term_count() == 1);  // default 1e-14
    PolyFloat q(Basis::cartesian);
    q.set_prune_threshold(1e-30);
    q.add_term(0, 1, {1e-15, 0.0});
    CHECK(q.term_count() == 1);
    // float render/parse round-trip is stable after one pass
    PolyFloat r(Basis::cartesian);
    r.add_term(2, 1, {0.1, -3.25});
    r.add_term(0, 0, {1e-7, 0.0});
    auto g1 = parse_expression<std::complex<double>>(render(r), Basis::cartesian);
    auto g2 = parse_expression<std::complex<double>>(render(g1), Basis::cartesian);
    CHECK(g1 == g2);
}
