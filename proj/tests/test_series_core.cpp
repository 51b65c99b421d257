#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpp/bivar.hpp"
#include "qpp/errors.hpp"
#include "qpp/frac_qseries.hpp"
#include "qpp/laurent.hpp"
#include "qpp/qseries.hpp"
#include "qpp/rational.hpp"

using namespace qpp;

namespace {

using R = BigRational;

struct Rng {
    std::mt19937 gen{20260817u};

    int pick(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }

    R rational() {
        int num = pick(-6, 6);
        int den = pick(1, 3);
        return R(num, den);
    }

    R nonzero_rational() {
        R v = rational();
        return v == 0 ? R(pick(1, 5)) : v;
    }

    QSeries qseries(int order) {
        QSeries s(order);
        for (int n = 0; n <= order; ++n) {
            s.set_coeff(n, rational());
        }
        return s;
    }

    LaurentPoly laurent() {
        LaurentPoly p;
        int terms = pick(0, 3);
        for (int t = 0; t < terms; ++t) {
            p.add_term(pick(-3, 3), rational());
        }
        return p;
    }

    BivarSeries bivar(int order) {
        BivarSeries s(order);
        for (int n = 0; n <= order; ++n) {
            s.set_coeff_poly(n, laurent());
        }
        return s;
    }
};

} // namespace

TEST_CASE("univariate ring axioms hold on random series") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        int order = rng.pick(0, 12);
        QSeries a = rng.qseries(order);
        QSeries b = rng.qseries(order);
        QSeries c = rng.qseries(order);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QSeries(order));
        CHECK(a * QSeries::one(order) == a);
    }
}

TEST_CASE("bivariate ring axioms hold on random series") {
    Rng rng;
    for (int trial = 0; trial < 100; ++trial) {
        int order = rng.pick(0, 10);
        BivarSeries a = rng.bivar(order);
        BivarSeries b = rng.bivar(order);
        BivarSeries c = rng.bivar(order);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == BivarSeries(order));
        CHECK(a * BivarSeries::one(order) == a);
    }
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
    Rng rng;
    QSeries a = rng.qseries(5);
    QSeries b = rng.qseries(9);
    CHECK((a + b).order() == 5);
    CHECK((a * b).order() == 5);
    CHECK(a + b == a + b.truncated(5));
    BivarSeries c = rng.bivar(4);
    BivarSeries d = rng.bivar(7);
    CHECK((c * d).order() == 4);
    CHECK(c * d == c * d.truncated(4));
}

TEST_CASE("reciprocals and division round-trip exactly") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        int order = rng.pick(0, 12);
        QSeries s = rng.qseries(order);
        s.set_coeff(0, rng.nonzero_rational());
        CHECK(s * s.inverted() == QSeries::one(order));
        QSeries t = rng.qseries(order);
        CHECK((t * s).divided_by(s) == t);
    }
    for (int trial = 0; trial < 40; ++trial) {
        int order = rng.pick(0, 8);
        BivarSeries s = rng.bivar(order);
        s.set_coeff_poly(0, LaurentPoly::monomial(rng.nonzero_rational(),
                                                  rng.pick(-2, 2)));
        CHECK(s * s.inverted() == BivarSeries::one(order));
        BivarSeries t = rng.bivar(order);
        CHECK((t * s).divided_by(s) == t);
    }
}

TEST_CASE("binomial multiply and divide invert each other") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        int order = rng.pick(1, 12);
        int k = rng.pick(1, order);
        R c = rng.nonzero_rational();
        QSeries s = rng.qseries(order);
        CHECK(s.mul_binomial(c, k).div_binomial(c, k) == s);
        BivarSeries b = rng.bivar(order);
        int ze = rng.pick(-2, 2);
        CHECK(b.mul_binomial(c, ze, k).div_binomial(c, ze, k) == b);
    }
}

TEST_CASE("z-derivative satisfies the Leibniz rule") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        int order = rng.pick(0, 8);
        BivarSeries f = rng.bivar(order);
        BivarSeries g = rng.bivar(order);
        CHECK((f * g).diff_z() == f.diff_z() * g + f * g.diff_z());
        LaurentPoly p = rng.laurent();
        LaurentPoly q = rng.laurent();
        CHECK((p * q).diff() == p.diff() * q + p * q.diff());
    }
}

TEST_CASE("evaluation at a point is a ring homomorphism") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        int order = rng.pick(0, 8);
        BivarSeries f = rng.bivar(order);
        BivarSeries g = rng.bivar(order);
        R v = rng.nonzero_rational();
        CHECK((f * g).eval_z(v) == f.eval_z(v) * g.eval_z(v));
        CHECK((f + g).eval_z(v) == f.eval_z(v) + g.eval_z(v));
    }
}

TEST_CASE("Laurent substitution of powers composes with evaluation") {
    Rng rng;
    for (int trial = 0; trial < 30; ++trial) {
        LaurentPoly p = rng.laurent();
        R v = rng.nonzero_rational();
        CHECK(p.subst_pow(2).eval(v) == p.eval(v * v));
        CHECK(p.subst_pow(-1).eval(v) == p.eval(R(1) / v));
    }
}

TEST_CASE("a fixed symbolic coefficient reads back exactly") {
    LaurentPoly w;
    w.add_term(0, R(2));
    w.add_term(2, R(-1));
    w.add_term(-2, R(-1));
    BivarSeries b = BivarSeries::one(1);
    b.set_coeff_poly(1, w);
    CHECK(b.coeff(2, 1) == R(-1));
    CHECK(b.coeff(-2, 1) == R(-1));
    CHECK(b.coeff(0, 1) == R(2));
    CHECK(b.coeff(1, 1) == R(0));
    CHECK(b.coeff(0, 0) == R(1));
}

TEST_CASE("fractional offsets combine under multiplication and division") {
    QSeries body = QSeries::one(6);
    FracQSeries a(R(1, 24), body);
    FracQSeries b(R(1, 8), body);
    CHECK(a.frac_mul(b).offset() == R(1, 6));
    CHECK(a.frac_div(b).offset() == R(-1, 12));
    CHECK(a.frac_div(a).offset() == R(0));
    CHECK(a.frac_div(a).assert_integral() == QSeries::one(6));
    CHECK_THROWS_AS(a.assert_integral(), NonIntegralOffset);
    CHECK_THROWS_AS(FracQSeries(R(1, 5), body), NonIntegralOffset);
}

TEST_CASE("rational helpers behave on edge inputs") {
    CHECK(rat_pow(R(2, 3), 3) == R(8, 27));
    CHECK(rat_pow(R(2), -2) == R(1, 4));
    CHECK(rat_pow(R(5), 0) == R(1));
    CHECK_THROWS_AS(rat_pow(R(0), -1), DivisionByZeroParameter);
    CHECK(rat_is_integer(R(6, 3)));
    CHECK(!rat_is_integer(R(1, 2)));
    CHECK(rat_to_integer(R(-14, 7)) == BigInt(-2));
    CHECK_THROWS_AS(rat_to_integer(R(1, 3)), EngineError);
    CHECK(rat_text(R(3, 4)) == "3/4");
    CHECK(rat_text(R(-5)) == "-5");
    CHECK(parity_sign(3) == -1);
    CHECK(parity_sign(-4) == 1);
}

TEST_CASE("error paths raise the dedicated exception types") {
    QSeries s(5);
    CHECK_THROWS_AS(s.coeff(6), OrderExceeded);
    CHECK_THROWS_AS(s.inverted(), NonUnitConstantTerm);
    CHECK_THROWS_AS(s.div_binomial(R(1), 0), NonUnitConstantTerm);
    CHECK_THROWS_AS(s.shifted(-1), EngineError);

    BivarSeries b(3);
    CHECK_THROWS_AS(b.coeff_poly(4), OrderExceeded);
    CHECK_THROWS_AS(b.inverted(), NonUnitConstantTerm);
    LaurentPoly two_terms;
    two_terms.add_term(0, R(1));
    two_terms.add_term(1, R(1));
    b.set_coeff_poly(0, two_terms);
    CHECK_THROWS_AS(b.inverted(), NonUnitConstantTerm);
    CHECK_THROWS_AS(b.div_binomial(R(1), 1, 0), NonUnitConstantTerm);

    CHECK_THROWS_AS(LaurentPoly::monomial(R(1), -1).eval(R(0)),
                    ZeroSubstitutionWithNegativeExponent);
    CHECK(LaurentPoly::monomial(R(1), 2).eval(R(0)) == R(0));

    BivarSeries neg = BivarSeries::constant(LaurentPoly::monomial(R(1), -1), 2);
    CHECK_THROWS_AS(neg.eval_z(R(0)), ZeroSubstitutionWithNegativeExponent);

    CHECK_THROWS_AS(BivarSeries(2).truncated(5), OrderExceeded);
}

TEST_CASE("monomial inversion handles shifted leading terms") {
    BivarSeries s(4);
    s.set_coeff_poly(0, LaurentPoly::monomial(R(2), -1));
    LaurentPoly tail;
    tail.add_term(1, R(3));
    tail.add_term(-2, R(-1, 2));
    s.set_coeff_poly(1, tail);
    s.set_coeff_poly(3, LaurentPoly::constant(R(7)));
    CHECK(s * s.inverted() == BivarSeries::one(4));
}

TEST_CASE("zero polynomials never store explicit terms") {
    LaurentPoly p;
    p.add_term(2, R(5));
    p.add_term(2, R(-5));
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    LaurentPoly q = LaurentPoly::monomial(R(1), 1);
    q.set_coeff(1, R(0));
    CHECK(q.is_zero());
}
