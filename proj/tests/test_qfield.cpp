#include "doctest.h"

#include <random>

#include "qaffine/qfield.hpp"

using namespace qaffine;

namespace {

FieldElem random_elem(std::mt19937& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> coeff(-4, 4), exp(-3, 3), terms(1, 3);
    auto rand_poly = [&] {
        LaurentPoly p;
        int n = terms(rng);
        for (int k = 0; k < n; ++k) p = p + LaurentPoly(coeff(rng), exp(rng));
        return p;
    };
    for (;;) {
        LaurentPoly num = rand_poly();
        LaurentPoly den = rand_poly();
        if (den.is_zero()) continue;
        FieldElem e(num, den);
        if (!nonzero || !e.is_zero()) return e;
    }
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == FieldElem::one());
    CHECK(qint(2) == FieldElem(LaurentPoly::q(1) + LaurentPoly::q(-1)));
    CHECK(qint(-3) == -(FieldElem(LaurentPoly::q(2) + LaurentPoly::one() + LaurentPoly::q(-2))));
    // defining property: [r]_q (q - q^-1) = q^r - q^-r
    FieldElem qq = FieldElem(LaurentPoly::q(1) - LaurentPoly::q(-1));
    for (int r = -20; r <= 20; ++r)
        CHECK(qint(r) * qq == FieldElem::q_power(r) - FieldElem::q_power(-r));
}

TEST_CASE("canonical fraction form") {
    // inv(q + q^-1) has denominator q^2+1 and numerator q
    FieldElem e = FieldElem(LaurentPoly::q(1) + LaurentPoly::q(-1)).inv();
    CHECK(e.num() == LaurentPoly::q(1));
    CHECK(e.den() == LaurentPoly::q(2) + LaurentPoly::one());
    CHECK(e.to_string() == "q/(q^2+1)");

    FieldElem a(LaurentPoly::q(2) - LaurentPoly::one(), LaurentPoly::q(3) + LaurentPoly::q(1));
    CHECK(parse_field_elem(a.to_string()) == a);
}

TEST_CASE("field arithmetic and canonical uniqueness") {
    CHECK(field_arith(FieldOp::add, qint(2), -qint(2)).is_zero());
    FieldElem qq = FieldElem(LaurentPoly::q(1) - LaurentPoly::q(-1));
    CHECK(field_arith(FieldOp::mul, qq, qint(2)) == FieldElem::q_power(2) - FieldElem::q_power(-2));
    CHECK_THROWS_AS(field_arith(FieldOp::inv, FieldElem::zero()), DivisionByZero);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        FieldElem a = random_elem(rng);
        FieldElem c = random_elem(rng, /*nonzero=*/true);
        CHECK((a * c) / c == a);
    }
    // ring axioms on random triples
    for (int trial = 0; trial < 100; ++trial) {
        FieldElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("coefficient parsing round trips") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        FieldElem a = random_elem(rng);
        CHECK(parse_field_elem(a.to_string()) == a);
    }
    CHECK(parse_field_elem("(q^2-1)/(q^3+q)") ==
          FieldElem(LaurentPoly::q(2) - LaurentPoly::one(), LaurentPoly::q(3) + LaurentPoly::q(1)));
    CHECK_THROWS_AS(parse_field_elem("q^"), SyntaxError);
}
