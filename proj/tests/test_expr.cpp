#include "doctest.h"

#include <random>

#include "qaffine/parser.hpp"

using namespace qaffine;

namespace {

FieldElem rand_scalar(std::mt19937& rng, bool nonzero) {
    std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
    for (;;) {
        FieldElem v = FieldElem(LaurentPoly(c(rng), e(rng))) + FieldElem(LaurentPoly(c(rng), e(rng)));
        if (!nonzero || !v.is_zero()) return v;
    }
}

// random parity-homogeneous word expression in E/F/K letters
Expr rand_homog(const ParitySeq& s, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(1, 3), node(0, s.rank()), kind(0, 2), nterms(1, 2);
    for (;;) {
        Expr e;
        int want = -1;
        int n = nterms(rng);
        for (int t = 0; t < n; ++t) {
            Monomial m;
            int l = len(rng);
            for (int k = 0; k < l; ++k) {
                int kd = kind(rng);
                int idx = node(rng);
                if (kd == 0) m.push_back(GenSym::E(idx));
                if (kd == 1) m.push_back(GenSym::F(idx));
                if (kd == 2) m.push_back(GenSym::K(idx));
            }
            int p = monomial_parity(s, m);
            if (want == -1) want = p;
            if (p != want) continue;
            e.add_term(m, rand_scalar(rng, true));
        }
        if (!e.is_zero()) return e;
    }
}

}  // namespace

TEST_CASE("grading of generators") {
    ParitySeq s = ParitySeq::make({1, -1});
    Expr e1f1 = Expr::gen(GenSym::E(1)) * Expr::gen(GenSym::F(1));
    Grading g = expr_grading(s, e1f1);
    CHECK(g.homogeneous);
    CHECK(g.weight.is_zero());
    CHECK(g.parity == 0);  // |alpha_1| = 1, two odd letters

    ParitySeq t = ParitySeq::make({1, -1, -1});
    Grading gn = expr_grading(t, Expr::gen(GenSym::E(3)));
    CHECK(gn.weight == Weight::eps_of(3, 3));
    CHECK(gn.parity == 1);

    Grading mix = expr_grading(s, Expr::gen(GenSym::E(1)) + Expr::gen(GenSym::F(1)));
    CHECK_FALSE(mix.homogeneous);
    CHECK(mix.strata.size() == 2);

    // Drinfeld generator gradings
    Grading gx = expr_grading(s, Expr::gen(GenSym::Xp(2, 3)));
    Weight w = Weight::eps_of(2, 2);
    w.delta = 3;
    CHECK(gx.weight == w);
    Grading gh = expr_grading(s, Expr::gen(GenSym::H(1, -2)));
    CHECK(gh.weight == Weight::delta_of(2).scaled(-2));
    CHECK(gh.parity == 0);
}

TEST_CASE("brackets") {
    ParitySeq s = ParitySeq::make({1, 1, -1});
    Expr E1 = Expr::gen(GenSym::E(1)), E2 = Expr::gen(GenSym::E(2));
    // both even (|a1| = 0 for s1 = s2): plain commutator at a = 1
    Expr b = bracket_a(s, E1, E2, FieldElem::one());
    CHECK(b == E1 * E2 - E2 * E1);
    // odd x: [x,x]_1 = 2 x^2
    ParitySeq t = ParitySeq::make({1, -1});
    Expr o = Expr::gen(GenSym::E(1));
    CHECK(bracket_a(t, o, o, FieldElem::one()) == (o * o).scaled(FieldElem(2)));
    // q-bracket on E_N with s_N = -1: pairing -1, parity product 1
    Expr EN = Expr::gen(GenSym::E(2));
    Expr qb = q_bracket(t, EN, EN);
    FieldElem a = FieldElem::q_power(-kBracketPairingSign);
    CHECK(qb == (EN * EN).scaled(FieldElem(1) + a));
    // orthogonal weights: plain supercommutator
    ParitySeq u = ParitySeq::make({1, -1, 1, -1});
    Expr X = Expr::gen(GenSym::E(1)), Y = Expr::gen(GenSym::E(3));
    CHECK(q_bracket(u, X, Y) == super_commutator(u, X, Y));
    // affine shifts do not change the parameter
    Expr Xr = Expr::gen(GenSym::Xp(1, 5)), Ys = Expr::gen(GenSym::Xp(2, -7));
    Expr qb1 = q_bracket(u, Xr, Ys);
    int pair = bilinear(u, simple_root(u, 1).weight, simple_root(u, 2).weight);
    Expr expect = bracket_a(u, Xr, Ys, FieldElem::q_power(kBracketPairingSign * pair));
    CHECK(qb1 == expect);
    CHECK_THROWS_AS(q_bracket(u, X + Y, Y), InhomogeneousWeight);
}

TEST_CASE("q-Jacobi identities") {
    std::mt19937 rng(20240811);
    ParitySeq s = ParitySeq::make({1, -1, -1});
    for (int trial = 0; trial < 60; ++trial) {
        Expr x = rand_homog(s, rng), y = rand_homog(s, rng), z = rand_homog(s, rng);
        FieldElem a = rand_scalar(rng, true), b = rand_scalar(rng, true), c = rand_scalar(rng, true);
        int py = expr_grading(s, y).parity, pz = expr_grading(s, z).parity;
        int px = expr_grading(s, x).parity;
        // [[x,y]_a, z]_b = [x,[y,z]_c]_{a b c^-1} + (-1)^{|y||z|} c [[x,z]_{b c^-1}, y]_{a c^-1}
        Expr lhs = bracket_a(s, bracket_a(s, x, y, a), z, b);
        Expr r1 = bracket_a(s, x, bracket_a(s, y, z, c), a * b / c);
        Expr r2 = bracket_a(s, bracket_a(s, x, z, b / c), y, a / c).scaled(c);
        if (py && pz) r2 = -r2;
        CHECK(lhs == r1 + r2);
        // [x,[y,z]_a]_b = [[x,y]_c, z]_{a b c^-1} + (-1)^{|x||y|} c [y,[x,z]_{b c^-1}]_{a c^-1}
        Expr lhs2 = bracket_a(s, x, bracket_a(s, y, z, a), b);
        Expr r3 = bracket_a(s, bracket_a(s, x, y, c), z, a * b / c);
        Expr r4 = bracket_a(s, y, bracket_a(s, x, z, b / c), a / c).scaled(c);
        if (px && py) r4 = -r4;
        CHECK(lhs2 == r3 + r4);
    }
}

TEST_CASE("multiplication respects grading") {
    ParitySeq s = ParitySeq::make({-1, 1});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Expr x = rand_homog(s, rng), y = rand_homog(s, rng);
        Grading gx = expr_grading(s, x), gy = expr_grading(s, y);
        if (!gx.homogeneous || !gy.homogeneous) continue;  // parity-homogeneous only
        Expr xy = x * y;
        if (xy.is_zero()) continue;
        Grading gxy = expr_grading(s, xy);
        CHECK(gxy.homogeneous);
        CHECK(gxy.weight == gx.weight + gy.weight);
        CHECK(gxy.parity == ((gx.parity + gy.parity) % 2));
    }
    // associativity
    Expr a = Expr::gen(GenSym::E(0)) + Expr::gen(GenSym::F(1)).scaled(qint(2));
    Expr b = Expr::gen(GenSym::K(1)) * Expr::gen(GenSym::E(2));
    Expr c = Expr::gen(GenSym::F(0));
    CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("parser") {
    ParitySeq s = ParitySeq::make({1, -1});
    Expr e = parse_expr("(q+q^-1)*F0*K0", s);
    CHECK(e.term_count() == 1);
    CHECK(*e.coeff(Monomial{GenSym::F(0), GenSym::K(0)}) == qint(2));

    CHECK(parse_expr("qb(E0,E1)", s) == q_bracket(s, Expr::gen(GenSym::E(0)), Expr::gen(GenSym::E(1))));
    CHECK(parse_expr("sc(E1,F1)", s) ==
          super_commutator(s, Expr::gen(GenSym::E(1)), Expr::gen(GenSym::F(1))));
    CHECK(parse_expr("b[E0,E1;q^-1]", s) ==
          bracket_a(s, Expr::gen(GenSym::E(0)), Expr::gen(GenSym::E(1)), FieldElem::q_power(-1)));
    CHECK(parse_expr("qb(qb(E{N-1},EN),EN)", s) ==
          q_bracket(s, q_bracket(s, Expr::gen(GenSym::E(1)), Expr::gen(GenSym::E(2))),
                    Expr::gen(GenSym::E(2))));
    CHECK(parse_expr("X+1,0 * X-2,-1 * H1,1 * C^-1 * K1^-1", s).term_count() == 1);

    CHECK_THROWS_AS(parse_expr("E5", s), UnknownGenerator);
    CHECK_THROWS_AS(parse_expr("E0 +", s), SyntaxError);
    CHECK_THROWS_AS(parse_expr("qb(E0, E0 + K1)", s), GradingError);
    CHECK_THROWS_AS(parse_expr("H1,0", s), BadModes);

    // parse . print round trip on random expressions
    std::mt19937 rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        Expr x = rand_homog(s, rng);
        CHECK(parse_expr(x.to_string(), s) == x);
    }
}
