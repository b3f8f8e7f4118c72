#include "doctest.h"

#include "qaffine/cartan.hpp"
#include "qaffine/drinfeld.hpp"

using namespace qaffine;

TEST_CASE("u coefficients") {
    ParitySeq s = ParitySeq::make({1, -1});
    const CartanMatrix A = cartan_matrix(s);
    CHECK(u_coeff(s, 1, 2, 1) == qint(A.at(1, 2)));
    // [rx]_q/r flips sign twice under r -> -r, so u is even in the mode;
    // the commutator antisymmetry of the HH relation comes from the
    // C^t - C^-t factor
    CHECK(u_coeff(s, 1, 2, -2) == u_coeff(s, 1, 2, 2));
    // (N,N) branch at r = 1: [2 A_NN] - (-1)^{|N|+1}[A_NN]
    int pN = simple_root(s, 2).parity;
    FieldElem expect = qint(2 * A.at(2, 2));
    FieldElem tail = qint(A.at(2, 2));
    if ((pN + 1) % 2 != 0) tail = -tail;
    CHECK(u_coeff(s, 2, 2, 1) == expect - tail);
    CHECK(u_coeff(s, 2, 2, -1) == u_coeff(s, 2, 2, 1));
    CHECK_THROWS_AS(u_coeff(s, 1, 1, 0), ZeroMode);
}

TEST_CASE("serre generators and guards") {
    ParitySeq s = ParitySeq::make({1, -1});
    // A_11 = 0 here: Sd(1,1) is the odd square relation
    SerreGen sd = serre_gen(s, SerreKind::Sd, {1, 1}, {0, 2});
    CHECK(sd.element == super_commutator(s, Expr::gen(GenSym::Xp(1, 0)), Expr::gen(GenSym::Xp(1, 2))));
    CHECK_THROWS_AS(serre_gen(s, SerreKind::Se, {2, 1}, {0, 0}), GuardViolation);
    ParitySeq t = ParitySeq::make({-1, -1});
    SerreGen se = serre_gen(t, SerreKind::Se, {1, 2}, {0, 0});
    CHECK(!se.element.is_zero());
    SerreGen sn = serre_gen(t, SerreKind::SN, {}, {1, -1}, -1);
    CHECK(!sn.element.is_zero());
    CHECK_THROWS_AS(serre_gen(ParitySeq::make({-1}), SerreKind::SN, {}, {0, 0}), GuardViolation);
    // So needs an isotropic interior node
    ParitySeq u = ParitySeq::make({1, -1, 1});
    SerreGen so = serre_gen(u, SerreKind::So, {2}, {0, 0, 0});
    CHECK(!so.element.is_zero());
    CHECK_THROWS_AS(serre_gen(u, SerreKind::So, {1}, {0, 0, 0}), GuardViolation);
    CHECK_THROWS_AS(serre_gen(ParitySeq::make({1, -1, -1}), SerreKind::So, {2}, {0, 0, 0}),
                    GuardViolation);
}

TEST_CASE("derived mode instances match the displayed forms") {
    // S1 at generic (r,t) is the two-term loop Serre pair
    ParitySeq s = ParitySeq::make({-1, -1});
    const CartanMatrix A = cartan_matrix(s);
    int i = 1, j = 2, r = 0, t = 0;
    RelationInstance inst = relation_instance(s, RelId::S1, {i, j}, {r, t});
    FieldElem a = FieldElem::q_power(-A.at(i, j));
    Expr expect = bracket_a(s, Expr::gen(GenSym::Xp(i, r)), Expr::gen(GenSym::Xp(j, t + 1)), a) +
                  bracket_a(s, Expr::gen(GenSym::Xp(j, t)), Expr::gen(GenSym::Xp(i, r + 1)), a);
    CHECK(inst.element == expect);

    // the (i i) instance: qb(X_{i,r}, X_{i,s+1}) + qb(X_{i,s}, X_{i,r+1})
    RelationInstance ii = relation_instance(s, RelId::S1, {1, 1}, {0, 0});
    Expr both = q_bracket(s, Expr::gen(GenSym::Xp(1, 0)), Expr::gen(GenSym::Xp(1, 1)));
    CHECK(ii.element == both + both);

    // QuadraticN at (1,-1) is the displayed quadratic relation
    RelationInstance quad = relation_instance(s, RelId::QuadraticN, {}, {1, -1});
    int aNN = A.at(2, 2);
    Expr qexpect =
        bracket_a(s, Expr::gen(GenSym::Xp(2, 1)), Expr::gen(GenSym::Xp(2, -1)), FieldElem::q_power(aNN)) -
        bracket_a(s, Expr::gen(GenSym::Xp(2, 0)), Expr::gen(GenSym::Xp(2, 0)), FieldElem::q_power(-3 * aNN))
            .scaled(FieldElem::q_power(2 * aNN));
    CHECK(quad.element == qexpect);

    // CubicNN1 at (0,0,0) is the displayed cubic mixed relation
    RelationInstance cub = relation_instance(s, RelId::CubicNN1, {}, {0, 0, 0});
    Expr lhs = bracket_a(s,
                         bracket_a(s, Expr::gen(GenSym::Xp(2, 1)), Expr::gen(GenSym::Xp(2, 0)),
                                   FieldElem::q_power(aNN)),
                         Expr::gen(GenSym::Xp(1, 0)), FieldElem::q_power(-2 * aNN))
                   .scaled(FieldElem::q_power(aNN));
    Expr rhs = super_commutator(s,
                                bracket_a(s, Expr::gen(GenSym::Xp(1, 0)), Expr::gen(GenSym::Xp(2, 1)),
                                          FieldElem::q_power(aNN)),
                                Expr::gen(GenSym::Xp(2, 0)))
                   .scaled(FieldElem(LaurentPoly::q(1) + LaurentPoly::q(-1)));
    CHECK(cub.element == lhs + rhs);

    // HX instance with upper sign at t = 1
    RelationInstance hx = relation_instance(s, RelId::HX, {1, 2}, {1, 0});
    Expr hxe = super_commutator(s, Expr::gen(GenSym::H(1, 1)), Expr::gen(GenSym::Xp(2, 0))) -
               (Expr::gen(GenSym::Cinv()) * Expr::gen(GenSym::Xp(2, 1))).scaled(u_coeff(s, 1, 2, 1));
    CHECK(hx.element == hxe);

    // XXK at (r, -r) gives the torus right side
    RelationInstance xxk = relation_instance(s, RelId::XXK, {1, 1}, {1, -1});
    CHECK(!xxk.element.is_zero());
    RelationInstance xxk10 = relation_instance(s, RelId::XXK, {1, 1}, {1, 0});
    CHECK(xxk10.element.is_zero());  // the anchored instance is trivially zero
}

TEST_CASE("automorphisms") {
    ParitySeq s = ParitySeq::make({1, -1});
    Expr x = Expr::gen(GenSym::Xp(1, 3));
    CHECK(drinfeld_automorphism(s, DrinfeldAut::tau, x, 1) == -Expr::gen(GenSym::Xp(1, 2)));
    CHECK(drinfeld_automorphism(s, DrinfeldAut::tau, x, 2) == x);
    CHECK(drinfeld_automorphism(s, DrinfeldAut::tau, Expr::gen(GenSym::K(1)), 1) ==
          Expr::gen(GenSym::Cinv()) * Expr::gen(GenSym::K(1)));
    // Omega^2 = (-1)^{|i|} on the plus family
    for (int i : {1, 2}) {
        Expr xp = Expr::gen(GenSym::Xp(i, 5));
        Expr twice = drinfeld_automorphism(s, DrinfeldAut::Omega,
                                           drinfeld_automorphism(s, DrinfeldAut::Omega, xp));
        CHECK(twice == (simple_root(s, i).parity ? -xp : xp));
    }
    // eta negates modes and reverses words
    Expr w = Expr::gen(GenSym::Xp(1, 2)) * Expr::gen(GenSym::Xp(2, -1));
    Expr ew = drinfeld_automorphism(s, DrinfeldAut::eta, w);
    Expr expect = Expr::gen(GenSym::Xp(2, 1)) * Expr::gen(GenSym::Xp(1, -2));
    int p1 = simple_root(s, 1).parity, p2 = simple_root(s, 2).parity;
    if (p1 && p2) expect = -expect;
    CHECK(ew == expect);

    // tau maps ideal generators to ideal generators
    ParitySeq t = ParitySeq::make({-1, -1});
    SerreGen sn = serre_gen(t, SerreKind::SN, {}, {0, 0});
    Expr img = drinfeld_automorphism(t, DrinfeldAut::tau, sn.element, 2);
    SerreGen shifted = serre_gen(t, SerreKind::SN, {}, {-1, 0});
    CHECK(img == shifted.element);  // (-1)^{3N} with N = 2 even
    SerreGen se = serre_gen(t, SerreKind::Se, {1, 2}, {0, 0});
    Expr img2 = drinfeld_automorphism(t, DrinfeldAut::tau, se.element, 1);
    SerreGen shifted2 = serre_gen(t, SerreKind::Se, {1, 2}, {-1, 0});
    CHECK(img2 == shifted2.element);
}

TEST_CASE("psi on generators") {
    ParitySeq s = ParitySeq::make({-1, 1});
    CHECK(psi(s, GenSym::Xp(1, 0)) == Expr::gen(GenSym::E(1)));
    CHECK(psi(s, GenSym::Xm(2, 0)) == Expr::gen(GenSym::F(2)));
    CHECK(psi(s, GenSym::K(1)) == Expr::gen(GenSym::K(1)));
    // psi(C) is the central K-monomial: K_0 (K_1 K_2)^2 for s_1 = -1
    Expr c = psi(s, GenSym::C());
    Monomial kc{GenSym::K(0), GenSym::K(1), GenSym::K(1), GenSym::K(2), GenSym::K(2)};
    CHECK(c == Expr::monomial(kc));
    ParitySeq t = ParitySeq::make({1, -1});
    Expr c2 = psi(t, GenSym::C());
    Monomial kc2{GenSym::K(0), GenSym::K(1), GenSym::K(2), GenSym::K(2)};
    CHECK(c2 == Expr::monomial(kc2));
    // psi(X^-_{1,1}) = -T_omega1(F_1)
    auto [img, back] = apply_word(s, t_omega_word(1, 2), Expr::gen(GenSym::F(1)));
    CHECK(back == s);
    CHECK(psi(s, GenSym::Xm(1, 1)) == -img);
    CHECK_THROWS_AS(psi(s, GenSym::H(1, 2)), UnsupportedGenerator);
    // the central image commutes with every Chevalley generator
    for (int k = 0; k <= 2; ++k) {
        Expr ek = Expr::gen(GenSym::E(k));
        CHECK(verify_zero(s, c * ek - ek * c).status == VerifyStatus::Proved);
    }
}
