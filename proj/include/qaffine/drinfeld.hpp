#pragma once

#include <string>
#include <vector>

#include "qaffine/braid.hpp"
#include "qaffine/expr.hpp"
#include "qaffine/normalize.hpp"

namespace qaffine {

// u_{i,j,r}: the structure coefficient of the loop relations; r must be
// nonzero.
FieldElem u_coeff(const ParitySeq& s, int i, int j, int r);

enum class SerreKind { Sd, Se, So, SN };

struct SerreGen {
    SerreKind kind;
    std::vector<int> indices;
    std::vector<int> modes;
    int sign = 1;  // +1 for the X+ family, -1 for X-
    Expr element;
    std::string label;
};

// Guarded ideal generators: Sd needs A_ij = 0; Se needs A_ij A_ii != 0 and
// i != N; So needs A_ii = 0 and i != 1, N; SN needs rank >= 2.
SerreGen serre_gen(const ParitySeq& s, SerreKind kind, const std::vector<int>& indices,
                   const std::vector<int>& modes, int sign = 1);

enum class RelId { KK, KX, HH, HX, XXK, S1, XXzero, Serre1, SerreOdd, SerreN, CubicN, QuadraticN, CubicNN1 };

RelId rel_id_from_string(const std::string& name);
std::string to_string(RelId id);

struct RelationInstance {
    RelId id;
    std::vector<int> indices;
    std::vector<int> modes;
    int sign = 1;
    Expr element;
    std::string label;
};

// Mode-level coefficient of the named current relation. Index/mode arity:
//   KK: indices {i,j}                    HH: indices {i,j}, modes {t,u}
//   KX: indices {i,j}, modes {r}         HX: indices {i,j}, modes {t,r}
//   XXK: indices {i,j}, modes {r,t}      S1/XXzero: indices {i,j}, modes {r,t}
//   Serre1: indices {i,j}, modes {r1,r2,t}
//   SerreOdd: indices {i}, modes {r1,r2,t,u}
//   SerreN: modes {r1,r2,r3,t}           CubicN: modes {r1,r2,r3}
//   QuadraticN: modes {r,t}              CubicNN1: modes {r1,r2,t}
RelationInstance relation_instance(const ParitySeq& s, RelId id, const std::vector<int>& indices,
                                   const std::vector<int>& modes, int sign = 1);

// psi on single generators: X modes map through powers of the translation
// words, K and C to the obvious torus elements, H modes +-1 through the
// displayed bracket formulas. H modes beyond +-1 are unsupported.
Expr psi(const ParitySeq& s, const GenSym& g);

// Multiplicative extension of psi.
Expr psi_expr(const ParitySeq& s, const Expr& e);

// Maps the element through psi and certifies the image to zero.
VerifyReport check_psi_relation(const ParitySeq& s, const Expr& element, Bounds bounds = {});

enum class DrinfeldAut { eta, Omega, tau };

// eta: mode-negating anti-automorphism; Omega: swaps the X families;
// tau_i: mode shift on row i (tau_index picks i, ignored otherwise).
Expr drinfeld_automorphism(const ParitySeq& s, DrinfeldAut name, const Expr& e, int tau_index = 1);

struct PsiCheckItem {
    std::string label;
    Expr element;
};

// The loop-relation instances the homomorphism check runs: KK (with C
// centrality), KX, HX at t = +-1 and XXK, over the given mode window.
std::vector<PsiCheckItem> util_relation_instances(const ParitySeq& s,
                                                  const std::vector<std::string>& which,
                                                  int mode_lo, int mode_hi);

// All guarded Sd/Se/So/SN generators with modes in the given window.
std::vector<PsiCheckItem> serre_ideal_instances(const ParitySeq& s, int mode_lo, int mode_hi);

void clear_psi_cache();

}  // namespace qaffine
