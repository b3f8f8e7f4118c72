#pragma once

#include <vector>

#include "qaffine/expr.hpp"
#include "qaffine/groupoid.hpp"
#include "qaffine/normalize.hpp"

namespace qaffine {

enum class CaseTag {
    Zero2DXeven,   // s1 = s2 = 1
    Zero2DXodd,    // s1 = 1, s2 = -1
    Zero2CXodd,    // s1 = -1, s2 = 1
    Zero2CXeven,   // s1 = s2 = -1
    CB1,           // N = 1
    TypeAMiddle,   // 3 <= i <= N-2 (and i = 2 away from the 0-end)
    EndB,          // i in {N-1, N}
    Trivial
};

std::string to_string(CaseTag tag);

// Formula block selector for the operator with the given letter index.
CaseTag classify_case(const ParitySeq& s, int i);

// Image of one generator under T_{i,s}; the result lives over sigma_i s but
// is expressed in the same symbols. Brackets are elaborated in the source
// lattice.
Expr apply_T(const ParitySeq& s, int i, const GenSym& g);

// Image of one generator under the verified inverse operator mapping
// U(s) -> U(sigma_i s); see inverse_table.
Expr apply_T_inverse(const ParitySeq& s, int i, const GenSym& g);

// The full verified inverse table for letter i at parity sequence s.
// Throws InverseUnderdetermined if neither the conjugation candidate nor the
// linear solve certifies.
struct InverseTable {
    std::vector<std::pair<GenSym, Expr>> images;
    std::string path;  // "conjugation" or "solve"
    const Expr& image_of(const GenSym& g) const;
};
const InverseTable& inverse_table(const ParitySeq& s, int i);

// Applies a braid word (rightmost letter first) to a DJ expression,
// transporting the parity sequence along pi.
std::pair<Expr, ParitySeq> apply_word(const ParitySeq& s, const BraidWord& w, const Expr& e);

// The translation words T_{omega_i}, fully expanded into letters.
BraidWord t_omega_word(int i, int N);

struct GeneratorCheck {
    GenSym generator;
    VerifyReport report;
};

// Checks the braid relation for the adjacent pair {i, j} on every DJ
// generator: length four at the ends of the diagram, length three inside.
std::vector<GeneratorCheck> check_braid_relation(const ParitySeq& s, int i, int j,
                                                 Bounds bounds = {}, int jobs = 1);

// Anti-automorphism fixing E_j and F_j and inverting K_j, with the Koszul
// sign rule; used to build the inverse-operator candidates.
Expr dagger_antiautomorphism(const ParitySeq& s, const Expr& e);

// True when (s, i) is the rank-one row with s_1 = +1 kept for the twisted
// algebra; reports flag it.
bool twisted_context(const ParitySeq& s, int i);

void clear_braid_caches();

}  // namespace qaffine
