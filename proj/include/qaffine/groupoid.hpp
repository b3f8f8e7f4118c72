#pragma once

#include <vector>

#include "qaffine/cartan.hpp"
#include "qaffine/lattice.hpp"

namespace qaffine {

// One letter of a braid word: generator index in {0..N} and exponent +-1.
struct BraidLetter {
    int index = 0;
    int exponent = 1;

    bool operator==(const BraidLetter&) const = default;
};

using BraidWord = std::vector<BraidLetter>;

BraidWord inverse_word(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord parse_braid_word(const std::string& text);  // e.g. "T0 T1^-1 T2"
std::string braid_word_to_string(const BraidWord& w);

// sigma_i action on parity sequences: swap entries i, i+1 for 1 <= i <= N-1,
// identity for i in {0, N}.
ParitySeq sigma(int i, const ParitySeq& s);

// Virtual root alpha_i^dagger used by the generalized reflections.
Weight dagger(const ParitySeq& s, int i);

// Generalized reflection r_{i,s}: P_s -> P_{sigma_i s}; coordinates are
// returned for the target lattice.
Weight reflect(const ParitySeq& s, int i, const Weight& w);

// Image of a braid word under pi: B_N -> S_N, as a permutation of {1..N}
// (perm[k-1] = image of k). Inverse letters map to the same transpositions.
std::vector<int> pi_of_word(int N, const BraidWord& word);

// Parity sequence transported along a word (applied rightmost first).
ParitySeq transport(const ParitySeq& s, const BraidWord& word);

struct OrbitNode {
    ParitySeq seq;
    DynkinDiagram diagram;
};

struct OrbitEdge {
    ParitySeq from;
    int index;  // the reflection r_index connecting the pair
    ParitySeq to;
};

struct DiagramOrbit {
    std::vector<OrbitNode> nodes;  // sorted by parity sequence
    std::vector<OrbitEdge> edges;  // from < to, sorted
};

// Closure of {s} under sigma_1..sigma_{N-1}, with diagrams and the
// generating reflection edges. Deterministic ordering.
DiagramOrbit diagram_orbit(const ParitySeq& s);

}  // namespace qaffine
