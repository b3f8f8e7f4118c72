#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaffine/lattice.hpp"

namespace qaffine {

// Symmetric Cartan matrix over the affine node set {0..N}.
class CartanMatrix {
public:
    explicit CartanMatrix(int N) : N_(N), a_(static_cast<std::size_t>((N + 1) * (N + 1)), 0) {}

    int rank() const { return N_; }
    int at(int i, int j) const;
    int& at(int i, int j);

    std::string to_string() const;

private:
    int N_;
    std::vector<int> a_;
};

enum class NodeKind { Even, IsotropicOdd, NonisotropicOdd };

struct DynkinEdge {
    int a = 0, b = 0;              // node pair, a < b
    int multiplicity = 1;
    std::optional<int> arrow_to;   // node with the shorter root, if norms differ
};

struct DynkinDiagram {
    std::vector<NodeKind> nodes;   // indexed by 0..N
    std::vector<DynkinEdge> edges;

    const DynkinEdge* edge_between(int a, int b) const;
    std::string to_dot() const;
    std::string to_text() const;
};

enum class ShapeFamily { CB, DB };

struct Shape {
    ShapeFamily family = ShapeFamily::CB;
    int rank = 1;
    int odd_count_parity = 1;  // j in (CB_N)_j / (DB_N)_j

    std::string to_string() const;
};

// Cartan matrix from the case formulas; always equals the Gram matrix of
// the simple roots.
CartanMatrix cartan_matrix(const ParitySeq& s);

DynkinDiagram dynkin_diagram(const ParitySeq& s);

Shape shape(const ParitySeq& s);

}  // namespace qaffine
