#include "qaffine/cartan.hpp"

#include <cstdlib>
#include <sstream>

namespace qaffine {

int CartanMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i > N_ || j > N_) throw IndexOutOfRange("Cartan index");
    return a_[static_cast<std::size_t>(i * (N_ + 1) + j)];
}

int& CartanMatrix::at(int i, int j) {
    if (i < 0 || j < 0 || i > N_ || j > N_) throw IndexOutOfRange("Cartan index");
    return a_[static_cast<std::size_t>(i * (N_ + 1) + j)];
}

std::string CartanMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i <= N_; ++i) {
        for (int j = 0; j <= N_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

CartanMatrix cartan_matrix(const ParitySeq& s) {
    const int N = s.rank();
    CartanMatrix A(N);
    if (N == 1) {
        // Only the 0-row cases apply; theta = 2 eps_1 in rank one.
        A.at(0, 0) = 4 * s.at(1);
        A.at(0, 1) = A.at(1, 0) = -2 * s.at(1);
        A.at(1, 1) = s.at(1);
        return A;
    }
    // generic band
    for (int i = 1; i <= N; ++i) {
        if (i < N) A.at(i, i) = s.at(i) + s.at(i + 1);
        if (i + 1 <= N) A.at(i, i + 1) = A.at(i + 1, i) = -s.at(i + 1);
    }
    // 0-row cases
    A.at(0, 0) = s.at(1) == 1 ? s.at(1) + s.at(2) : 4 * s.at(1);
    A.at(0, 1) = A.at(1, 0) = s.at(1) == 1 ? s.at(2) - s.at(1) : -2 * s.at(1);
    A.at(0, 2) = A.at(2, 0) = s.at(1) == 1 ? -s.at(2) : 0;
    // short-node end
    A.at(N, N) = s.at(N);
    A.at(N, N - 1) = A.at(N - 1, N) = -s.at(N);
    return A;
}

const DynkinEdge* DynkinDiagram::edge_between(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
        if (e.a == a && e.b == b) return &e;
    return nullptr;
}

DynkinDiagram dynkin_diagram(const ParitySeq& s) {
    const int N = s.rank();
    DynkinDiagram d;
    std::vector<RootInfo> alpha;
    for (int i = 0; i <= N; ++i) alpha.push_back(simple_root(s, i));
    for (int i = 0; i <= N; ++i) {
        const auto& r = alpha[static_cast<std::size_t>(i)];
        if (r.parity == 0)
            d.nodes.push_back(NodeKind::Even);
        else
            d.nodes.push_back(r.isotropic ? NodeKind::IsotropicOdd : NodeKind::NonisotropicOdd);
    }
    for (int i = 0; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const Weight& ai = alpha[static_cast<std::size_t>(i)].weight;
            const Weight& aj = alpha[static_cast<std::size_t>(j)].weight;
            int pij = bilinear_all_plus(ai, aj);
            int pii = bilinear_all_plus(ai, ai);
            int pjj = bilinear_all_plus(aj, aj);
            int num = 4 * pij * pij;
            if (num == 0) continue;
            DynkinEdge e;
            e.a = i;
            e.b = j;
            e.multiplicity = num / (pii * pjj);
            if (std::abs(pii) > std::abs(pjj))
                e.arrow_to = j;
            else if (std::abs(pjj) > std::abs(pii))
                e.arrow_to = i;
            d.edges.push_back(e);
        }
    }
    return d;
}

std::string DynkinDiagram::to_dot() const {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << i << "\"";
        switch (nodes[i]) {
            case NodeKind::Even: os << ", shape=circle"; break;
            case NodeKind::IsotropicOdd: os << ", shape=circle, label=\"" << i << "\\n⊗\""; break;
            case NodeKind::NonisotropicOdd: os << ", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
        }
        os << "];\n";
    }
    for (const auto& e : edges) {
        os << "  n" << e.a << " -- n" << e.b << " [mult=" << e.multiplicity;
        if (e.arrow_to) os << ", arrowto=" << *e.arrow_to;
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string DynkinDiagram::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        os << i << ":";
        switch (nodes[i]) {
            case NodeKind::Even: os << "O"; break;
            case NodeKind::IsotropicOdd: os << "X"; break;
            case NodeKind::NonisotropicOdd: os << "*"; break;
        }
        os << " ";
    }
    os << "|";
    for (const auto& e : edges) {
        os << " " << e.a;
        for (int k = 0; k < e.multiplicity; ++k) os << (k ? "=" : "-");
        if (e.arrow_to) os << ">" << *e.arrow_to << ":";
        os << e.b;
    }
    return os.str();
}

std::string Shape::to_string() const {
    std::ostringstream os;
    os << (family == ShapeFamily::CB ? "CB" : "DB") << rank << "_" << odd_count_parity;
    return os.str();
}

Shape shape(const ParitySeq& s) {
    Shape sh;
    sh.family = s.at(1) == -1 ? ShapeFamily::CB : ShapeFamily::DB;
    sh.rank = s.rank();
    int total = 0;
    for (int i = 1; i <= s.rank(); ++i) total += simple_root(s, i).parity;
    sh.odd_count_parity = total % 2;
    return sh;
}

}  // namespace qaffine
