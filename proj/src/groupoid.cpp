#include "qaffine/groupoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qaffine {

BraidWord inverse_word(const BraidWord& w) {
    BraidWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.exponent = -l.exponent;
    return r;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    BraidWord r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

BraidWord parse_braid_word(const std::string& text) {
    BraidWord w;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != 'T') throw SyntaxError("expected 'T' in braid word", pos);
        ++pos;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw SyntaxError("expected index after 'T'", pos);
        BraidLetter l;
        l.index = std::stoi(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t es = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            int e = std::stoi(text.substr(es, pos - es));
            if (e != 1 && e != -1) throw SyntaxError("braid letter exponent must be +-1", es);
            l.exponent = e;
        }
        w.push_back(l);
        skip();
    }
    return w;
}

std::string braid_word_to_string(const BraidWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << "T" << w[i].index;
        if (w[i].exponent == -1) os << "^-1";
    }
    return os.str();
}

ParitySeq sigma(int i, const ParitySeq& s) {
    const int N = s.rank();
    if (i < 0 || i > N) throw IndexOutOfRange("sigma index " + std::to_string(i));
    if (i == 0 || i == N) return s;
    std::vector<int> e = s.entries();
    std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    return ParitySeq::make_unchecked(e);
}

Weight dagger(const ParitySeq& s, int i) {
    const int N = s.rank();
    if (i < 0 || i > N) throw IndexOutOfRange("dagger index " + std::to_string(i));
    if (i == 0) return Weight::delta_of(N) - Weight::eps_of(N, 1).scaled(2);
    if (i == N) return Weight::eps_of(N, N);
    return Weight::eps_of(N, i) - Weight::eps_of(N, i + 1);
}

Weight reflect(const ParitySeq& s, int i, const Weight& w) {
    Weight d = dagger(s, i);
    int num = 2 * bilinear_all_plus(iota(s, w), d);
    int den = bilinear_all_plus(d, d);
    // num is always divisible by den for these daggers
    int c = num / den;
    return w - d.scaled(c);
}

std::vector<int> pi_of_word(int N, const BraidWord& word) {
    std::vector<int> perm(static_cast<std::size_t>(N));
    for (int k = 0; k < N; ++k) perm[static_cast<std::size_t>(k)] = k + 1;
    // Compose transpositions; applied rightmost first ordering is irrelevant
    // for the final permutation as long as composition order is consistent:
    // perm = sigma_{l_1} ... sigma_{l_k} acting on positions.
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = it->index;
        if (i <= 0 || i >= N) continue;
        for (auto& v : perm) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    }
    return perm;
}

ParitySeq transport(const ParitySeq& s, const BraidWord& word) {
    ParitySeq cur = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = sigma(it->index, cur);
    return cur;
}

DiagramOrbit diagram_orbit(const ParitySeq& s) {
    const int N = s.rank();
    std::set<ParitySeq> seen;
    std::vector<ParitySeq> queue{s};
    seen.insert(s);
    std::set<std::pair<ParitySeq, std::pair<int, ParitySeq>>> edge_set;
    while (!queue.empty()) {
        ParitySeq cur = queue.back();
        queue.pop_back();
        for (int i = 1; i <= N - 1; ++i) {
            ParitySeq nxt = sigma(i, cur);
            if (nxt != cur) {
                ParitySeq a = std::min(cur, nxt), b = std::max(cur, nxt);
                edge_set.insert({a, {i, b}});
            }
            if (!seen.count(nxt)) {
                seen.insert(nxt);
                queue.push_back(nxt);
            }
        }
    }
    DiagramOrbit orbit;
    for (const auto& p : seen) orbit.nodes.push_back({p, dynkin_diagram(p)});
    for (const auto& e : edge_set) orbit.edges.push_back({e.first, e.second.first, e.second.second});
    return orbit;
}

}  // namespace qaffine
