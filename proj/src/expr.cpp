#include "qaffine/expr.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

std::string GenSym::to_string() const {
    switch (kind) {
        case GenKind::E: return "E" + std::to_string(index);
        case GenKind::F: return "F" + std::to_string(index);
        case GenKind::K: return "K" + std::to_string(index);
        case GenKind::Kinv: return "K" + std::to_string(index) + "^-1";
        case GenKind::Xp: return "X+" + std::to_string(index) + "," + std::to_string(mode);
        case GenKind::Xm: return "X-" + std::to_string(index) + "," + std::to_string(mode);
        case GenKind::H: return "H" + std::to_string(index) + "," + std::to_string(mode);
        case GenKind::C: return "C";
        case GenKind::Cinv: return "C^-1";
    }
    return "?";
}

std::string monomial_to_string(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << "*";
        os << m[i].to_string();
    }
    return os.str();
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Expr Expr::scalar(FieldElem c) {
    Expr e;
    e.add_term(Monomial{}, c);
    return e;
}

Expr Expr::gen(GenSym g) {
    Expr e;
    e.add_term(Monomial{g}, FieldElem::one());
    return e;
}

Expr Expr::monomial(Monomial m, FieldElem c) {
    Expr e;
    e.add_term(m, c);
    return e;
}

void Expr::add_term(const Monomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Expr Expr::operator+(const Expr& o) const {
    Expr r = *this;
    r += o;
    return r;
}

Expr& Expr::operator+=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Expr Expr::operator-(const Expr& o) const {
    Expr r = *this;
    r -= o;
    return r;
}

Expr Expr::operator-() const {
    Expr r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Expr Expr::operator*(const Expr& o) const {
    Expr r;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            r.add_term(m, c1 * c2);
        }
    }
    return r;
}

Expr Expr::scaled(const FieldElem& c) const {
    if (c.is_zero()) return Expr();
    Expr r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

bool Expr::operator==(const Expr& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::vector<Monomial> Expr::sorted_monomials() const {
    std::vector<Monomial> ms;
    ms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ms.push_back(m);
    std::sort(ms.begin(), ms.end(), monomial_less);
    return ms;
}

const FieldElem* Expr::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

std::string Expr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& m : sorted_monomials()) {
        const FieldElem& c = *coeff(m);
        std::string cs = c.to_string();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos && cs.find('/') == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        bool simple = cs.find('+') == std::string::npos && cs.find('-') == std::string::npos;
        if (m.empty()) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (cs == "1") {
            os << monomial_to_string(m);
        } else {
            os << (simple ? cs : "(" + cs + ")") << "*" << monomial_to_string(m);
        }
    }
    return os.str();
}

std::size_t Expr::max_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.size());
    return d;
}

int sym_parity(const ParitySeq& s, const GenSym& g) {
    switch (g.kind) {
        case GenKind::E:
        case GenKind::F:
            return simple_root(s, g.index).parity;
        case GenKind::Xp:
        case GenKind::Xm:
            return simple_root(s, g.index).parity;
        default:
            return 0;
    }
}

int monomial_parity(const ParitySeq& s, const Monomial& m) {
    int p = 0;
    for (const auto& g : m) p ^= sym_parity(s, g);
    return p;
}

Weight sym_weight(const ParitySeq& s, const GenSym& g) {
    const int N = s.rank();
    switch (g.kind) {
        case GenKind::E: return simple_root(s, g.index).weight;
        case GenKind::F: return -simple_root(s, g.index).weight;
        case GenKind::K:
        case GenKind::Kinv:
        case GenKind::C:
        case GenKind::Cinv:
            return Weight::zero(N);
        case GenKind::Xp: {
            Weight w = simple_root(s, g.index).weight;
            w.delta += g.mode;
            return w;
        }
        case GenKind::Xm: {
            Weight w = -simple_root(s, g.index).weight;
            w.delta += g.mode;
            return w;
        }
        case GenKind::H: {
            Weight w = Weight::zero(N);
            w.delta = g.mode;
            return w;
        }
    }
    return Weight::zero(N);
}

Weight monomial_weight(const ParitySeq& s, const Monomial& m) {
    Weight w = Weight::zero(s.rank());
    for (const auto& g : m) w = w + sym_weight(s, g);
    return w;
}

Grading expr_grading(const ParitySeq& s, const Expr& e) {
    Grading g;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Weight w = monomial_weight(s, m);
        int p = monomial_parity(s, m);
        bool seen = false;
        for (const auto& st : g.strata)
            if (st.first == w && st.second == p) seen = true;
        if (!seen) g.strata.push_back({w, p});
        if (first) {
            g.weight = w;
            g.parity = p;
            first = false;
        } else if (!(w == g.weight) || p != g.parity) {
            g.homogeneous = false;
        }
    }
    if (first) {
        // zero expression: homogeneous of every grading; report weight 0
        g.weight = Weight::zero(s.rank());
    }
    return g;
}

namespace {

int checked_parity(const ParitySeq& s, const Expr& e, const char* role) {
    int p = 0;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        int mp = monomial_parity(s, m);
        if (first) {
            p = mp;
            first = false;
        } else if (mp != p) {
            throw InhomogeneousParity(std::string("bracket argument (") + role + ") is not parity-homogeneous");
        }
    }
    return p;
}

}  // namespace

Expr bracket_a(const ParitySeq& s, const Expr& x, const Expr& y, const FieldElem& a) {
    int px = checked_parity(s, x, "left");
    int py = checked_parity(s, y, "right");
    FieldElem sign = (px && py) ? FieldElem(-1) : FieldElem(1);
    return x * y - (y * x).scaled(sign * a);
}

Expr super_commutator(const ParitySeq& s, const Expr& x, const Expr& y) {
    return bracket_a(s, x, y, FieldElem::one());
}

Expr q_bracket(const ParitySeq& s, const Expr& x, const Expr& y) {
    if (x.is_zero() || y.is_zero()) return Expr();
    Grading gx = expr_grading(s, x), gy = expr_grading(s, y);
    if (!gx.homogeneous || !gy.homogeneous)
        throw InhomogeneousWeight("q-bracket arguments must be weight-homogeneous");
    int pairing = bilinear(s, gx.weight, gy.weight);
    return bracket_a(s, x, y, FieldElem::q_power(kBracketPairingSign * pairing));
}

Expr apply_morphism(const ParitySeq& s, const Expr& e,
                    const std::function<Expr(const GenSym&)>& image, bool anti) {
    Expr out;
    for (const auto& [m, c] : e.terms()) {
        Expr prod = Expr::scalar(c);
        if (!anti) {
            for (const auto& g : m) prod = prod * image(g);
        } else {
            // Koszul sign of full reversal: product over pairs a<b of
            // (-1)^{|g_a||g_b|}.
            int odd = 0, pairs = 0;
            for (const auto& g : m) {
                int p = sym_parity(s, g);
                pairs += p * odd;
                odd += p;
            }
            if (pairs % 2) prod = prod.scaled(FieldElem(-1));
            for (auto it = m.rbegin(); it != m.rend(); ++it) prod = prod * image(*it);
        }
        out += prod;
    }
    return out;
}

}  // namespace qaffine
