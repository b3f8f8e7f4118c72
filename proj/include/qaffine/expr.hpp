#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qaffine/lattice.hpp"
#include "qaffine/qfield.hpp"

namespace qaffine {

enum class GenKind : std::uint8_t { E, F, K, Kinv, Xp, Xm, H, C, Cinv };

// Atomic generator symbol. E/F/K/Kinv carry node indices in {0..N};
// Xp/Xm/H carry indices in {1..N} and an integer mode; C/Cinv carry nothing.
struct GenSym {
    GenKind kind = GenKind::E;
    std::int8_t index = 0;
    std::int32_t mode = 0;

    static GenSym E(int i) { return {GenKind::E, static_cast<std::int8_t>(i), 0}; }
    static GenSym F(int i) { return {GenKind::F, static_cast<std::int8_t>(i), 0}; }
    static GenSym K(int i) { return {GenKind::K, static_cast<std::int8_t>(i), 0}; }
    static GenSym Kinv(int i) { return {GenKind::Kinv, static_cast<std::int8_t>(i), 0}; }
    static GenSym Xp(int i, int r) { return {GenKind::Xp, static_cast<std::int8_t>(i), r}; }
    static GenSym Xm(int i, int r) { return {GenKind::Xm, static_cast<std::int8_t>(i), r}; }
    static GenSym H(int i, int t) { return {GenKind::H, static_cast<std::int8_t>(i), t}; }
    static GenSym C() { return {GenKind::C, 0, 0}; }
    static GenSym Cinv() { return {GenKind::Cinv, 0, 0}; }

    bool operator==(const GenSym& o) const { return kind == o.kind && index == o.index && mode == o.mode; }
    bool operator!=(const GenSym& o) const { return !(*this == o); }
    bool operator<(const GenSym& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (index != o.index) return index < o.index;
        return mode < o.mode;
    }

    bool is_dj() const { return kind == GenKind::E || kind == GenKind::F || kind == GenKind::K || kind == GenKind::Kinv; }
    std::string to_string() const;
};

using Monomial = std::vector<GenSym>;

struct MonHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.size();
        for (const auto& g : m) {
            std::size_t x = (static_cast<std::size_t>(g.kind) << 24) ^
                            (static_cast<std::size_t>(static_cast<std::uint8_t>(g.index)) << 16) ^
                            static_cast<std::size_t>(static_cast<std::uint32_t>(g.mode));
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::string monomial_to_string(const Monomial& m);

// Degree-then-lex order used for canonical printing and rewriting.
bool monomial_less(const Monomial& a, const Monomial& b);

// Finite linear combination of words in generator symbols with exact field
// coefficients. Plain multiplication is free word concatenation; all
// supersymmetry signs live in the bracket operations and morphisms.
class Expr {
public:
    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr scalar(FieldElem c);
    static Expr gen(GenSym g);
    static Expr monomial(Monomial m, FieldElem c = FieldElem::one());

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::unordered_map<Monomial, FieldElem, MonHash>& terms() const { return terms_; }

    void add_term(const Monomial& m, const FieldElem& c);

    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator-() const;
    Expr operator*(const Expr& o) const;
    Expr& operator+=(const Expr& o);
    Expr& operator-=(const Expr& o);
    Expr scaled(const FieldElem& c) const;
    bool operator==(const Expr& o) const;
    bool operator!=(const Expr& o) const { return !(*this == o); }

    // Monomials in canonical (degree, lex) order.
    std::vector<Monomial> sorted_monomials() const;
    const FieldElem* coeff(const Monomial& m) const;

    std::string to_string() const;
    std::size_t max_degree() const;

private:
    std::unordered_map<Monomial, FieldElem, MonHash> terms_;
};

// Z2-parity of a generator/monomial with respect to the parity sequence.
int sym_parity(const ParitySeq& s, const GenSym& g);
int monomial_parity(const ParitySeq& s, const Monomial& m);

// Weight of a generator/monomial in P_s.
Weight sym_weight(const ParitySeq& s, const GenSym& g);
Weight monomial_weight(const ParitySeq& s, const Monomial& m);

struct Grading {
    bool homogeneous = true;
    Weight weight;    // valid when homogeneous and expr nonzero
    int parity = 0;
    std::vector<std::pair<Weight, int>> strata;  // distinct (weight, parity) classes
};

// Never throws: inhomogeneity is reported as a value.
Grading expr_grading(const ParitySeq& s, const Expr& e);

// Sign convention for the weight pairing in the q-deformed bracket:
// [X,Y] with parameter q^(kBracketPairingSign * (wt X | wt Y)).
inline constexpr int kBracketPairingSign = -1;

// [x,y]_a = xy - (-1)^{|x||y|} a yx; arguments must be parity-homogeneous.
Expr bracket_a(const ParitySeq& s, const Expr& x, const Expr& y, const FieldElem& a);

// Supercommutator [x,y] = [x,y]_1.
Expr super_commutator(const ParitySeq& s, const Expr& x, const Expr& y);

// q-deformed bracket; arguments must be weight- and parity-homogeneous.
Expr q_bracket(const ParitySeq& s, const Expr& x, const Expr& y);

// Applies a generator-image map multiplicatively; with anti=true the word is
// reversed and the Koszul sign of the reversal (in the source algebra) is
// prepended.
Expr apply_morphism(const ParitySeq& s, const Expr& e,
                    const std::function<Expr(const GenSym&)>& image, bool anti = false);

}  // namespace qaffine
