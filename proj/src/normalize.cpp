#include "qaffine/normalize.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "qaffine/cartan.hpp"

namespace qaffine {

namespace {

bool is_k_kind(GenKind k) { return k == GenKind::K || k == GenKind::Kinv; }

// Per-parity-sequence state: Cartan data, straightening memo, relation sets.
struct Context {
    ParitySeq s;
    CartanMatrix A;
    std::vector<int> parity;  // of alpha_0..alpha_N

    std::unordered_map<Monomial, Expr, MonHash> memo;
    std::mutex memo_mutex;

    std::unique_ptr<RelationSet> e_rels, f_rels, combined;
    std::mutex rel_mutex;

    explicit Context(const ParitySeq& ps) : s(ps), A(cartan_matrix(ps)) {
        for (int i = 0; i <= ps.rank(); ++i) parity.push_back(simple_root(ps, i).parity);
    }
};

std::mutex g_registry_mutex;
std::map<std::vector<int>, std::shared_ptr<Context>> g_registry;

Context& context_for(const ParitySeq& s) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto it = g_registry.find(s.entries());
    if (it == g_registry.end())
        it = g_registry.emplace(s.entries(), std::make_shared<Context>(s)).first;
    return *it->second;
}

// One rewriting step at the leftmost violation; returns false when the word
// is already in F*K*E shape with a canonical K-run.
bool rewrite_step(Context& ctx, const Monomial& w, std::vector<std::pair<Monomial, FieldElem>>& out) {
    const CartanMatrix& A = ctx.A;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        const GenSym &x = w[p], &y = w[p + 1];
        auto rest = [&](GenSym a, GenSym b) {
            Monomial m;
            m.reserve(w.size());
            m.insert(m.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            m.push_back(a);
            m.push_back(b);
            m.insert(m.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
            return m;
        };
        auto drop_two = [&]() {
            Monomial m;
            m.reserve(w.size() - 2);
            m.insert(m.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
            m.insert(m.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
            return m;
        };
        if (x.kind == GenKind::E && y.kind == GenKind::F) {
            int sign = (ctx.parity[static_cast<std::size_t>(x.index)] &&
                        ctx.parity[static_cast<std::size_t>(y.index)])
                           ? -1
                           : 1;
            out.push_back({rest(y, x), FieldElem(sign)});
            if (x.index == y.index) {
                FieldElem inv_qq = FieldElem(LaurentPoly::one(), LaurentPoly::q(1) - LaurentPoly::q(-1));
                Monomial mk = drop_two();
                Monomial mkinv = mk;
                mk.insert(mk.begin() + static_cast<std::ptrdiff_t>(p), GenSym::K(x.index));
                mkinv.insert(mkinv.begin() + static_cast<std::ptrdiff_t>(p), GenSym::Kinv(x.index));
                out.push_back({mk, inv_qq});
                out.push_back({mkinv, -inv_qq});
            }
            return true;
        }
        if (x.kind == GenKind::E && is_k_kind(y.kind)) {
            int a = A.at(y.index, x.index);
            int e = y.kind == GenKind::K ? -a : a;
            out.push_back({rest(y, x), FieldElem::q_power(e)});
            return true;
        }
        if (is_k_kind(x.kind) && y.kind == GenKind::F) {
            int a = A.at(x.index, y.index);
            int e = x.kind == GenKind::K ? -a : a;
            out.push_back({rest(y, x), FieldElem::q_power(e)});
            return true;
        }
        if (is_k_kind(x.kind) && is_k_kind(y.kind)) {
            if (x.index == y.index && x.kind != y.kind) {
                out.push_back({drop_two(), FieldElem::one()});
                return true;
            }
            auto key = [](const GenSym& g) { return std::pair<int, int>(g.index, g.kind == GenKind::Kinv); };
            if (key(y) < key(x)) {
                out.push_back({rest(y, x), FieldElem::one()});
                return true;
            }
        }
    }
    return false;
}

Expr straighten_monomial(Context& ctx, const Monomial& w) {
    {
        std::lock_guard<std::mutex> lock(ctx.memo_mutex);
        auto it = ctx.memo.find(w);
        if (it != ctx.memo.end()) return it->second;
    }
    std::vector<std::pair<Monomial, FieldElem>> step;
    Expr result;
    if (!rewrite_step(ctx, w, step)) {
        result = Expr::monomial(w);
    } else {
        for (auto& [m, c] : step) result += straighten_monomial(ctx, m).scaled(c);
    }
    {
        std::lock_guard<std::mutex> lock(ctx.memo_mutex);
        ctx.memo.emplace(w, result);
    }
    return result;
}

}  // namespace

Expr straighten(const ParitySeq& s, const Expr& e) {
    Context& ctx = context_for(s);
    for (const auto& [m, c] : e.terms())
        for (const auto& g : m)
            if (!g.is_dj())
                throw UnsupportedGenerator("straighten handles E/F/K generators only, got " + g.to_string());
    Expr out;
    for (const auto& [m, c] : e.terms()) out += straighten_monomial(ctx, m).scaled(c);
    return out;
}

std::vector<Monomial> weight_monomials(const ParitySeq& s, const Weight& w, GenKind alphabet) {
    if (alphabet != GenKind::E && alphabet != GenKind::F)
        throw Error("weight_monomials alphabet must be E or F");
    Weight target = alphabet == GenKind::E ? w : -w;
    std::vector<int> coeffs;
    if (!decompose_in_simple_roots(s, target, coeffs)) return {};
    for (int c : coeffs)
        if (c < 0) return {};
    Monomial letters;
    for (int i = 0; i <= s.rank(); ++i)
        for (int k = 0; k < coeffs[static_cast<std::size_t>(i)]; ++k)
            letters.push_back(alphabet == GenKind::E ? GenSym::E(i) : GenSym::F(i));
    std::vector<Monomial> words;
    std::sort(letters.begin(), letters.end());
    do {
        words.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return words;
}

namespace {

Expr gen_of(GenKind alphabet, int i) {
    return Expr::gen(alphabet == GenKind::E ? GenSym::E(i) : GenSym::F(i));
}

RelationSet build_serre_relations(const ParitySeq& s, GenKind alphabet) {
    RelationSet set;
    set.name = alphabet == GenKind::E ? "serre-E" : "serre-F";
    const int N = s.rank();
    const CartanMatrix A = cartan_matrix(s);
    const DynkinDiagram diag = dynkin_diagram(s);
    auto qb = [&](const Expr& x, const Expr& y) { return q_bracket(s, x, y); };
    auto add = [&](const std::string& id, Expr e) {
        if (e.is_zero()) return;
        Grading g = expr_grading(s, e);
        set.elements.push_back({id, std::move(e), g.weight, g.parity});
    };

    // vanishing supercommutators and isotropic squares
    for (int i = 0; i <= N; ++i) {
        if (A.at(i, i) == 0) add("square(" + std::to_string(i) + ")", gen_of(alphabet, i) * gen_of(alphabet, i));
        for (int j = i + 1; j <= N; ++j)
            if (A.at(i, j) == 0)
                add("comm(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    super_commutator(s, gen_of(alphabet, i), gen_of(alphabet, j)));
    }

    // classical-style q-Serre strings
    for (int i = 0; i <= N; ++i) {
        if (A.at(i, i) == 0) continue;
        for (int j = 0; j <= N; ++j) {
            if (j == i || A.at(i, j) == 0) continue;
            if ((2 * A.at(i, j)) % A.at(i, i) != 0) continue;
            int count = 1 - 2 * A.at(i, j) / A.at(i, i);
            if (count < 2) continue;
            Expr e = gen_of(alphabet, j);
            for (int k = 0; k < count; ++k) e = qb(gen_of(alphabet, i), e);
            add("serre(" + std::to_string(i) + "," + std::to_string(j) + ")", e);
        }
    }

    // odd-node relation around an isotropic middle node
    auto edge_mult = [&](int a, int b) {
        const DynkinEdge* e = diag.edge_between(a, b);
        return e ? e->multiplicity : 0;
    };
    auto arrow_to = [&](int a, int b) -> int {
        const DynkinEdge* e = diag.edge_between(a, b);
        return e && e->arrow_to ? *e->arrow_to : -1;
    };
    for (int j = 0; j <= N; ++j) {
        if (A.at(j, j) != 0) continue;
        for (int i = 0; i <= N; ++i) {
            for (int k = 0; k <= N; ++k) {
                if (i == j || k == j || i == k) continue;
                if (A.at(i, j) == 0 || A.at(i, j) != -A.at(j, k)) continue;
                if (edge_mult(i, j) != 1) continue;
                int mjk = edge_mult(j, k);
                if (mjk != 1 && !(mjk == 2 && arrow_to(j, k) == k)) continue;
                Expr e = qb(qb(qb(gen_of(alphabet, i), gen_of(alphabet, j)), gen_of(alphabet, k)),
                            gen_of(alphabet, j));
                add("serre_odd(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                    e);
            }
        }
    }

    // four-node relation at the quadruple-bond end of the orbit
    if (N >= 3 && s.at(1) == -1 && s.at(2) == 1 && s.at(3) == 1) {
        int i = 3, j = 2, k = 1, l = 0;
        Expr e = qb(gen_of(alphabet, i), gen_of(alphabet, j));
        e = qb(e, gen_of(alphabet, k));
        e = qb(e, gen_of(alphabet, l));
        e = qb(e, gen_of(alphabet, k));
        e = qb(e, gen_of(alphabet, j));
        e = qb(e, gen_of(alphabet, k));
        add("serre4(3,2,1,0)", e);
    }

    // rank-two chain of double bonds
    if (N == 2 && s.at(1) == -1 && s.at(2) == -1) {
        Expr B = qb(gen_of(alphabet, 2), gen_of(alphabet, 1));
        Expr lhs = qb(B, qb(B, qb(B, gen_of(alphabet, 0))));
        Expr inner = qb(gen_of(alphabet, 2),
                        qb(gen_of(alphabet, 2), qb(gen_of(alphabet, 1), gen_of(alphabet, 0))));
        Expr rhs = qb(qb(B, inner), gen_of(alphabet, 1));
        int pk = simple_root(s, 2).parity;
        FieldElem coeff = pk ? FieldElem(1) + qint(2) : FieldElem(1) - qint(2);
        add("serre_cb2", lhs - rhs.scaled(coeff));
    }

    // triangle relation
    if (N >= 2 && s.at(1) == 1 && s.at(2) == -1) {
        int nodes[3] = {0, 1, 2};
        // guard, symmetric in the three nodes
        int a01 = A.at(0, 1), a02 = A.at(0, 2), a12 = A.at(1, 2);
        int p0 = simple_root(s, 0).parity, p1 = simple_root(s, 1).parity, p2 = simple_root(s, 2).parity;
        bool guard = a01 * a02 * a12 != 0 && a01 + a02 + a12 == 0 &&
                     ((p0 * p1 + p1 * p2 + p0 * p2) % 2 == 1);
        if (guard) {
            int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto& pr : perm) {
                int i = nodes[pr[0]], j = nodes[pr[1]], k = nodes[pr[2]];
                int pi = simple_root(s, i).parity, pj = simple_root(s, j).parity,
                    pk = simple_root(s, k).parity;
                FieldElem ck = qint(A.at(i, k));
                FieldElem cj = qint(A.at(i, j));
                if (pi * pk) ck = -ck;
                if (pi * pj) cj = -cj;
                Expr lhs = qb(qb(gen_of(alphabet, i), gen_of(alphabet, j)), gen_of(alphabet, k)).scaled(ck);
                Expr rhs = qb(qb(gen_of(alphabet, i), gen_of(alphabet, k)), gen_of(alphabet, j)).scaled(cj);
                add("serre_tri(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                    lhs - rhs);
            }
        }
    }

    return set;
}

}  // namespace

const RelationSet& serre_relations(const ParitySeq& s, GenKind alphabet) {
    Context& ctx = context_for(s);
    std::lock_guard<std::mutex> lock(ctx.rel_mutex);
    auto& slot = alphabet == GenKind::E ? ctx.e_rels : ctx.f_rels;
    if (!slot) slot = std::make_unique<RelationSet>(build_serre_relations(s, alphabet));
    return *slot;
}

const RelationSet& verify_relations(const ParitySeq& s) {
    const RelationSet& e = serre_relations(s, GenKind::E);
    const RelationSet& f = serre_relations(s, GenKind::F);
    Context& ctx = context_for(s);
    std::lock_guard<std::mutex> lock(ctx.rel_mutex);
    if (!ctx.combined) {
        ctx.combined = std::make_unique<RelationSet>();
        ctx.combined->name = "serre-EF";
        ctx.combined->elements = e.elements;
        ctx.combined->elements.insert(ctx.combined->elements.end(), f.elements.begin(), f.elements.end());
    }
    return *ctx.combined;
}

std::string to_string(VerifyStatus st) {
    switch (st) {
        case VerifyStatus::Proved: return "Proved";
        case VerifyStatus::Inconclusive: return "Inconclusive";
        case VerifyStatus::RefutedByGrading: return "RefutedByGrading";
    }
    return "?";
}

Expr replay_certificate(const Certificate& cert, const RelationSet& rels) {
    Expr out;
    for (const auto& t : cert.terms) {
        const Expr& r = rels.elements[static_cast<std::size_t>(t.rel_index)].expr;
        out += (Expr::monomial(t.left) * r * Expr::monomial(t.right)).scaled(t.coeff);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Column echelon structure for incremental span membership with early exit.
struct SpanSolver {
    struct Pivot {
        Monomial mon;
        std::map<Monomial, FieldElem> vec;           // normalized: vec[mon] = 1
        std::vector<std::pair<int, FieldElem>> comb; // column indices + coeffs
    };
    std::vector<Pivot> pivots;

    static const Monomial* leading(const std::map<Monomial, FieldElem>& v) {
        const Monomial* best = nullptr;
        for (const auto& [m, c] : v)
            if (!c.is_zero() && (!best || monomial_less(*best, m))) best = &m;
        return best;
    }

    // Eliminates pivot monomials from v, recording multipliers so that
    // v_initial = v_final + sum comb_i * column_i throughout.
    void reduce(std::map<Monomial, FieldElem>& v, std::vector<std::pair<int, FieldElem>>& comb) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : pivots) {
                auto it = v.find(p.mon);
                if (it == v.end() || it->second.is_zero()) continue;
                FieldElem f = it->second;
                for (const auto& [m, c] : p.vec) {
                    auto vit = v.find(m);
                    if (vit == v.end()) {
                        FieldElem nc = -(f * c);
                        if (!nc.is_zero()) v.emplace(m, nc);
                    } else {
                        vit->second -= f * c;
                        if (vit->second.is_zero()) v.erase(vit);
                    }
                }
                for (const auto& [ci, cc] : p.comb) comb.push_back({ci, cc * f});
                changed = true;
            }
        }
    }

    // Adds a column; returns true if it enlarged the span. The stored pivot
    // satisfies p.vec = sum p.comb_i * column_i with p.vec[p.mon] = 1.
    bool add_column(int index, const Expr& col) {
        std::map<Monomial, FieldElem> v;
        for (const auto& [m, c] : col.terms()) v.emplace(m, c);
        std::vector<std::pair<int, FieldElem>> used;
        reduce(v, used);
        const Monomial* lead = leading(v);
        if (!lead) return false;
        FieldElem scale = v.at(*lead).inv();
        Pivot p;
        p.mon = *lead;
        for (auto& [m, c] : v) {
            FieldElem x = c * scale;
            if (!x.is_zero()) p.vec.emplace(m, x);
        }
        // v_final = column - sum used_i * column_i
        p.comb.push_back({index, scale});
        for (auto& [ci, cc] : used) p.comb.push_back({ci, -(cc * scale)});
        pivots.push_back(std::move(p));
        return true;
    }

    // Attempts target = span combination; on success fills comb with
    // column-index coefficients such that target = sum comb_i * column_i.
    bool solve(const Expr& target, std::vector<std::pair<int, FieldElem>>& comb) const {
        std::map<Monomial, FieldElem> v;
        for (const auto& [m, c] : target.terms()) v.emplace(m, c);
        std::vector<std::pair<int, FieldElem>> used;
        reduce(v, used);
        for (const auto& [m, c] : v)
            if (!c.is_zero()) return false;
        comb.clear();
        std::map<int, FieldElem> acc;
        for (auto& [ci, cc] : used) {
            auto [it, fresh] = acc.emplace(ci, cc);
            if (!fresh) it->second += cc;
        }
        for (auto& [ci, cc] : acc)
            if (!cc.is_zero()) comb.push_back({ci, cc});
        return true;
    }
};

struct ColumnRef {
    Monomial left;
    int rel_index;
    Monomial right;
};

// Splits a weight multiset into ordered (left, right) word pairs around a
// relation and streams the columns into the solver until the target lands
// in the span.
bool span_search(const ParitySeq& s, const Expr& target, const Weight& w, GenKind alphabet,
                 const RelationSet& rels, int max_degree, Certificate& cert_out) {
    SpanSolver solver;
    std::vector<ColumnRef> refs;
    std::vector<Expr> cols;
    auto try_finish = [&]() {
        std::vector<std::pair<int, FieldElem>> comb;
        if (!solver.solve(target, comb)) return false;
        for (auto& [ci, cc] : comb) {
            const auto& ref = refs[static_cast<std::size_t>(ci)];
            cert_out.terms.push_back({ref.left, ref.rel_index,
                                      rels.elements[static_cast<std::size_t>(ref.rel_index)].id,
                                      ref.right, cc});
        }
        return true;
    };
    if (try_finish()) return true;
    for (std::size_t ri = 0; ri < rels.elements.size(); ++ri) {
        const auto& rel = rels.elements[ri];
        Weight rem = w - rel.weight;
        std::vector<int> coeffs;
        Weight target_rem = alphabet == GenKind::E ? rem : -rem;
        if (!decompose_in_simple_roots(s, target_rem, coeffs)) continue;
        bool ok = true;
        int total = 0;
        for (int c : coeffs) {
            if (c < 0) ok = false;
            total += c;
        }
        if (!ok) continue;
        if (max_degree >= 0 &&
            total + static_cast<int>(rel.expr.max_degree()) > max_degree)
            continue;
        // enumerate left-multiset subsets of the complement multiset
        std::vector<int> take(coeffs.size(), 0);
        for (;;) {
            // words for the left part and right part
            Monomial lbase, rbase;
            for (int i = 0; i <= s.rank(); ++i) {
                GenSym g = alphabet == GenKind::E ? GenSym::E(i) : GenSym::F(i);
                for (int k = 0; k < take[static_cast<std::size_t>(i)]; ++k) lbase.push_back(g);
                for (int k = 0; k < coeffs[static_cast<std::size_t>(i)] - take[static_cast<std::size_t>(i)]; ++k)
                    rbase.push_back(g);
            }
            std::sort(lbase.begin(), lbase.end());
            std::vector<Monomial> lefts;
            do {
                lefts.push_back(lbase);
            } while (std::next_permutation(lbase.begin(), lbase.end()));
            std::sort(rbase.begin(), rbase.end());
            std::vector<Monomial> rights;
            do {
                rights.push_back(rbase);
            } while (std::next_permutation(rbase.begin(), rbase.end()));
            for (const auto& u : lefts) {
                for (const auto& v : rights) {
                    Expr col = Expr::monomial(u) * rel.expr * Expr::monomial(v);
                    int idx = static_cast<int>(refs.size());
                    refs.push_back({u, static_cast<int>(ri), v});
                    if (solver.add_column(idx, col) && try_finish()) return true;
                }
            }
            // next subset of the multiset
            std::size_t pos = 0;
            while (pos < take.size()) {
                if (take[pos] < coeffs[pos]) {
                    ++take[pos];
                    for (std::size_t q = 0; q < pos; ++q) take[q] = 0;
                    break;
                }
                ++pos;
            }
            if (pos == take.size()) break;
        }
    }
    return try_finish();
}

// Greatest-monomial reduction against relation leading words. Appends the
// performed subtractions to cert and returns the irreducible remainder.
Expr reduce_by_relations(const Expr& e, const RelationSet& rels, Certificate& cert) {
    struct Lead {
        Monomial mon;
        FieldElem coeff;
    };
    std::vector<Lead> leads;
    for (const auto& rel : rels.elements) {
        auto ms = rel.expr.sorted_monomials();
        Lead l;
        l.mon = ms.back();
        l.coeff = *rel.expr.coeff(l.mon);
        leads.push_back(std::move(l));
    }
    Expr rem = e;
    bool progress = true;
    while (progress && !rem.is_zero()) {
        progress = false;
        // find the largest reducible monomial
        auto mons = rem.sorted_monomials();
        for (auto it = mons.rbegin(); it != mons.rend() && !progress; ++it) {
            const Monomial& M = *it;
            for (std::size_t ri = 0; ri < leads.size() && !progress; ++ri) {
                const Monomial& L = leads[ri].mon;
                if (L.size() > M.size()) continue;
                for (std::size_t off = 0; off + L.size() <= M.size(); ++off) {
                    bool match = true;
                    for (std::size_t k = 0; k < L.size(); ++k)
                        if (!(M[off + k] == L[k])) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    Monomial u(M.begin(), M.begin() + static_cast<std::ptrdiff_t>(off));
                    Monomial v(M.begin() + static_cast<std::ptrdiff_t>(off + L.size()), M.end());
                    FieldElem f = *rem.coeff(M) / leads[ri].coeff;
                    rem -= (Expr::monomial(u) * rels.elements[ri].expr * Expr::monomial(v)).scaled(f);
                    cert.terms.push_back({u, static_cast<int>(ri), rels.elements[ri].id, v, f});
                    progress = true;
                    break;
                }
            }
        }
    }
    return rem;
}

GenKind alphabet_of(const Expr& e) {
    GenKind kind = GenKind::E;
    bool seen = false;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& g : m) {
            if (g.kind != GenKind::E && g.kind != GenKind::F)
                throw UnsupportedGenerator("ideal membership expects a pure E- or F-expression");
            if (!seen) {
                kind = g.kind;
                seen = true;
            } else if (g.kind != kind) {
                throw UnsupportedGenerator("ideal membership expects a single-alphabet expression");
            }
        }
    }
    return kind;
}

}  // namespace

VerifyReport ideal_contains(const ParitySeq& s, const Expr& e, const RelationSet& rels, Bounds bounds) {
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.bounds_used = bounds;
    if (e.is_zero()) {
        rep.status = VerifyStatus::Proved;
        rep.certificate = Certificate{};
        rep.millis = ms_since(t0);
        return rep;
    }
    Grading g = expr_grading(s, e);
    if (!g.homogeneous) throw InhomogeneousInput("ideal_contains requires homogeneous input");
    GenKind alphabet = alphabet_of(e);
    if (bounds.max_degree < 0) bounds.max_degree = static_cast<int>(e.max_degree()) + 2;
    rep.bounds_used = bounds;

    Certificate cert;
    Expr rem = reduce_by_relations(e, rels, cert);
    if (rem.is_zero()) {
        rep.status = VerifyStatus::Proved;
        rep.certificate = std::move(cert);
        rep.millis = ms_since(t0);
        return rep;
    }
    if (span_search(s, rem, g.weight, alphabet, rels, bounds.max_degree, cert)) {
        rep.status = VerifyStatus::Proved;
        rep.certificate = std::move(cert);
        rep.millis = ms_since(t0);
        return rep;
    }
    rep.status = VerifyStatus::Inconclusive;
    rep.detail = "bounded span at weight " + g.weight.to_string() + " does not contain the remainder";
    rep.millis = ms_since(t0);
    return rep;
}

namespace {

struct Block {
    Monomial f_word, k_word, e_word;
};

Block split_block(const Monomial& m) {
    Block b;
    for (const auto& g : m) {
        if (g.kind == GenKind::F)
            b.f_word.push_back(g);
        else if (is_k_kind(g.kind))
            b.k_word.push_back(g);
        else
            b.e_word.push_back(g);
    }
    return b;
}

bool any_relation_fits(const ParitySeq& s, const RelationSet& rels, const Weight& w, GenKind alphabet) {
    for (const auto& rel : rels.elements) {
        Weight rem = w - rel.weight;
        Weight t = alphabet == GenKind::E ? rem : -rem;
        std::vector<int> coeffs;
        if (!decompose_in_simple_roots(s, t, coeffs)) continue;
        bool ok = true;
        for (int c : coeffs)
            if (c < 0) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

VerifyReport verify_zero(const ParitySeq& s, const Expr& e, Bounds bounds) {
    auto t0 = Clock::now();
    VerifyReport rep;
    Expr st = straighten(s, e);
    if (bounds.max_degree < 0) bounds.max_degree = static_cast<int>(st.max_degree()) + 2;
    rep.bounds_used = bounds;
    if (st.is_zero()) {
        rep.status = VerifyStatus::Proved;
        rep.certificate = Certificate{};
        rep.millis = ms_since(t0);
        return rep;
    }
    const RelationSet& erels = serre_relations(s, GenKind::E);
    const RelationSet& frels = serre_relations(s, GenKind::F);
    verify_relations(s);  // certificate indices refer to the combined set
    int f_offset = static_cast<int>(erels.elements.size());

    // group by (F-word, K-word, E-weight); attempt E-side certification
    using BlockKey = std::tuple<Monomial, Monomial, Weight>;
    std::map<BlockKey, Expr> eblocks;
    for (const auto& [m, c] : st.terms()) {
        Block b = split_block(m);
        eblocks[{b.f_word, b.k_word, monomial_weight(s, b.e_word)}].add_term(b.e_word, c);
    }
    Certificate cert;
    Expr leftover;
    for (auto& [key, expr] : eblocks) {
        bool try_e = !(expr.term_count() == 1 && expr.terms().begin()->first.empty());
        VerifyReport sub;
        if (try_e) {
            sub = ideal_contains(s, expr, erels, bounds);
        } else {
            sub.status = VerifyStatus::Inconclusive;
        }
        if (sub.status == VerifyStatus::Proved) {
            Monomial prefix = std::get<0>(key);
            prefix.insert(prefix.end(), std::get<1>(key).begin(), std::get<1>(key).end());
            for (auto& t : sub.certificate->terms) {
                Monomial left = prefix;
                left.insert(left.end(), t.left.begin(), t.left.end());
                cert.terms.push_back({left, t.rel_index, t.rel_id, t.right, t.coeff});
            }
        } else {
            for (const auto& [em, ec] : expr.terms()) {
                Monomial full = std::get<0>(key);
                full.insert(full.end(), std::get<1>(key).begin(), std::get<1>(key).end());
                full.insert(full.end(), em.begin(), em.end());
                leftover.add_term(full, ec);
            }
        }
    }

    if (!leftover.is_zero()) {
        // group the remainder by (K-word, E-word, F-weight); F-side pass
        std::map<BlockKey, Expr> fblocks;
        for (const auto& [m, c] : leftover.terms()) {
            Block b = split_block(m);
            fblocks[{b.k_word, b.e_word, monomial_weight(s, b.f_word)}].add_term(b.f_word, c);
        }
        Expr still;
        for (auto& [key, expr] : fblocks) {
            bool try_f = !(expr.term_count() == 1 && expr.terms().begin()->first.empty());
            VerifyReport sub;
            if (try_f) {
                sub = ideal_contains(s, expr, frels, bounds);
            } else {
                sub.status = VerifyStatus::Inconclusive;
            }
            if (sub.status == VerifyStatus::Proved) {
                Monomial suffix = std::get<0>(key);
                suffix.insert(suffix.end(), std::get<1>(key).begin(), std::get<1>(key).end());
                for (auto& t : sub.certificate->terms) {
                    Monomial right = t.right;
                    right.insert(right.end(), suffix.begin(), suffix.end());
                    cert.terms.push_back({t.left, f_offset + t.rel_index, t.rel_id, right, t.coeff});
                }
            } else {
                for (const auto& [fm, fc] : expr.terms()) {
                    Monomial full = fm;
                    full.insert(full.end(), std::get<0>(key).begin(), std::get<0>(key).end());
                    full.insert(full.end(), std::get<1>(key).begin(), std::get<1>(key).end());
                    still.add_term(full, fc);
                }
            }
        }
        if (!still.is_zero()) {
            // a leftover block with no applicable relation on either side
            // cannot vanish; otherwise stay agnostic
            bool refutable = true;
            for (const auto& [m, c] : still.terms()) {
                Block b = split_block(m);
                Weight we = monomial_weight(s, b.e_word);
                Weight wf = monomial_weight(s, b.f_word);
                if (any_relation_fits(s, erels, we, GenKind::E) ||
                    any_relation_fits(s, frels, wf, GenKind::F)) {
                    refutable = false;
                    break;
                }
            }
            rep.status = refutable ? VerifyStatus::RefutedByGrading : VerifyStatus::Inconclusive;
            rep.detail = std::to_string(still.term_count()) + " straightened terms not certified";
            rep.millis = ms_since(t0);
            return rep;
        }
    }
    rep.status = VerifyStatus::Proved;
    rep.certificate = std::move(cert);
    rep.millis = ms_since(t0);
    return rep;
}

void clear_normalize_caches() {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    g_registry.clear();
}

}  // namespace qaffine
