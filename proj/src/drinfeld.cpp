#include "qaffine/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "qaffine/cartan.hpp"

namespace qaffine {

namespace {

Expr Xp(int i, int r) { return Expr::gen(GenSym::Xp(i, r)); }
Expr Xm(int i, int r) { return Expr::gen(GenSym::Xm(i, r)); }
Expr Xg(int sign, int i, int r) { return sign > 0 ? Xp(i, r) : Xm(i, r); }

Expr c_power(int k) {
    Monomial m;
    for (int r = 0; r < k; ++r) m.push_back(GenSym::C());
    for (int r = 0; r < -k; ++r) m.push_back(GenSym::Cinv());
    return Expr::monomial(m);
}

FieldElem inv_q_minus_qinv() {
    return FieldElem(LaurentPoly::one(), LaurentPoly::q(1) - LaurentPoly::q(-1));
}

std::string mode_list(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

}  // namespace

FieldElem u_coeff(const ParitySeq& s, int i, int j, int r) {
    if (r == 0) throw ZeroMode("u coefficient needs a nonzero mode");
    const int N = s.rank();
    const CartanMatrix A = cartan_matrix(s);
    FieldElem rinv = FieldElem(LaurentPoly::one(), LaurentPoly::constant(r));
    if (i != N || j != N) return qint(r * A.at(i, j)) * rinv;
    int pN = simple_root(s, N).parity;
    FieldElem first = qint(2 * r * A.at(N, N)) * rinv;
    FieldElem second = qint(r * A.at(N, N)) * rinv;
    // (-1)^{(|N|+1) r}
    if (((pN + 1) * r) % 2 != 0) second = -second;
    return first - second;
}

SerreGen serre_gen(const ParitySeq& s, SerreKind kind, const std::vector<int>& indices,
                   const std::vector<int>& modes, int sign) {
    const int N = s.rank();
    const CartanMatrix A = cartan_matrix(s);
    auto qb = [&](const Expr& x, const Expr& y) { return q_bracket(s, x, y); };
    SerreGen g;
    g.kind = kind;
    g.indices = indices;
    g.modes = modes;
    g.sign = sign;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) throw GuardViolation(what);
    };
    switch (kind) {
        case SerreKind::Sd: {
            need(indices.size() == 2 && modes.size() == 2, "Sd takes (i,j;r,s)");
            int i = indices[0], j = indices[1];
            need(i >= 1 && i <= N && j >= 1 && j <= N, "Sd indices in I");
            need(A.at(i, j) == 0, "Sd needs A_ij = 0");
            g.element = super_commutator(s, Xg(sign, i, modes[0]), Xg(sign, j, modes[1]));
            g.label = "Sd(" + std::to_string(i) + "," + std::to_string(j) + ";" + mode_list(modes) + ")";
            break;
        }
        case SerreKind::Se: {
            need(indices.size() == 2 && modes.size() == 2, "Se takes (i,j;r,s)");
            int i = indices[0], j = indices[1];
            need(i >= 1 && i <= N && j >= 1 && j <= N, "Se indices in I");
            need(i != N, "Se needs i != N");
            need(A.at(i, j) != 0 && A.at(i, i) != 0, "Se needs A_ij A_ii != 0");
            Expr x = Xg(sign, i, modes[0]);
            g.element = qb(x, qb(x, Xg(sign, j, modes[1])));
            g.label = "Se(" + std::to_string(i) + "," + std::to_string(j) + ";" + mode_list(modes) + ")";
            break;
        }
        case SerreKind::So: {
            need(indices.size() == 1 && modes.size() == 3, "So takes (i;r,s,t)");
            int i = indices[0];
            need(i >= 2 && i <= N - 1, "So needs 1 < i < N");
            need(A.at(i, i) == 0, "So needs A_ii = 0");
            Expr x = Xg(sign, i, modes[0]);
            g.element = qb(x, qb(Xg(sign, i + 1, modes[1]), qb(x, Xg(sign, i - 1, modes[2]))));
            g.label = "So(" + std::to_string(i) + ";" + mode_list(modes) + ")";
            break;
        }
        case SerreKind::SN: {
            need(indices.empty() && modes.size() == 2, "SN takes (r,s)");
            need(N >= 2, "SN needs rank at least two");
            Expr x = Xg(sign, N, modes[0]);
            g.element = qb(x, qb(x, qb(x, Xg(sign, N - 1, modes[1]))));
            g.label = "SN(" + mode_list(modes) + ")";
            break;
        }
    }
    g.label += sign > 0 ? "+" : "-";
    return g;
}

RelId rel_id_from_string(const std::string& name) {
    if (name == "KK") return RelId::KK;
    if (name == "KX") return RelId::KX;
    if (name == "HH") return RelId::HH;
    if (name == "HX") return RelId::HX;
    if (name == "XXK") return RelId::XXK;
    if (name == "S1") return RelId::S1;
    if (name == "XXzero") return RelId::XXzero;
    if (name == "Serre1") return RelId::Serre1;
    if (name == "SerreOdd") return RelId::SerreOdd;
    if (name == "SerreN") return RelId::SerreN;
    if (name == "CubicN") return RelId::CubicN;
    if (name == "QuadraticN") return RelId::QuadraticN;
    if (name == "CubicNN1") return RelId::CubicNN1;
    throw BadModes("unknown relation id: " + name);
}

std::string to_string(RelId id) {
    switch (id) {
        case RelId::KK: return "KK";
        case RelId::KX: return "KX";
        case RelId::HH: return "HH";
        case RelId::HX: return "HX";
        case RelId::XXK: return "XXK";
        case RelId::S1: return "S1";
        case RelId::XXzero: return "XXzero";
        case RelId::Serre1: return "Serre1";
        case RelId::SerreOdd: return "SerreOdd";
        case RelId::SerreN: return "SerreN";
        case RelId::CubicN: return "CubicN";
        case RelId::QuadraticN: return "QuadraticN";
        case RelId::CubicNN1: return "CubicNN1";
    }
    return "?";
}

RelationInstance relation_instance(const ParitySeq& s, RelId id, const std::vector<int>& indices,
                                   const std::vector<int>& modes, int sign) {
    const int N = s.rank();
    const CartanMatrix A = cartan_matrix(s);
    RelationInstance inst;
    inst.id = id;
    inst.indices = indices;
    inst.modes = modes;
    inst.sign = sign;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) throw BadModes(what);
    };
    auto check_i = [&](int i) {
        need(i >= 1 && i <= N, "index out of I");
        return i;
    };
    auto ba = [&](const Expr& x, const Expr& y, const FieldElem& a) { return bracket_a(s, x, y, a); };
    switch (id) {
        case RelId::KK: {
            need(indices.size() == 2 && modes.empty(), "KK takes (i,j)");
            Expr ki = Expr::gen(GenSym::K(check_i(indices[0])));
            Expr kj = Expr::gen(GenSym::K(check_i(indices[1])));
            inst.element = ki * kj - kj * ki;
            break;
        }
        case RelId::KX: {
            need(indices.size() == 2 && modes.size() == 1, "KX takes (i,j;r)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            Expr k = Expr::gen(GenSym::K(i));
            Expr x = Xg(sign, j, modes[0]);
            inst.element = k * x - (x * k).scaled(FieldElem::q_power(sign * A.at(i, j)));
            break;
        }
        case RelId::HH: {
            need(indices.size() == 2 && modes.size() == 2, "HH takes (i,j;t,u)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            int t = modes[0], u = modes[1];
            need(t != 0 && u != 0, "HH modes nonzero");
            Expr hi = Expr::gen(GenSym::H(i, t)), hj = Expr::gen(GenSym::H(j, u));
            inst.element = hi * hj - hj * hi;
            if (t + u == 0)
                inst.element -= (c_power(t) - c_power(-t)).scaled(u_coeff(s, i, j, t) * inv_q_minus_qinv());
            break;
        }
        case RelId::HX: {
            need(indices.size() == 2 && modes.size() == 2, "HX takes (i,j;t,r)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            int t = modes[0], r = modes[1];
            need(t != 0, "HX mode t nonzero");
            Expr h = Expr::gen(GenSym::H(i, t));
            Expr x = Xg(sign, j, r);
            Expr lhs = h * x - x * h;
            int cpow = sign > 0 ? -(t + std::abs(t)) / 2 : -(t - std::abs(t)) / 2;
            Expr rhs = (c_power(cpow) * Xg(sign, j, r + t)).scaled(u_coeff(s, i, j, t));
            if (sign < 0) rhs = -rhs;
            inst.element = lhs - rhs;
            break;
        }
        case RelId::XXK: {
            need(indices.size() == 2 && modes.size() == 2, "XXK takes (i,j;r,t)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            int r = modes[0], t = modes[1], p = r + t;
            inst.element = super_commutator(s, Xp(i, r), Xm(j, t));
            if (i == j) {
                if (p == 0) {
                    Expr k = c_power(r) * Expr::gen(GenSym::K(i));
                    Expr kinv = c_power(-r) * Expr::gen(GenSym::Kinv(i));
                    inst.element -= (k - kinv).scaled(inv_q_minus_qinv());
                } else if (p > 0) {
                    inst.element -= c_power(-t) * super_commutator(s, Xp(i, p), Xm(i, 0));
                } else {
                    inst.element -= c_power(-r) * super_commutator(s, Xp(i, 0), Xm(i, p));
                }
            }
            break;
        }
        case RelId::S1: {
            need(indices.size() == 2 && modes.size() == 2, "S1 takes (i,j;r,t)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            need(A.at(i, j) != 0 && (i != j || i != N), "S1 guard");
            int r = modes[0], t = modes[1];
            FieldElem a = FieldElem::q_power(-sign * A.at(i, j));
            Expr first = ba(Xg(sign, i, r), Xg(sign, j, t + 1), a);
            Expr second = ba(Xg(sign, j, t), Xg(sign, i, r + 1), a);
            int pi = simple_root(s, i).parity, pj = simple_root(s, j).parity;
            if (pi && pj) second = -second;
            inst.element = first + second;
            break;
        }
        case RelId::XXzero: {
            need(indices.size() == 2 && modes.size() == 2, "XXzero takes (i,j;r,t)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            need(A.at(i, j) == 0, "XXzero needs A_ij = 0");
            inst.element = super_commutator(s, Xg(sign, i, modes[0]), Xg(sign, j, modes[1]));
            break;
        }
        case RelId::Serre1: {
            need(indices.size() == 2 && modes.size() == 3, "Serre1 takes (i,j;r1,r2,t)");
            int i = check_i(indices[0]), j = check_i(indices[1]);
            need(A.at(i, j) != 0 && A.at(i, i) != 0 && i != N, "Serre1 guard");
            auto one = [&](int ra, int rb) {
                return q_bracket(s, Xg(sign, i, ra), q_bracket(s, Xg(sign, i, rb), Xg(sign, j, modes[2])));
            };
            inst.element = one(modes[0], modes[1]) + one(modes[1], modes[0]);
            break;
        }
        case RelId::SerreOdd: {
            need(indices.size() == 1 && modes.size() == 4, "SerreOdd takes (i;r1,r2,t,u)");
            int i = check_i(indices[0]);
            need(i >= 2 && i <= N - 1 && A.at(i, i) == 0, "SerreOdd guard");
            auto one = [&](int ra, int rb) {
                return q_bracket(s, Xg(sign, i, ra),
                                 q_bracket(s, Xg(sign, i + 1, modes[2]),
                                           q_bracket(s, Xg(sign, i, rb), Xg(sign, i - 1, modes[3]))));
            };
            inst.element = one(modes[0], modes[1]) + one(modes[1], modes[0]);
            break;
        }
        case RelId::SerreN: {
            need(indices.empty() && modes.size() == 4 && N >= 2, "SerreN takes (r1,r2,r3,t)");
            int perm[3] = {0, 1, 2};
            std::sort(perm, perm + 3);
            Expr sum;
            do {
                Expr inner = q_bracket(s, Xg(sign, N, modes[static_cast<std::size_t>(perm[2])]),
                                       Xg(sign, N - 1, modes[3]));
                inner = q_bracket(s, Xg(sign, N, modes[static_cast<std::size_t>(perm[1])]), inner);
                sum += q_bracket(s, Xg(sign, N, modes[static_cast<std::size_t>(perm[0])]), inner);
            } while (std::next_permutation(perm, perm + 3));
            inst.element = sum;
            break;
        }
        case RelId::CubicN: {
            need(indices.empty() && modes.size() == 3, "CubicN takes (r1,r2,r3)");
            int a = A.at(N, N);
            int perm[3] = {0, 1, 2};
            std::sort(perm, perm + 3);
            Expr sum;
            do {
                int m1 = modes[static_cast<std::size_t>(perm[0])];
                int m2 = modes[static_cast<std::size_t>(perm[1])];
                int m3 = modes[static_cast<std::size_t>(perm[2])];
                Expr inner = ba(Xg(sign, N, m2), Xg(sign, N, m3 + sign), FieldElem::q_power(-a));
                sum += ba(Xg(sign, N, m1), inner, FieldElem::q_power(-2 * a));
            } while (std::next_permutation(perm, perm + 3));
            inst.element = sum;
            break;
        }
        case RelId::QuadraticN: {
            need(indices.empty() && modes.size() == 2, "QuadraticN takes (r,t)");
            int a = A.at(N, N);
            int r = modes[0], t = modes[1];
            Expr first = ba(Xg(sign, N, r), Xg(sign, N, t), FieldElem::q_power(a));
            Expr second = ba(Xg(sign, N, r - sign), Xg(sign, N, t + sign), FieldElem::q_power(-3 * a));
            inst.element = first - second.scaled(FieldElem::q_power(2 * a));
            break;
        }
        case RelId::CubicNN1: {
            need(indices.empty() && modes.size() == 3 && N >= 2, "CubicNN1 takes (r1,r2,t)");
            int a = A.at(N, N);
            int r1 = modes[0], r2 = modes[1], t = modes[2];
            Expr lhs = ba(ba(Xg(sign, N, r1 + sign), Xg(sign, N, r2), FieldElem::q_power(a)),
                          Xg(sign, N - 1, t), FieldElem::q_power(-2 * a))
                           .scaled(FieldElem::q_power(a));
            Expr rhs = super_commutator(
                s, ba(Xg(sign, N - 1, t), Xg(sign, N, r1 + sign), FieldElem::q_power(a)), Xg(sign, N, r2));
            inst.element = lhs + rhs.scaled(FieldElem(LaurentPoly::q(1) + LaurentPoly::q(-1)));
            break;
        }
    }
    inst.label = to_string(id) + "(" + mode_list(indices) + ";" + mode_list(modes) + ")" +
                 (sign > 0 ? "+" : "-");
    return inst;
}

namespace {

std::mutex g_psi_mutex;
std::map<std::pair<std::vector<int>, std::pair<int, int>>, Expr> g_psi_xp, g_psi_xm;

BraidWord word_power(const BraidWord& w, int k) {
    BraidWord out;
    BraidWord base = k >= 0 ? w : inverse_word(w);
    for (int r = 0; r < std::abs(k); ++r) out = concat(out, base);
    return out;
}

Expr psi_x(const ParitySeq& s, bool plus, int i, int r) {
    auto key = std::make_pair(s.entries(), std::make_pair(i, r));
    {
        std::lock_guard<std::mutex> lock(g_psi_mutex);
        auto& cache = plus ? g_psi_xp : g_psi_xm;
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    BraidWord w = word_power(t_omega_word(i, s.rank()), plus ? -r : r);
    Expr base = Expr::gen(plus ? GenSym::E(i) : GenSym::F(i));
    auto [img, back] = apply_word(s, w, base);
    if (back != s) throw Error("translation word failed to preserve the parity sequence");
    if ((i * r) % 2 != 0) img = -img;
    {
        std::lock_guard<std::mutex> lock(g_psi_mutex);
        auto& cache = plus ? g_psi_xp : g_psi_xm;
        cache.emplace(key, img);
    }
    return img;
}

Expr k_central(const ParitySeq& s, bool inverse) {
    const int N = s.rank();
    Monomial m;
    auto push = [&](int idx, int count) {
        for (int k = 0; k < count; ++k) m.push_back(inverse ? GenSym::Kinv(idx) : GenSym::K(idx));
    };
    push(0, 1);
    if (s.at(1) == 1) {
        push(1, 1);
        for (int j = 2; j <= N; ++j) push(j, 2);
    } else {
        for (int j = 1; j <= N; ++j) push(j, 2);
    }
    return Expr::monomial(m);
}

}  // namespace

Expr psi(const ParitySeq& s, const GenSym& g) {
    switch (g.kind) {
        case GenKind::E:
        case GenKind::F:
        case GenKind::K:
        case GenKind::Kinv:
            if (g.index == 0) throw UnsupportedGenerator("psi is defined on loop generators");
            return Expr::gen(g);
        case GenKind::Xp:
            return psi_x(s, true, g.index, g.mode);
        case GenKind::Xm:
            return psi_x(s, false, g.index, g.mode);
        case GenKind::C:
            return k_central(s, false);
        case GenKind::Cinv:
            return k_central(s, true);
        case GenKind::H: {
            if (g.mode == 1) {
                Expr x = super_commutator(s, psi_x(s, true, g.index, 0), psi_x(s, false, g.index, 1));
                return Expr::gen(GenSym::Kinv(g.index)) * x;
            }
            if (g.mode == -1) {
                Expr x = super_commutator(s, psi_x(s, true, g.index, -1), psi_x(s, false, g.index, 0));
                return Expr::gen(GenSym::K(g.index)) * x;
            }
            throw UnsupportedGenerator("psi supports H modes +-1 only");
        }
    }
    throw UnsupportedGenerator("psi: unknown generator");
}

Expr psi_expr(const ParitySeq& s, const Expr& e) {
    return apply_morphism(s, e, [&](const GenSym& g) { return psi(s, g); });
}

VerifyReport check_psi_relation(const ParitySeq& s, const Expr& element, Bounds bounds) {
    return verify_zero(s, psi_expr(s, element), bounds);
}

Expr drinfeld_automorphism(const ParitySeq& s, DrinfeldAut name, const Expr& e, int tau_index) {
    switch (name) {
        case DrinfeldAut::tau: {
            const int i = tau_index;
            return apply_morphism(s, e, [&](const GenSym& g) -> Expr {
                switch (g.kind) {
                    case GenKind::Xp: {
                        Expr x = Expr::gen(GenSym::Xp(g.index, g.mode - (g.index == i ? 1 : 0)));
                        return (g.index == i && i % 2 != 0) ? -x : x;
                    }
                    case GenKind::Xm: {
                        Expr x = Expr::gen(GenSym::Xm(g.index, g.mode + (g.index == i ? 1 : 0)));
                        return (g.index == i && i % 2 != 0) ? -x : x;
                    }
                    case GenKind::H:
                        return Expr::gen(g);
                    case GenKind::K:
                        return g.index == i ? c_power(-1) * Expr::gen(g) : Expr::gen(g);
                    case GenKind::Kinv:
                        return g.index == i ? c_power(1) * Expr::gen(g) : Expr::gen(g);
                    case GenKind::C:
                    case GenKind::Cinv:
                        return Expr::gen(g);
                    default:
                        throw UnsupportedGenerator("tau acts on loop generators");
                }
            });
        }
        case DrinfeldAut::Omega: {
            return apply_morphism(s, e, [&](const GenSym& g) -> Expr {
                switch (g.kind) {
                    case GenKind::Xp:
                        return Expr::gen(GenSym::Xm(g.index, g.mode));
                    case GenKind::Xm: {
                        Expr x = Expr::gen(GenSym::Xp(g.index, g.mode));
                        return simple_root(s, g.index).parity ? -x : x;
                    }
                    case GenKind::H:
                        return -Expr::gen(g);
                    case GenKind::K:
                        return Expr::gen(GenSym::Kinv(g.index));
                    case GenKind::Kinv:
                        return Expr::gen(GenSym::K(g.index));
                    case GenKind::C:
                    case GenKind::Cinv:
                        return Expr::gen(g);
                    default:
                        throw UnsupportedGenerator("Omega acts on loop generators");
                }
            });
        }
        case DrinfeldAut::eta: {
            return apply_morphism(
                s, e,
                [&](const GenSym& g) -> Expr {
                    switch (g.kind) {
                        case GenKind::Xp:
                            return Expr::gen(GenSym::Xp(g.index, -g.mode));
                        case GenKind::Xm:
                            return Expr::gen(GenSym::Xm(g.index, -g.mode));
                        case GenKind::H:
                            return (c_power(-g.mode) * Expr::gen(GenSym::H(g.index, -g.mode))).scaled(FieldElem(-1));
                        case GenKind::K:
                            return Expr::gen(GenSym::Kinv(g.index));
                        case GenKind::Kinv:
                            return Expr::gen(GenSym::K(g.index));
                        case GenKind::C:
                        case GenKind::Cinv:
                            return Expr::gen(g);
                        default:
                            throw UnsupportedGenerator("eta acts on loop generators");
                    }
                },
                /*anti=*/true);
        }
    }
    throw Error("unknown automorphism");
}

std::vector<PsiCheckItem> util_relation_instances(const ParitySeq& s,
                                                  const std::vector<std::string>& which,
                                                  int mode_lo, int mode_hi) {
    const int N = s.rank();
    auto wanted = [&](const std::string& name) {
        return which.empty() || std::find(which.begin(), which.end(), name) != which.end();
    };
    std::vector<PsiCheckItem> items;
    auto add = [&](const std::string& label, Expr e) { items.push_back({label, std::move(e)}); };
    if (wanted("KK")) {
        for (int i = 1; i <= N; ++i) {
            for (int j = i + 1; j <= N; ++j)
                add("KK(" + std::to_string(i) + "," + std::to_string(j) + ")",
                    relation_instance(s, RelId::KK, {i, j}, {}).element);
            Expr ki = Expr::gen(GenSym::K(i));
            add("KC(" + std::to_string(i) + ")", Expr::gen(GenSym::C()) * ki - ki * Expr::gen(GenSym::C()));
            for (int sign : {1, -1}) {
                Expr x = Xg(sign, i, 0);
                add(std::string("CX") + (sign > 0 ? "+" : "-") + "(" + std::to_string(i) + ",0)",
                    Expr::gen(GenSym::C()) * x - x * Expr::gen(GenSym::C()));
            }
        }
        add("CCinv", Expr::gen(GenSym::C()) * Expr::gen(GenSym::Cinv()) - Expr::scalar(FieldElem::one()));
    }
    if (wanted("KX")) {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int r = mode_lo; r <= mode_hi; ++r)
                    for (int sign : {1, -1}) {
                        auto inst = relation_instance(s, RelId::KX, {i, j}, {r}, sign);
                        add(inst.label, inst.element);
                    }
    }
    if (wanted("HX")) {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int t : {1, -1})
                    for (int r = mode_lo; r <= mode_hi; ++r)
                        for (int sign : {1, -1}) {
                            auto inst = relation_instance(s, RelId::HX, {i, j}, {t, r}, sign);
                            add(inst.label, inst.element);
                        }
    }
    if (wanted("XXK")) {
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int r = mode_lo; r <= mode_hi; ++r)
                    for (int t = mode_lo; t <= mode_hi; ++t) {
                        auto inst = relation_instance(s, RelId::XXK, {i, j}, {r, t});
                        add(inst.label, inst.element);
                    }
    }
    return items;
}

std::vector<PsiCheckItem> serre_ideal_instances(const ParitySeq& s, int mode_lo, int mode_hi) {
    const int N = s.rank();
    const CartanMatrix A = cartan_matrix(s);
    std::vector<PsiCheckItem> items;
    auto add = [&](const SerreGen& g) { items.push_back({g.label, g.element}); };
    for (int sign : {1, -1}) {
        for (int i = 1; i <= N; ++i)
            for (int j = i; j <= N; ++j)
                if (A.at(i, j) == 0)
                    for (int r = mode_lo; r <= mode_hi; ++r)
                        for (int t = mode_lo; t <= mode_hi; ++t)
                            add(serre_gen(s, SerreKind::Sd, {i, j}, {r, t}, sign));
        for (int i = 1; i < N; ++i)
            for (int j = 1; j <= N; ++j)
                if (j != i && A.at(i, j) != 0 && A.at(i, i) != 0)
                    for (int r = mode_lo; r <= mode_hi; ++r)
                        for (int t = mode_lo; t <= mode_hi; ++t)
                            add(serre_gen(s, SerreKind::Se, {i, j}, {r, t}, sign));
        for (int i = 2; i <= N - 1; ++i)
            if (A.at(i, i) == 0)
                for (int r = mode_lo; r <= mode_hi; ++r)
                    for (int t = mode_lo; t <= mode_hi; ++t)
                        for (int u = mode_lo; u <= mode_hi; ++u)
                            add(serre_gen(s, SerreKind::So, {i}, {r, t, u}, sign));
        if (N >= 2)
            for (int r = mode_lo; r <= mode_hi; ++r)
                for (int t = mode_lo; t <= mode_hi; ++t)
                    add(serre_gen(s, SerreKind::SN, {}, {r, t}, sign));
    }
    return items;
}

void clear_psi_cache() {
    std::lock_guard<std::mutex> lock(g_psi_mutex);
    g_psi_xp.clear();
    g_psi_xm.clear();
}

}  // namespace qaffine
