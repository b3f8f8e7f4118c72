#include "qaffine/parser.hpp"

#include <cctype>

#include "qaffine/errors.hpp"

namespace qaffine {

namespace {

struct ExprParser {
    const std::string& s;
    const ParitySeq& ps;
    std::size_t pos = 0;

    ExprParser(const std::string& text, const ParitySeq& p) : s(text), ps(p) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    bool lookahead(const char* lit) {
        skip_ws();
        std::size_t n = std::char_traits<char>::length(lit);
        return s.compare(pos, n, lit) == 0;
    }
    void expect(char c) {
        if (!eat(c)) throw SyntaxError(std::string("expected '") + c + "'", pos);
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SyntaxError("expected integer", pos);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoi(s.substr(start, pos - start));
    }

    int parse_index() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'N') {
            ++pos;
            return ps.rank();
        }
        if (pos < s.size() && s[pos] == '{') {
            ++pos;
            skip_ws();
            if (pos >= s.size() || s[pos] != 'N') throw SyntaxError("expected 'N' in index braces", pos);
            ++pos;
            expect('-');
            int k = parse_int();
            expect('}');
            return ps.rank() - k;
        }
        return parse_int();
    }

    GenSym parse_gen() {
        skip_ws();
        char c = s[pos];
        std::size_t at = pos;
        ++pos;
        const int N = ps.rank();
        auto check_dj = [&](int i) {
            if (i < 0 || i > N) throw UnknownGenerator("node index " + std::to_string(i) + " out of range");
            return i;
        };
        auto check_loop = [&](int i) {
            if (i < 1 || i > N) throw UnknownGenerator("loop index " + std::to_string(i) + " out of range");
            return i;
        };
        switch (c) {
            case 'E': return GenSym::E(check_dj(parse_index()));
            case 'F': return GenSym::F(check_dj(parse_index()));
            case 'K': {
                int i = check_dj(parse_index());
                if (lookahead("^-1")) {
                    pos += 3;
                    return GenSym::Kinv(i);
                }
                return GenSym::K(i);
            }
            case 'C': {
                if (lookahead("^-1")) {
                    pos += 3;
                    return GenSym::Cinv();
                }
                return GenSym::C();
            }
            case 'X': {
                if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
                    throw SyntaxError("expected '+' or '-' after 'X'", pos);
                bool plus = s[pos] == '+';
                ++pos;
                int i = check_loop(parse_index());
                expect(',');
                int r = parse_int();
                return plus ? GenSym::Xp(i, r) : GenSym::Xm(i, r);
            }
            case 'H': {
                int i = check_loop(parse_index());
                expect(',');
                int t = parse_int();
                if (t == 0) throw BadModes("H mode must be nonzero");
                return GenSym::H(i, t);
            }
            default:
                throw SyntaxError(std::string("unknown generator letter '") + c + "'", at);
        }
    }

    Expr parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("unexpected end of expression", pos);
        char c = s[pos];
        if (lookahead("qb(")) {
            pos += 3;
            Expr x = parse_expr_();
            expect(',');
            Expr y = parse_expr_();
            expect(')');
            Grading gx = expr_grading(ps, x), gy = expr_grading(ps, y);
            if (!gx.homogeneous || !gy.homogeneous)
                throw GradingError("qb arguments must be weight/parity homogeneous");
            return q_bracket(ps, x, y);
        }
        if (lookahead("sc(")) {
            pos += 3;
            Expr x = parse_expr_();
            expect(',');
            Expr y = parse_expr_();
            expect(')');
            return super_commutator(ps, x, y);
        }
        if (lookahead("b[")) {
            pos += 2;
            Expr x = parse_expr_();
            expect(',');
            Expr y = parse_expr_();
            expect(';');
            Expr a = parse_expr_();
            expect(']');
            Grading ga = expr_grading(ps, a);
            if (a.is_zero()) return bracket_a(ps, x, y, FieldElem::zero());
            if (a.term_count() != 1 || !a.terms().begin()->first.empty())
                throw GradingError("bracket parameter must be a scalar");
            return bracket_a(ps, x, y, a.terms().begin()->second);
        }
        if (c == '(') {
            ++pos;
            Expr e = parse_expr_();
            expect(')');
            return e;
        }
        if (c == 'q' && !(pos + 1 < s.size() && s[pos + 1] == 'b')) {
            ++pos;
            int exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = parse_int();
            }
            return Expr::scalar(FieldElem::q_power(exp));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return Expr::scalar(FieldElem(LaurentPoly(Int(s.substr(start, pos - start)), 0)));
        }
        return Expr::gen(parse_gen());
    }

    Expr parse_term() {
        Expr e = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                e = e * parse_factor();
            } else if (eat('/')) {
                Expr d = parse_factor();
                if (d.is_zero()) throw DivisionByZero("division by zero in expression");
                if (d.term_count() != 1 || !d.terms().begin()->first.empty())
                    throw GradingError("divisor must be a scalar");
                e = e.scaled(d.terms().begin()->second.inv());
            } else {
                break;
            }
        }
        return e;
    }

    Expr parse_expr_() {
        skip_ws();
        Expr e;
        bool neg = eat('-');
        e = parse_term();
        if (neg) e = -e;
        for (;;) {
            if (eat('+'))
                e += parse_term();
            else if (eat('-'))
                e -= parse_term();
            else
                break;
        }
        return e;
    }
};

}  // namespace

Expr parse_expr(const std::string& text, const ParitySeq& s) {
    ExprParser p(text, s);
    Expr e = p.parse_expr_();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
    return e;
}

}  // namespace qaffine
