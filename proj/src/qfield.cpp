#include "qaffine/qfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qaffine {

LaurentPoly::LaurentPoly(Int c, int exp) : lo_(0) {
    if (c != 0) {
        lo_ = exp;
        c_.push_back(std::move(c));
    }
}

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = c_.size();
    while (back > front && c_[back - 1] == 0) --back;
    if (front > 0 || back < c_.size()) {
        c_ = std::vector<Int>(c_.begin() + front, c_.begin() + back);
        lo_ += static_cast<int>(front);
    }
}

bool LaurentPoly::is_one() const {
    return c_.size() == 1 && lo_ == 0 && c_[0] == 1;
}

const Int& LaurentPoly::coeff(int exp) const {
    static const Int kZero = 0;
    if (exp < lo_ || exp > max_exp() || c_.empty()) return kZero;
    return c_[exp - lo_];
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : c_)
        if (c != 0) ++n;
    return n;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int lo = std::min(lo_, o.lo_);
    int hi = std::max(max_exp(), o.max_exp());
    LaurentPoly r;
    r.lo_ = lo;
    r.c_.assign(hi - lo + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[lo_ - lo + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[o.lo_ - lo + i] += o.c_[i];
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return LaurentPoly();
    LaurentPoly r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r(*this);
    if (!r.c_.empty()) r.lo_ += k;
    return r;
}

namespace {

// Integer content, positive.
Int content(const std::vector<Int>& c) {
    Int g = 0;
    for (const auto& x : c) {
        if (x == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
        if (g == 1) break;
    }
    return g;
}

// Ordinary-polynomial exact division helper on ascending coefficient vectors.
// Returns false if the division is not exact.
bool poly_divide(std::vector<Int> num, const std::vector<Int>& den, std::vector<Int>& quot) {
    if (den.empty()) return false;
    if (num.size() < den.size()) {
        for (const auto& c : num)
            if (c != 0) return false;
        quot.clear();
        return true;
    }
    quot.assign(num.size() - den.size() + 1, 0);
    const Int& lead = den.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = num[k + den.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return false;
        Int f = top / lead;
        quot[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) return false;
    return true;
}

void trim_vec(std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

void make_primitive(std::vector<Int>& v) {
    Int g = content(v);
    if (g > 1)
        for (auto& c : v) c /= g;
}

// Pseudo-remainder of a by b (b nonzero): repeatedly scale by lead(b) and
// cancel the top term. Degree strictly decreases each step.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    trim_vec(a);
    const Int lead = b.back();
    while (a.size() >= b.size()) {
        Int f = a.back();
        std::size_t off = a.size() - b.size();
        for (auto& c : a) c *= lead;
        // the scaled top term is f*lead at position a.size()-1
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
        trim_vec(a);
        if (a.empty()) break;
    }
    return a;
}

// Primitive-PRS gcd on ascending coefficient vectors.
std::vector<Int> poly_gcd(std::vector<Int> a, std::vector<Int> b) {
    trim_vec(a);
    trim_vec(b);
    Int cg = boost::multiprecision::gcd(content(a), content(b));
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
        if (a.size() < b.size()) std::swap(a, b);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    if (cg > 1)
        for (auto& c : a) c *= cg;
    return a;
}

}  // namespace

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& o) const {
    if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return LaurentPoly();
    std::vector<Int> quot;
    if (!poly_divide(c_, o.c_, quot)) throw Error("inexact polynomial division");
    LaurentPoly r;
    r.lo_ = lo_ - o.lo_;
    r.c_ = std::move(quot);
    r.trim();
    return r;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero() || b.is_zero()) {
        LaurentPoly g = a.is_zero() ? b : a;
        g = g.shifted(-g.min_exp());
        if (g.c_.front() < 0)
            for (auto& c : g.c_) c = -c;
        return g;
    }
    LaurentPoly g;
    g.lo_ = 0;
    g.c_ = poly_gcd(a.c_, b.c_);
    // normalize: lowest coefficient positive, lowest exponent zero
    g.trim();
    if (!g.c_.empty() && g.c_.front() < 0)
        for (auto& c : g.c_) c = -c;
    return g;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = max_exp(); e >= lo_; --e) {
        const Int& c = coeff(e);
        if (c == 0) continue;
        Int a = boost::multiprecision::abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            if (e == 1)
                os << "q";
            else
                os << "q^" << e;
        }
    }
    return os.str();
}

std::size_t LaurentPoly::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::size_t>(lo_);
    for (const auto& c : c_) {
        std::size_t hc = std::hash<std::string>()(c.str());
        h ^= hc + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

LaurentPoly qint_poly(int r) {
    if (r == 0) return LaurentPoly();
    if (r < 0) return -qint_poly(-r);
    LaurentPoly sum;
    for (int e = r - 1; e >= 1 - r; e -= 2) sum = sum + LaurentPoly::q(e);
    return sum;
}

FieldElem::FieldElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("field element with zero denominator");
    reduce();
}

void FieldElem::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // move the unit q^k into the numerator, fix the sign of the denominator
    int shift = den_.min_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    if (den_.coeff(0) < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

FieldElem FieldElem::operator-() const {
    FieldElem r(*this);
    r.num_ = -r.num_;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
    return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return FieldElem();
    return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero field element");
    return FieldElem(num_ * o.den_, den_ * o.num_);
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return FieldElem(den_, num_);
}

std::string FieldElem::to_string() const {
    if (den_.is_one()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.term_count() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

std::size_t FieldElem::hash() const {
    return num_.hash() * 1000003u ^ den_.hash();
}

FieldElem qint(int r) { return FieldElem(qint_poly(r)); }

FieldElem field_arith(FieldOp op, const FieldElem& a, const FieldElem& b) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::mul: return a * b;
        case FieldOp::neg: return -a;
        case FieldOp::inv: return a.inv();
        case FieldOp::div: return a / b;
    }
    throw Error("unknown field op");
}

namespace {

// Minimal recursive-descent parser for the coefficient grammar:
// sums/differences of products/quotients of atoms; atoms are integers,
// q (with optional ^exponent) and parenthesized subexpressions.
struct FieldParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit FieldParser(const std::string& text) : s(text) {}

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

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw SyntaxError("expected integer", pos);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return std::stoi(s.substr(start, pos - start));
    }

    FieldElem parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("unexpected end of coefficient", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElem e = parse_expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos);
            return e;
        }
        if (c == 'q') {
            ++pos;
            int exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                exp = parse_int();
            }
            return FieldElem::q_power(exp);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int v(s.substr(start, pos - start));
            return FieldElem(LaurentPoly::constant(v));
        }
        throw SyntaxError(std::string("unexpected character '") + c + "' in coefficient", pos);
    }

    FieldElem parse_term() {
        FieldElem e = peek('-') ? (eat('-'), -parse_atom()) : parse_atom();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                e = e * parse_atom();
            } else if (eat('/')) {
                e = e / parse_atom();
            } else if (pos < s.size() && (s[pos] == 'q' || std::isdigit(static_cast<unsigned char>(s[pos])))) {
                // juxtaposition like "2q^3"
                e = e * parse_atom();
            } else {
                break;
            }
        }
        return e;
    }

    FieldElem parse_expr() {
        FieldElem e = parse_term();
        for (;;) {
            if (eat('+'))
                e = e + parse_term();
            else if (eat('-'))
                e = e - parse_term();
            else
                break;
        }
        return e;
    }
};

}  // namespace

FieldElem parse_field_elem(const std::string& text) {
    FieldParser p(text);
    FieldElem e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw SyntaxError("trailing input in coefficient", p.pos);
    return e;
}

}  // namespace qaffine
