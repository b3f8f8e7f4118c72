#include "qaffine/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace qaffine {

ParitySeq ParitySeq::make(const std::vector<int>& entries) {
    ParitySeq p = make_unchecked(entries);
    if (p.n_ == 0) throw NoOddPart("parity sequence needs at least one -1 entry");
    return p;
}

ParitySeq ParitySeq::make_unchecked(const std::vector<int>& entries) {
    if (entries.empty()) throw EmptySequence("empty parity sequence");
    ParitySeq p;
    p.s_ = entries;
    for (int e : entries) {
        if (e == 1)
            ++p.m_;
        else if (e == -1)
            ++p.n_;
        else
            throw BadEntry("parity entries must be +1 or -1, got " + std::to_string(e));
    }
    return p;
}

int ParitySeq::at(int i) const {
    if (i < 1 || i > rank()) throw IndexOutOfRange("parity index " + std::to_string(i));
    return s_[static_cast<std::size_t>(i - 1)];
}

std::string ParitySeq::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < s_.size(); ++i) {
        if (i) os << ",";
        os << s_[i];
    }
    return os.str();
}

ParitySeq ParitySeq::parse(const std::string& text) {
    std::vector<int> entries;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        entries.push_back(std::stoi(tok));
    }
    return make(entries);
}

std::size_t ParitySeq::hash() const {
    std::size_t h = s_.size();
    for (int e : s_) h = h * 31 + static_cast<std::size_t>(e + 2);
    return h;
}

Weight Weight::eps_of(int N, int i) {
    if (i < 1 || i > N) throw IndexOutOfRange("eps index " + std::to_string(i));
    Weight w = zero(N);
    w.eps[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

bool Weight::is_zero() const {
    if (delta != 0) return false;
    return std::all_of(eps.begin(), eps.end(), [](int v) { return v == 0; });
}

Weight Weight::operator+(const Weight& o) const {
    if (eps.size() != o.eps.size()) throw LengthMismatch("weight rank mismatch");
    Weight r = *this;
    r.delta += o.delta;
    for (std::size_t i = 0; i < eps.size(); ++i) r.eps[i] += o.eps[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(int k) const {
    Weight r = *this;
    r.delta *= k;
    for (auto& v : r.eps) v *= k;
    return r;
}

bool Weight::operator<(const Weight& o) const {
    if (delta != o.delta) return delta < o.delta;
    return eps < o.eps;
}

std::string Weight::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](int c, const std::string& sym) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        int a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << sym;
    };
    emit(delta, "d");
    for (std::size_t i = 0; i < eps.size(); ++i) emit(eps[i], "e" + std::to_string(i + 1));
    if (first) os << "0";
    return os.str();
}

std::size_t Weight::hash() const {
    std::size_t h = static_cast<std::size_t>(delta + 1000);
    for (int v : eps) h = h * 1000003u + static_cast<std::size_t>(v + 1000);
    return h;
}

int bilinear(const ParitySeq& s, const Weight& a, const Weight& b) {
    if (a.N() != s.rank() || b.N() != s.rank()) throw LengthMismatch("weight rank does not match parity sequence");
    int sum = 0;
    for (int i = 1; i <= s.rank(); ++i)
        sum += s.at(i) * a.eps[static_cast<std::size_t>(i - 1)] * b.eps[static_cast<std::size_t>(i - 1)];
    return sum;
}

int bilinear_all_plus(const Weight& a, const Weight& b) {
    if (a.N() != b.N()) throw LengthMismatch("weight rank mismatch");
    int sum = 0;
    for (std::size_t i = 0; i < a.eps.size(); ++i) sum += a.eps[i] * b.eps[i];
    return sum;
}

Weight iota(const ParitySeq& s, const Weight& w) {
    if (w.N() != s.rank()) throw LengthMismatch("weight rank does not match parity sequence");
    return w;
}

RootInfo simple_root(const ParitySeq& s, int i) {
    const int N = s.rank();
    if (i < 0 || i > N) throw IndexOutOfRange("simple root index " + std::to_string(i));
    RootInfo r;
    if (i == 0) {
        // theta = eps_1 + eps_2 if s_1 = 1, 2 eps_1 if s_1 = -1; a rank-1
        // lattice only supports the 2 eps_1 shape.
        Weight theta = Weight::zero(N);
        if (s.at(1) == 1 && N >= 2) {
            theta = Weight::eps_of(N, 1) + Weight::eps_of(N, 2);
        } else {
            theta = Weight::eps_of(N, 1).scaled(2);
        }
        r.weight = Weight::delta_of(N) - theta;
        if (s.at(1) == 1) {
            r.parity = (N >= 2) ? (1 - s.at(1) * s.at(2)) / 2 : 0;
        } else {
            r.parity = 0;
        }
    } else if (i == N) {
        r.weight = Weight::eps_of(N, N);
        r.parity = (1 - s.at(N)) / 2;
    } else {
        r.weight = Weight::eps_of(N, i) - Weight::eps_of(N, i + 1);
        r.parity = (1 - s.at(i) * s.at(i + 1)) / 2;
    }
    r.isotropic = bilinear(s, r.weight, r.weight) == 0;
    return r;
}

std::vector<RootInfo> finite_roots(const ParitySeq& s) {
    const int N = s.rank();
    std::vector<RootInfo> roots;
    auto add = [&](const Weight& w, int parity) {
        RootInfo r;
        r.weight = w;
        r.parity = parity;
        r.isotropic = bilinear(s, w, w) == 0;
        roots.push_back(std::move(r));
    };
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            int parity = s.at(i) == s.at(j) ? 0 : 1;
            Weight ei = Weight::eps_of(N, i), ej = Weight::eps_of(N, j);
            add(ei + ej, parity);
            add(ei - ej, parity);
            add(-(ei - ej), parity);
            add(-(ei + ej), parity);
        }
    }
    for (int k = 1; k <= N; ++k) {
        int parity = s.at(k) == 1 ? 0 : 1;
        Weight ek = Weight::eps_of(N, k);
        add(ek, parity);
        add(-ek, parity);
        if (s.at(k) == -1) {
            add(ek.scaled(2), 0);
            add(ek.scaled(-2), 0);
        }
    }
    return roots;
}

bool is_affine_root(const ParitySeq& s, const Weight& w) {
    Weight finite = w;
    finite.delta = 0;
    if (finite.is_zero()) return w.delta != 0;
    for (const auto& r : finite_roots(s))
        if (r.weight == finite) return true;
    return false;
}

bool decompose_in_simple_roots(const ParitySeq& s, const Weight& w, std::vector<int>& coeffs) {
    const int N = s.rank();
    coeffs.assign(static_cast<std::size_t>(N + 1), 0);
    // alpha_0 is the only simple root with a delta component.
    coeffs[0] = w.delta;
    Weight rest = w - simple_root(s, 0).weight.scaled(w.delta);
    // alpha_1..alpha_N triangularize over eps: c_k = sum_{j<=k} rest_j.
    int acc = 0;
    for (int k = 1; k <= N; ++k) {
        acc += rest.eps[static_cast<std::size_t>(k - 1)];
        coeffs[static_cast<std::size_t>(k)] = acc;
    }
    // verify
    Weight check = Weight::zero(N);
    for (int i = 0; i <= N; ++i) check = check + simple_root(s, i).weight.scaled(coeffs[static_cast<std::size_t>(i)]);
    return check == w;
}

}  // namespace qaffine
