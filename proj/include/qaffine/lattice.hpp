#pragma once

#include <string>
#include <vector>

#include "qaffine/errors.hpp"

namespace qaffine {

// N-tuple over {+1,-1} indexing the Cartan datum. 1-based access, matching
// the subscripts s_1..s_N used throughout.
class ParitySeq {
public:
    ParitySeq() = default;

    // Validated constructor: entries in {+1,-1}, nonempty, at least one -1.
    static ParitySeq make(const std::vector<int>& entries);
    // Skips the odd-part requirement; needed only for the twisted rank-1
    // datum with s_1 = +1 that the braid tables carry along.
    static ParitySeq make_unchecked(const std::vector<int>& entries);

    int rank() const { return static_cast<int>(s_.size()); }  // N
    int m() const { return m_; }
    int n() const { return n_; }
    int at(int i) const;  // s_i, 1 <= i <= N
    const std::vector<int>& entries() const { return s_; }

    bool operator==(const ParitySeq& o) const { return s_ == o.s_; }
    bool operator!=(const ParitySeq& o) const { return s_ != o.s_; }
    bool operator<(const ParitySeq& o) const { return s_ < o.s_; }

    std::string to_string() const;  // e.g. "1,-1,-1"
    static ParitySeq parse(const std::string& text);
    std::size_t hash() const;

private:
    std::vector<int> s_;
    int m_ = 0, n_ = 0;
};

// Element of the lattice P_s: integer multiple of delta plus an integer
// vector over eps_1..eps_N.
struct Weight {
    int delta = 0;
    std::vector<int> eps;

    static Weight zero(int N) { return Weight{0, std::vector<int>(static_cast<std::size_t>(N), 0)}; }
    static Weight delta_of(int N) {
        Weight w = zero(N);
        w.delta = 1;
        return w;
    }
    static Weight eps_of(int N, int i);  // eps_i, 1-based

    int N() const { return static_cast<int>(eps.size()); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(int k) const;
    bool operator==(const Weight& o) const { return delta == o.delta && eps == o.eps; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const;

    std::string to_string() const;
    std::size_t hash() const;
};

struct RootInfo {
    Weight weight;
    int parity = 0;       // 0 even, 1 odd
    bool isotropic = false;
};

// (a|b)_s with (eps_i|eps_j) = s_i delta_ij and delta pairing to zero.
int bilinear(const ParitySeq& s, const Weight& a, const Weight& b);

// Pairing transported through iota, i.e. the all-plus form.
int bilinear_all_plus(const Weight& a, const Weight& b);

// iota_s: coordinate identity into the all-plus lattice.
Weight iota(const ParitySeq& s, const Weight& w);

// alpha_i for i in {0..N}: eps_i - eps_{i+1}, eps_N, or delta - theta.
RootInfo simple_root(const ParitySeq& s, int i);

// The finite root system Delta_s with its even/odd split.
std::vector<RootInfo> finite_roots(const ParitySeq& s);

// Membership test for the affine system: w = alpha + r*delta with alpha in
// Delta_s, or w a nonzero multiple of delta.
bool is_affine_root(const ParitySeq& s, const Weight& w);

// Expresses w as an integer combination of alpha_0..alpha_N; returns false
// if no such combination exists (the alpha_i are linearly independent).
bool decompose_in_simple_roots(const ParitySeq& s, const Weight& w, std::vector<int>& coeffs);

}  // namespace qaffine
