#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "qaffine/errors.hpp"

namespace qaffine {

using Int = boost::multiprecision::cpp_int;

// Laurent polynomial in q with integer coefficients. Stored densely as a
// coefficient vector over a contiguous exponent window; the zero polynomial
// is the empty vector. Both ends of the window carry nonzero coefficients.
class LaurentPoly {
public:
    LaurentPoly() : lo_(0) {}
    LaurentPoly(Int c, int exp);  // c * q^exp

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1, 0); }
    static LaurentPoly q(int exp = 1) { return LaurentPoly(1, exp); }
    static LaurentPoly constant(Int c) { return LaurentPoly(std::move(c), 0); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int exp) const;
    // Number of nonzero terms.
    std::size_t term_count() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return lo_ == o.lo_ && c_ == o.c_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly shifted(int k) const;  // multiply by q^k

    // Exact division; throws DivisionByZero if o == 0, Error if not divisible.
    LaurentPoly divide_exact(const LaurentPoly& o) const;

    // gcd normalized so the lowest-exponent coefficient is positive and the
    // lowest exponent is 0; gcd(0,0) = 0.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string() const;

    // Used to pick elimination pivots and to order certificate search.
    std::size_t complexity() const { return term_count(); }

    std::size_t hash() const;

private:
    void trim();
    int lo_;
    std::vector<Int> c_;  // c_[k] is the coefficient of q^(lo_ + k)
};

// [r]_q = (q^r - q^-r)/(q - q^-1) as a Laurent polynomial.
LaurentPoly qint_poly(int r);

// Element of the fraction field of Z[q, q^-1], kept in canonical form:
// gcd(num, den) is a unit, den has lowest exponent 0 and positive lowest
// coefficient. Equality is therefore structural.
class FieldElem {
public:
    FieldElem() : num_(), den_(LaurentPoly::one()) {}
    FieldElem(int n) : num_(LaurentPoly::constant(n)), den_(LaurentPoly::one()) {}
    explicit FieldElem(LaurentPoly p) : num_(std::move(p)), den_(LaurentPoly::one()) {}
    FieldElem(LaurentPoly num, LaurentPoly den);

    static FieldElem zero() { return FieldElem(); }
    static FieldElem one() { return FieldElem(1); }
    static FieldElem q_power(int k) { return FieldElem(LaurentPoly::q(k)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const;
    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string to_string() const;
    std::size_t complexity() const { return num_.complexity() + den_.complexity(); }
    std::size_t hash() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

// [r]_q as a field element.
FieldElem qint(int r);

enum class FieldOp { add, mul, neg, inv, div };

// Uniform dispatcher; b is ignored for neg/inv.
FieldElem field_arith(FieldOp op, const FieldElem& a, const FieldElem& b = FieldElem());

// Parses the textual form produced by to_string, e.g. "(q^2-1)/(q^3+q)".
FieldElem parse_field_elem(const std::string& text);

}  // namespace qaffine
