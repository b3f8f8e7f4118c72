#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qaffine/expr.hpp"

namespace qaffine {

// Raised by ideal_contains on non-homogeneous input.
class InhomogeneousInput : public Error {
public:
    explicit InhomogeneousInput(const std::string& msg) : Error(msg) {}
};

// Named set of homogeneous ideal generators.
struct RelationSet {
    struct Element {
        std::string id;
        Expr expr;
        Weight weight;
        int parity = 0;
    };
    std::string name;
    std::vector<Element> elements;
};

struct CertTerm {
    Monomial left;
    int rel_index = 0;  // into the relation set the report refers to
    std::string rel_id;
    Monomial right;
    FieldElem coeff;
};

// Explicit combination sum coeff * left * relation * right that reproduces
// the certified expression exactly in the free algebra.
struct Certificate {
    std::vector<CertTerm> terms;
};

enum class VerifyStatus { Proved, Inconclusive, RefutedByGrading };

std::string to_string(VerifyStatus st);

struct Bounds {
    int max_degree = -1;     // -1: degree of straightened input + 2
    int max_k_exponent = 2;
};

struct VerifyReport {
    VerifyStatus status = VerifyStatus::Inconclusive;
    std::optional<Certificate> certificate;
    Bounds bounds_used;
    double millis = 0.0;
    std::string detail;
};

// Rewrites a DJ expression to the triangular F-word * K-word * E-word shape,
// with the K-word sorted and K K^-1 cancelled. Equal to the input in U_q.
Expr straighten(const ParitySeq& s, const Expr& e);

// All words over the given alphabet (GenKind::E or GenKind::F) whose letter
// multiset has the given weight; empty when the weight is not a valid
// combination of simple roots.
std::vector<Monomial> weight_monomials(const ParitySeq& s, const Weight& w, GenKind alphabet);

// The Serre-type defining relations applicable to s, in the E or F letters.
const RelationSet& serre_relations(const ParitySeq& s, GenKind alphabet);

// E-relations followed by F-relations; the set verify_zero certificates
// refer to.
const RelationSet& verify_relations(const ParitySeq& s);

// Bounded search for e = sum coeff * u * rel * v by reduction plus exact
// linear algebra. One-sided: never claims non-membership.
VerifyReport ideal_contains(const ParitySeq& s, const Expr& e, const RelationSet& rels,
                            Bounds bounds = {});

// Proves e = 0 in U_q by straightening and per-stratum ideal membership.
VerifyReport verify_zero(const ParitySeq& s, const Expr& e, Bounds bounds = {});

// Expands a certificate against its relation set.
Expr replay_certificate(const Certificate& cert, const RelationSet& rels);

// Clears the per-parity-sequence straightening caches (mainly for tests).
void clear_normalize_caches();

}  // namespace qaffine
