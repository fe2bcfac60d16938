#pragma once

#include <cstddef>
#include <vector>

#include "lndcert/algebra.hpp"
#include "lndcert/poly.hpp"

namespace lndcert {

/// Total order on monomials, compatible with multiplication.
/// block(k) is the elimination order comparing the first k variables by
/// grevlex and breaking ties by grevlex on the rest; monomials involving any
/// of the first k variables are greater than monomials free of them.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, Block };
    Kind kind = Kind::Grevlex;
    std::size_t elim_block = 0;

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder block(std::size_t elim_block_size) {
        return {Kind::Block, elim_block_size};
    }

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool operator==(const MonomialOrder&) const = default;
};

/// Reduced Groebner basis: pairwise S-polynomials reduce to zero, no leading
/// term divides another, every element reduced against the others and scaled
/// to primitive integer form with positive leading coefficient.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Poly> gens;
};

/// Leading term of f with respect to an arbitrary order (linear scan; the
/// stored canonical order of Poly is grevlex only).
const Poly::Term& leading_term(const Poly& f, const MonomialOrder& order);

GroebnerBasis buchberger(std::vector<Poly> gens, MonomialOrder order);

/// Remainder of multivariate division of f by the basis; fully reduced, so it
/// is the unique normal form. Zero iff f lies in the ideal.
Poly normal_form(const Poly& f, const GroebnerBasis& gb);

/// Outcome of the subalgebra membership test. On success the witness is a
/// polynomial over a fresh table with one variable g1..gk per generator;
/// substituting the generators for g1..gk reproduces the queried element.
struct MembershipResult {
    bool member = false;
    Poly witness;           // over witness_table; meaningful only when member
    VarTablePtr witness_table;
};

/// Exact membership of f in the subalgebra generated by B's generators,
/// decided by the tag-variable normal-form test: reduce f modulo the ideal
/// <tag_i - g_i> under a block order with ambient variables above tags; f is
/// a member iff its normal form involves tag variables only, and that normal
/// form is the witness expression of f in the generators.
MembershipResult subalgebra_membership(const Poly& f, const Algebra& B);

}  // namespace lndcert
