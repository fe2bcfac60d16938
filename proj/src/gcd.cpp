#include <algorithm>

#include "lndcert/poly.hpp"

// Multivariate gcd over Q by recursion on variables: strip contents with
// respect to a pivot variable, run a subresultant polynomial-remainder
// sequence on the primitive parts, and recombine. All divisions along the
// way are exact in the coefficient ring.

namespace lndcert {

namespace {

Poly must_divide(const Poly& g, const Poly& f, const char* where) {
    auto q = exact_divide(g, f);
    if (!q) throw Error(std::string(where) + ": inexact division");
    return std::move(*q);
}

std::size_t highest_var_used(const Poly& a, const Poly& b) {
    std::size_t n = a.table()->size();
    for (std::size_t i = n; i-- > 0;) {
        if (a.uses_var(i) || b.uses_var(i)) return i;
    }
    throw Error("poly_gcd: no variable in use");
}

Poly gcd_primitive(const Poly& a, const Poly& b);

/// gcd of the coefficients of f with respect to powers of var.
Poly content_in_var(const Poly& f, std::size_t var) {
    int lo = f.lowest_degree_in(var);
    int hi = f.degree_in(var);
    Poly c = Poly::zero(f.table());
    for (int k = lo; k <= hi; ++k) {
        Poly coeff = f.coefficient_of(var, k);
        if (coeff.is_zero()) continue;
        c = c.is_zero() ? canonical_associate(coeff) : gcd_primitive(c, canonical_associate(coeff));
        if (c.is_one()) break;
    }
    return c;
}

/// Pseudo-remainder of A by B in var: lc(B)^(deg A - deg B + 1) * A mod B.
Poly pseudo_rem(const Poly& A, const Poly& B, std::size_t var) {
    const Poly lcB = B.coefficient_of(var, B.degree_in(var));
    const int db = B.degree_in(var);
    Poly R = A;
    int e = A.degree_in(var) - db + 1;
    while (!R.is_zero() && R.degree_in(var) >= db) {
        int dr = R.degree_in(var);
        Poly lcR = R.coefficient_of(var, dr);
        Poly shift = Poly::monomial(A.table(), Monomial::var(A.table()->size(), var, dr - db));
        R = lcB * R - lcR * shift * B;
        --e;
    }
    for (; e > 0; --e) R = lcB * R;
    return R;
}

/// Subresultant PRS gcd of two primitive (in var) polynomials of positive
/// degree in var. Result is primitive in var.
Poly prs_gcd(Poly F1, Poly F2, std::size_t var) {
    if (F1.degree_in(var) < F2.degree_in(var)) std::swap(F1, F2);
    const VarTablePtr& table = F1.table();
    Poly g = Poly::constant(table, Rat(1));
    Poly h = Poly::constant(table, Rat(1));
    for (;;) {
        int d = F1.degree_in(var) - F2.degree_in(var);
        Poly R = pseudo_rem(F1, F2, var);
        if (R.is_zero()) break;
        if (R.degree_in(var) == 0) return Poly::constant(table, Rat(1));
        Poly divisor = g * h.pow(static_cast<unsigned>(d));
        F1 = std::move(F2);
        F2 = must_divide(R, divisor, "poly_gcd");
        g = F1.coefficient_of(var, F1.degree_in(var));
        if (d > 0) {
            Poly num = g.pow(static_cast<unsigned>(d));
            h = (d == 1) ? num : must_divide(num, h.pow(static_cast<unsigned>(d - 1)), "poly_gcd");
        }
    }
    Poly c = content_in_var(F2, var);
    return must_divide(F2, c, "poly_gcd");
}

/// gcd of primitive integer polynomials, up to sign.
Poly gcd_primitive(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.table(), Rat(1));
    if (a == b) return a;
    std::size_t var = highest_var_used(a, b);
    Poly ca = content_in_var(a, var);
    Poly cb = content_in_var(b, var);
    Poly pa = must_divide(a, ca, "poly_gcd");
    Poly pb = must_divide(b, cb, "poly_gcd");
    Poly cg = gcd_primitive(canonical_associate(ca), canonical_associate(cb));
    Poly pg;
    if (pa.degree_in(var) == 0 || pb.degree_in(var) == 0) {
        // One side is free of var after content removal, so the primitive
        // parts share no var-dependent factor.
        pg = Poly::constant(a.table(), Rat(1));
    } else {
        pg = prs_gcd(pa, pb, var);
    }
    return canonical_associate(cg * pg);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_table(a.table(), b.table(), "poly_gcd");
    if (a.is_zero() && b.is_zero()) throw Error("poly_gcd: both inputs zero");
    if (a.is_zero()) return canonical_associate(b);
    if (b.is_zero()) return canonical_associate(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.table(), Rat(1));
    return canonical_associate(gcd_primitive(canonical_associate(a), canonical_associate(b)));
}

}  // namespace lndcert
