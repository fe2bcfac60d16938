#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lndcert/monomial.hpp"
#include "lndcert/rat.hpp"
#include "lndcert/vartable.hpp"

namespace lndcert {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, sorted by graded
/// reverse lexicographic order with the leading term first. Two polynomials
/// over the same VarTable are equal iff their term lists are equal.
class Poly {
public:
    struct Term {
        Monomial mono;
        Rat coeff;
        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    Poly() = default;  // detached zero; usable only as a placeholder

    static Poly zero(VarTablePtr table);
    static Poly constant(VarTablePtr table, Rat c);
    static Poly variable(VarTablePtr table, std::size_t index);
    static Poly monomial(VarTablePtr table, Monomial m, Rat c = Rat(1));
    static Poly from_terms(VarTablePtr table, std::vector<Term> terms);  // normalizes

    const VarTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rat constant_value() const;

    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(std::size_t var) const;
    int lowest_degree_in(std::size_t var) const;
    bool uses_var(std::size_t var) const;
    /// True when every variable occurring in the polynomial is allowed.
    bool uses_only(const std::vector<bool>& allowed) const;

    /// Coefficient of var^k, as a polynomial over the same table with the
    /// var-exponent stripped to zero.
    Poly coefficient_of(std::size_t var, int k) const;

    const Term& leading_term() const;  // canonical (grevlex) leading term
    Rat leading_coeff() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rat& c) const;
    /// this * c*m, a single-term multiplication.
    Poly mul_term(const Monomial& m, const Rat& c) const;
    Poly pow(unsigned n) const;

    Poly derivative(std::size_t var) const;

    /// Ring morphism sending variable i to values[i]; values live over the
    /// target table.
    Poly evaluate(const VarTablePtr& target, std::span<const Poly> values) const;

    /// Transport to another table, variable i becoming var_map[i].
    Poly reindex(const VarTablePtr& target, std::span<const std::size_t> var_map) const;

    /// Content in the rational sense: gcd of numerators over lcm of
    /// denominators, so that p / content(p) has coprime integer coefficients.
    Rat content() const;
    Poly primitive_part() const;  // sign of the leading coefficient is kept

    bool operator==(const Poly& o) const;

    /// Canonical total order on polynomials (term lists compared
    /// lexicographically, monomials first). Used only for deterministic
    /// tie-breaking, not for algebra.
    static int compare(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    void normalize();

    VarTablePtr table_;
    std::vector<Term> terms_;  // grevlex descending, nonzero coefficients
};

inline Poly operator*(const Poly& p, const Rat& c) { return p.scaled(c); }
inline Poly operator*(const Rat& c, const Poly& p) { return p.scaled(c); }

/// Quotient g / f when the division is exact, nullopt otherwise.
std::optional<Poly> exact_divide(const Poly& g, const Poly& f);

/// True iff f divides g (f nonzero); on success and when quotient is given,
/// stores q with g = f*q.
bool poly_divides(const Poly& f, const Poly& g, Poly* quotient = nullptr);

/// Greatest common divisor, normalized to be primitive with positive leading
/// coefficient. Throws when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Primitive part with positive leading coefficient: the canonical associate
/// used to normalize gcds and basis elements.
Poly canonical_associate(const Poly& p);

}  // namespace lndcert
