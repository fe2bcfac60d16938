#pragma once

#include <string>

#include "lndcert/poly.hpp"

namespace lndcert {

/// Reduced fraction of two polynomials. Invariants: the denominator is
/// nonzero with positive leading coefficient, and numerator/denominator share
/// neither a polynomial factor nor a rational content (gcd = 1 in the
/// content-and-primitive-part sense). Zero is 0/1. Content reduction makes
/// the pair unique, so a polynomial with fractional coefficients is stored
/// with its denominator pulled out: 1/2*x is x over 2.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den);  // normalizes; throws on zero denominator
    explicit RatFunc(Poly num);

    static RatFunc zero(VarTablePtr table) { return RatFunc(Poly::zero(std::move(table))); }
    static RatFunc constant(VarTablePtr table, Rat c) {
        return RatFunc(Poly::constant(std::move(table), std::move(c)));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarTablePtr& table() const { return num_.table(); }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the value is a polynomial (constant denominator).
    bool is_poly() const { return den_.is_constant(); }
    /// The polynomial value; requires is_poly().
    Poly as_poly() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);  // throws on zero divisor
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    RatFunc pow(int n) const;  // negative exponents allowed for nonzero values

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

/// ratfunc_normalize of the raw pair num/den: construction is normalization.
inline RatFunc ratfunc_normalize(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

}  // namespace lndcert
