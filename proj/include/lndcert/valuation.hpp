#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lndcert/algebra.hpp"
#include "lndcert/ratfunc.hpp"

namespace lndcert {

/// Rank-one discrete valuation on the coefficient field (rational functions
/// of the parameter variables), trivial on Q.
struct BaseValuation {
    enum class Kind { Trivial, OrderAtValue, OrderAtInfinity, OrderAtIrreducible };
    Kind kind = Kind::Trivial;
    std::size_t param = 0;   // parameter index, for the order_at_* kinds
    Rat at = Rat(0);         // the value c, for order_at_value
    Poly irreducible;        // nonconstant parameter-only poly, assumed irreducible

    static BaseValuation trivial() { return {}; }
    static BaseValuation order_at_value(std::size_t param, Rat c);
    static BaseValuation order_at_infinity(std::size_t param);
    static BaseValuation order_at_irreducible(Poly p);

    /// Canonical descriptor, e.g. "order_at_infinity(t)".
    std::string to_string(const VarTable& table) const;
};

/// Element of the lexicographically ordered group Z^n x Z: one slot per main
/// variable, then the base-valuation part.
struct LexValue {
    std::vector<int> main;
    int base = 0;

    bool is_nonnegative() const;
    LexValue operator+(const LexValue& o) const;
    LexValue operator-(const LexValue& o) const;
    friend bool operator==(const LexValue& a, const LexValue& b) = default;
    friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b);

    std::string to_string() const;  // "(1,0|-1)"
    static LexValue parse(const std::string& text);
};

/// Value of a nonzero parameter-only fraction under the base valuation.
/// Throws on zero input or when main variables occur.
int base_value(const BaseValuation& v, const RatFunc& f);

/// Extension to the whole rational function field: main variables are peeled
/// off in table order, each contributing its lowest exponent, and the final
/// parameter-only coefficient is measured by the base valuation.
LexValue gauss_lex_value(const BaseValuation& v, const RatFunc& f);
LexValue gauss_lex_value(const BaseValuation& v, const Poly& f);

/// Checks that every generator has nonnegative extended value, which forces
/// nonnegativity on the whole subalgebra (and on its integral closure).
struct NonnegCertificate {
    bool all_nonneg = false;
    std::vector<LexValue> generator_values;
    std::optional<std::size_t> violating_generator;
};
NonnegCertificate nonneg_certificate(const Algebra& B, const BaseValuation& v);

/// One-valuation non-membership proof: v nonnegative on B but negative on
/// alpha shows alpha is outside B and outside its integral closure.
struct NonMembershipCertificate {
    bool proved = false;  // false: inconclusive, not a membership claim
    LexValue target_value;
    NonnegCertificate generators;
};
NonMembershipCertificate non_membership_by_valuation(const RatFunc& alpha, const Algebra& B,
                                                     const BaseValuation& v);

}  // namespace lndcert
