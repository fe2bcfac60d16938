#include "lndcert/valuation.hpp"

#include <cctype>
#include <sstream>

namespace lndcert {

BaseValuation BaseValuation::order_at_value(std::size_t param, Rat c) {
    BaseValuation v;
    v.kind = Kind::OrderAtValue;
    v.param = param;
    v.at = std::move(c);
    return v;
}

BaseValuation BaseValuation::order_at_infinity(std::size_t param) {
    BaseValuation v;
    v.kind = Kind::OrderAtInfinity;
    v.param = param;
    return v;
}

BaseValuation BaseValuation::order_at_irreducible(Poly p) {
    if (p.is_constant()) throw Error("BaseValuation: irreducible generator must be nonconstant");
    BaseValuation v;
    v.kind = Kind::OrderAtIrreducible;
    v.irreducible = std::move(p);
    return v;
}

std::string BaseValuation::to_string(const VarTable& table) const {
    switch (kind) {
        case Kind::Trivial:
            return "trivial";
        case Kind::OrderAtValue:
            return "order_at_value(" + table.name(param) + ", " + at.to_string() + ")";
        case Kind::OrderAtInfinity:
            return "order_at_infinity(" + table.name(param) + ")";
        case Kind::OrderAtIrreducible:
            return "order_at_irreducible(" + irreducible.to_string() + ")";
    }
    return "trivial";
}

bool LexValue::is_nonnegative() const {
    for (int m : main) {
        if (m > 0) return true;
        if (m < 0) return false;
    }
    return base >= 0;
}

LexValue LexValue::operator+(const LexValue& o) const {
    if (main.size() != o.main.size()) throw Error("LexValue: arity mismatch");
    LexValue r = *this;
    for (std::size_t i = 0; i < main.size(); ++i) r.main[i] += o.main[i];
    r.base += o.base;
    return r;
}

LexValue LexValue::operator-(const LexValue& o) const {
    if (main.size() != o.main.size()) throw Error("LexValue: arity mismatch");
    LexValue r = *this;
    for (std::size_t i = 0; i < main.size(); ++i) r.main[i] -= o.main[i];
    r.base -= o.base;
    return r;
}

std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
    if (a.main.size() != b.main.size()) throw Error("LexValue: arity mismatch");
    for (std::size_t i = 0; i < a.main.size(); ++i) {
        if (a.main[i] != b.main[i]) return a.main[i] <=> b.main[i];
    }
    return a.base <=> b.base;
}

std::string LexValue::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < main.size(); ++i) {
        if (i) out << ",";
        out << main[i];
    }
    out << "|" << base << ")";
    return out.str();
}

LexValue LexValue::parse(const std::string& text) {
    LexValue v;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw Error("LexValue: expected '" + std::string(1, c) + "' in '" + text + "'");
        ++i;
    };
    auto integer = [&]() {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw Error("LexValue: expected integer in '" + text + "'");
        return std::stoi(text.substr(start, i - start));
    };
    expect('(');
    skip_ws();
    if (i < text.size() && text[i] != '|') {
        v.main.push_back(integer());
        skip_ws();
        while (i < text.size() && text[i] == ',') {
            ++i;
            v.main.push_back(integer());
            skip_ws();
        }
    }
    expect('|');
    v.base = integer();
    expect(')');
    return v;
}

namespace {

int order_at_poly_root(const Poly& f, const Poly& divisor) {
    int order = 0;
    Poly g = f;
    Poly q;
    while (poly_divides(divisor, g, &q)) {
        g = q;
        ++order;
    }
    return order;
}

int base_value_poly(const BaseValuation& v, const Poly& f, const VarTable& table) {
    if (f.is_zero()) throw Error("base_value: zero input");
    switch (v.kind) {
        case BaseValuation::Kind::Trivial:
            return 0;
        case BaseValuation::Kind::OrderAtValue: {
            if (!table.is_param(v.param)) throw Error("base_value: not a parameter variable");
            Poly divisor = Poly::variable(f.table(), v.param) - Poly::constant(f.table(), v.at);
            return order_at_poly_root(f, divisor);
        }
        case BaseValuation::Kind::OrderAtInfinity:
            if (!table.is_param(v.param)) throw Error("base_value: not a parameter variable");
            return -f.degree_in(v.param);
        case BaseValuation::Kind::OrderAtIrreducible: {
            require_same_table(f.table(), v.irreducible.table(), "base_value");
            for (std::size_t j = 0; j < table.main_count(); ++j) {
                if (v.irreducible.uses_var(table.main_index(j)))
                    throw Error("base_value: irreducible generator involves a main variable");
            }
            return order_at_poly_root(f, v.irreducible);
        }
    }
    return 0;
}

}  // namespace

int base_value(const BaseValuation& v, const RatFunc& f) {
    if (f.is_zero()) throw Error("base_value: zero input");
    const VarTable& table = *f.table();
    for (std::size_t j = 0; j < table.main_count(); ++j) {
        if (f.num().uses_var(table.main_index(j)) || f.den().uses_var(table.main_index(j)))
            throw Error("base_value: input involves main variable '" + table.name(table.main_index(j)) +
                        "'");
    }
    return base_value_poly(v, f.num(), table) - base_value_poly(v, f.den(), table);
}

LexValue gauss_lex_value(const BaseValuation& v, const Poly& f) {
    if (f.is_zero()) throw Error("gauss_lex_value: zero input");
    const VarTable& table = *f.table();
    LexValue value;
    value.main.resize(table.main_count(), 0);
    Poly current = f;
    for (std::size_t j = 0; j < table.main_count(); ++j) {
        std::size_t var = table.main_index(j);
        int m = current.lowest_degree_in(var);
        value.main[j] = m;
        current = current.coefficient_of(var, m);
    }
    value.base = base_value_poly(v, current, table);
    return value;
}

LexValue gauss_lex_value(const BaseValuation& v, const RatFunc& f) {
    if (f.is_zero()) throw Error("gauss_lex_value: zero input");
    return gauss_lex_value(v, f.num()) - gauss_lex_value(v, f.den());
}

NonnegCertificate nonneg_certificate(const Algebra& B, const BaseValuation& v) {
    NonnegCertificate cert;
    cert.all_nonneg = true;
    for (std::size_t i = 0; i < B.generators().size(); ++i) {
        LexValue value = gauss_lex_value(v, B.generators()[i]);
        bool ok = value.is_nonnegative();
        cert.generator_values.push_back(std::move(value));
        if (!ok && cert.all_nonneg) {
            cert.all_nonneg = false;
            cert.violating_generator = i;
        }
    }
    return cert;
}

NonMembershipCertificate non_membership_by_valuation(const RatFunc& alpha, const Algebra& B,
                                                     const BaseValuation& v) {
    if (alpha.is_zero()) throw Error("non_membership_by_valuation: zero target");
    require_same_table(alpha.table(), B.table(), "non_membership_by_valuation");
    NonMembershipCertificate cert;
    cert.target_value = gauss_lex_value(v, alpha);
    cert.generators = nonneg_certificate(B, v);
    cert.proved = cert.generators.all_nonneg && !cert.target_value.is_nonnegative();
    return cert;
}

}  // namespace lndcert
