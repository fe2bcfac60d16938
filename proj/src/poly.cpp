#include "lndcert/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lndcert {

namespace {
struct TermGreater {
    bool operator()(const Poly::Term& a, const Poly::Term& b) const {
        return grevlex_greater(a.mono, b.mono);
    }
};
}  // namespace

Poly Poly::zero(VarTablePtr table) {
    Poly p;
    p.table_ = std::move(table);
    return p;
}

Poly Poly::constant(VarTablePtr table, Rat c) {
    Poly p;
    p.table_ = std::move(table);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(p.table_->size()), std::move(c)});
    return p;
}

Poly Poly::variable(VarTablePtr table, std::size_t index) {
    if (index >= table->size()) throw Error("Poly: variable index out of range");
    Poly p;
    p.table_ = std::move(table);
    p.terms_.push_back({Monomial::var(p.table_->size(), index), Rat(1)});
    return p;
}

Poly Poly::monomial(VarTablePtr table, Monomial m, Rat c) {
    if (m.nvars() != table->size()) throw Error("Poly: monomial arity mismatch");
    Poly p;
    p.table_ = std::move(table);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(VarTablePtr table, std::vector<Term> terms) {
    Poly p;
    p.table_ = std::move(table);
    p.terms_ = std::move(terms);
    for (const Term& t : p.terms_) {
        if (t.mono.nvars() != p.table_->size()) throw Error("Poly: monomial arity mismatch");
    }
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(), TermGreater{});
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one();
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("Poly: not a constant");
    return terms_[0].coeff;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_[0].mono.degree();  // grevlex leader has maximal total degree
}

int Poly::degree_in(std::size_t var) const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.exp[var]);
    return d;
}

int Poly::lowest_degree_in(std::size_t var) const {
    if (terms_.empty()) throw Error("Poly: lowest_degree_in of zero");
    int d = terms_[0].mono.exp[var];
    for (const Term& t : terms_) d = std::min(d, t.mono.exp[var]);
    return d;
}

bool Poly::uses_var(std::size_t var) const {
    for (const Term& t : terms_)
        if (t.mono.exp[var] != 0) return true;
    return false;
}

bool Poly::uses_only(const std::vector<bool>& allowed) const {
    for (const Term& t : terms_) {
        for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
            if (t.mono.exp[i] != 0 && !allowed[i]) return false;
        }
    }
    return true;
}

Poly Poly::coefficient_of(std::size_t var, int k) const {
    Poly p;
    p.table_ = table_;
    for (const Term& t : terms_) {
        if (t.mono.exp[var] == k) {
            Term s = t;
            s.mono.exp[var] = 0;
            p.terms_.push_back(std::move(s));
        }
    }
    p.normalize();
    return p;
}

const Poly::Term& Poly::leading_term() const {
    if (terms_.empty()) throw Error("Poly: leading term of zero");
    return terms_[0];
}

Rat Poly::leading_coeff() const { return leading_term().coeff; }

Poly Poly::operator-() const {
    Poly p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!table_) {
        *this = o;
        return *this;
    }
    if (o.is_zero()) return *this;
    require_same_table(table_, o.table_, "Poly::operator+");
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rat c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) merged.push_back({terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (grevlex_greater(terms_[i].mono, o.terms_[j].mono)) {
            merged.push_back(terms_[i++]);
        } else {
            merged.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
    terms_ = std::move(merged);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_table(a.table(), b.table(), "Poly::operator*");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.table() ? a.table() : b.table());
    std::map<Monomial, Rat, decltype([](const Monomial& x, const Monomial& y) {
                 return grevlex_greater(x, y);
             })>
        acc;
    for (const Poly::Term& s : a.terms()) {
        for (const Poly::Term& t : b.terms()) {
            Monomial m = s.mono * t.mono;
            Rat c = s.coeff * t.coeff;
            auto [it, inserted] = acc.emplace(std::move(m), c);
            if (!inserted) it->second += c;
        }
    }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!c.is_zero()) terms.push_back({m, std::move(c)});
    }
    return Poly::from_terms(a.table(), std::move(terms));
}

Poly Poly::scaled(const Rat& c) const {
    if (c.is_zero()) return Poly::zero(table_);
    Poly p = *this;
    for (Term& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
    if (c.is_zero()) return Poly::zero(table_);
    Poly p = *this;
    for (Term& t : p.terms_) {
        t.mono = t.mono * m;
        t.coeff *= c;
    }
    return p;
}

Poly Poly::pow(unsigned n) const {
    Poly result = Poly::constant(table_, Rat(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    Poly p;
    p.table_ = table_;
    for (const Term& t : terms_) {
        int e = t.mono.exp[var];
        if (e == 0) continue;
        Term s = t;
        s.mono.exp[var] = e - 1;
        s.coeff *= Rat(e);
        p.terms_.push_back(std::move(s));
    }
    p.normalize();
    return p;
}

Poly Poly::evaluate(const VarTablePtr& target, std::span<const Poly> values) const {
    if (values.size() != table_->size()) throw Error("Poly::evaluate: wrong number of values");
    for (const Poly& v : values) require_same_table(target, v.table(), "Poly::evaluate");
    // Cache powers of each value as needed.
    std::vector<std::vector<Poly>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(target, Rat(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[i]);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly acc = Poly::zero(target);
    for (const Term& t : terms_) {
        Poly prod = Poly::constant(target, t.coeff);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (t.mono.exp[i] != 0) prod = prod * power(i, t.mono.exp[i]);
        }
        acc += prod;
    }
    return acc;
}

Poly Poly::reindex(const VarTablePtr& target, std::span<const std::size_t> var_map) const {
    if (var_map.size() != table_->size()) throw Error("Poly::reindex: map arity mismatch");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < var_map.size(); ++i) {
            if (t.mono.exp[i] != 0) {
                if (var_map[i] >= target->size()) throw Error("Poly::reindex: bad target index");
                m.exp[var_map[i]] += t.mono.exp[i];
            }
        }
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(target, std::move(terms));
}

Rat Poly::content() const {
    Rat c(0);
    for (const Term& t : terms_) c = Rat::gcd(c, t.coeff);
    return c;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(content().inverse());
}

bool Poly::operator==(const Poly& o) const {
    if (!same_table(table_, o.table_)) return false;
    return terms_ == o.terms_;
}

int Poly::compare(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Term& s = a.terms_[i];
        const Term& t = b.terms_[i];
        if (!(s.mono == t.mono)) return grevlex_greater(s.mono, t.mono) ? 1 : -1;
        if (s.coeff != t.coeff) return s.coeff > t.coeff ? 1 : -1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() > b.terms_.size() ? 1 : -1;
    return 0;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c.sign() < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (t.mono.is_one()) {
            out << c.to_string();
        } else {
            bool printed = false;
            if (!c.is_one()) {
                out << c.to_string();
                printed = true;
            }
            for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
                int e = t.mono.exp[i];
                if (e == 0) continue;
                if (printed) out << "*";
                out << table_->name(i);
                if (e > 1) out << "^" << e;
                printed = true;
            }
        }
    }
    return out.str();
}

std::optional<Poly> exact_divide(const Poly& g, const Poly& f) {
    require_same_table(g.table(), f.table(), "exact_divide");
    if (f.is_zero()) throw Error("exact_divide: division by zero polynomial");
    Poly rem = g;
    Poly quot = Poly::zero(g.table());
    const Poly::Term& flt = f.leading_term();
    while (!rem.is_zero()) {
        const Poly::Term& rlt = rem.leading_term();
        if (!flt.mono.divides(rlt.mono)) return std::nullopt;
        Monomial m = flt.mono.divide_into(rlt.mono);
        Rat c = rlt.coeff / flt.coeff;
        quot += Poly::monomial(g.table(), m, c);
        rem -= f.mul_term(m, c);
    }
    return quot;
}

bool poly_divides(const Poly& f, const Poly& g, Poly* quotient) {
    if (f.is_zero()) throw Error("poly_divides: zero divisor");
    auto q = exact_divide(g, f);
    if (!q) return false;
    if (quotient) *quotient = std::move(*q);
    return true;
}

Poly canonical_associate(const Poly& p) {
    if (p.is_zero()) return p;
    Poly q = p.primitive_part();
    if (q.leading_coeff().sign() < 0) q = -q;
    return q;
}

}  // namespace lndcert
