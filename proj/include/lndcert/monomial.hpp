#pragma once

#include <numeric>
#include <vector>

#include "lndcert/util.hpp"

namespace lndcert {

/// Power product as an exponent vector, one entry per variable of a VarTable.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial var(std::size_t nvars, std::size_t i, int k = 1) {
        Monomial m(nvars);
        m.exp[i] = k;
        return m;
    }

    std::size_t nvars() const { return exp.size(); }
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    bool is_one() const {
        for (int e : exp)
            if (e != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < exp.size(); ++i)
            if (exp[i] > m.exp[i]) return false;
        return true;
    }

    /// m / this, requiring divisibility.
    Monomial divide_into(const Monomial& m) const {
        Monomial r = m;
        for (std::size_t i = 0; i < exp.size(); ++i) {
            r.exp[i] -= exp[i];
            if (r.exp[i] < 0) throw Error("Monomial: inexact division");
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t i = 0; i < r.exp.size(); ++i)
            if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exp.size(); ++i)
            if (a.exp[i] > 0 && b.exp[i] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exp == o.exp; }
};

/// Graded reverse lexicographic: compare total degree, then the rightmost
/// differing exponent decides (the monomial with the larger one is smaller).
inline bool grevlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exp.size(); i-- > 0;) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
    }
    return false;
}

/// Pure lexicographic in table order.
inline bool lex_less(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exp.size(); ++i) {
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    }
    return false;
}

inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_less(b, a); }

}  // namespace lndcert
