#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lndcert/algebra.hpp"
#include "lndcert/grobner.hpp"
#include "lndcert/ratfunc.hpp"

namespace lndcert {

/// Derivation of the ambient polynomial ring, determined by the images of the
/// variables and extended by the Leibniz rule. Images are polynomials.
class Derivation {
public:
    Derivation(VarTablePtr table, std::vector<Poly> images, std::string name = "");

    static Derivation zero(VarTablePtr table);
    /// d/d(var), scaled by coeff.
    static Derivation partial(VarTablePtr table, std::size_t var);

    const VarTablePtr& table() const { return table_; }
    const std::vector<Poly>& images() const { return images_; }
    const Poly& image(std::size_t var) const { return images_.at(var); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool is_zero() const;
    bool operator==(const Derivation& o) const;

private:
    VarTablePtr table_;
    std::vector<Poly> images_;  // one per variable
    std::string name_;
};

Poly apply(const Derivation& D, const Poly& f);
/// Extension to fractions by the quotient rule.
RatFunc apply_ratfunc(const Derivation& D, const RatFunc& f);
/// D^n(f), exact.
Poly iterate(const Derivation& D, Poly f, unsigned n);

/// Stability of D on B: D maps B into itself iff every generator image is a
/// member, decided exactly. Witnesses are the membership expressions of the
/// generator images, over the tag table g1..gk.
struct StabilityResult {
    bool stable = false;
    std::vector<Poly> witnesses;            // per generator, when stable
    VarTablePtr witness_table;
    std::optional<std::size_t> bad_generator;  // index, when unstable
};
StabilityResult check_stability(const Derivation& D, const Algebra& B);

/// Local-nilpotency status of D restricted to B. Nilpotency index n_i is the
/// least n with D^n(g_i) = 0. A bounded search that fails is inconclusive,
/// never a disproof.
struct LndStatus {
    bool nilpotent = false;
    std::vector<unsigned> indices;  // per generator, when nilpotent
    unsigned bound = 0;             // the bound used (reported when inconclusive)
};
constexpr unsigned kDefaultIterBound = 64;
/// Requires a stable pair; verifies stability and throws on an unstable one.
LndStatus check_lnd(const Derivation& D, const Algebra& B, unsigned iter_bound = kDefaultIterBound);

/// Least n with D^n(f) = 0, or nullopt if the bound is exceeded.
std::optional<unsigned> nilpotency_index(const Derivation& D, const Poly& f, unsigned bound);
/// True when every variable is annihilated by some power of D within the
/// bound; this proves local nilpotency on the whole ambient ring.
bool ambient_locally_nilpotent(const Derivation& D, unsigned bound = kDefaultIterBound);

/// exp(D) applied to f: sum of D^n(f)/n!, finite for locally nilpotent D.
/// Throws when iteration does not terminate within the bound.
Poly exp_map(const Derivation& D, const Poly& f, unsigned bound = kDefaultIterBound);

/// exp(E) . D . exp(-E) as a derivation; locally nilpotent whenever D is.
Derivation conjugate(const Derivation& D, const Derivation& E, unsigned bound = kDefaultIterBound);

/// Local slice search: s ranges over products of generators by increasing
/// word length; a hit needs D(s) != 0 and D^2(s) = 0. Among hits of minimal
/// word length the one with the canonically largest D(s) wins.
struct LocalSlice {
    Poly s;
    Poly a;  // a = D(s), nonzero, killed by D
};
std::optional<LocalSlice> find_local_slice(const Derivation& D, const Algebra& B,
                                           unsigned search_degree);

/// Kernel-coefficient expansion of b along a local slice s with a = D(s):
/// with sigma = s/a and pi(f) = sum_k (-1)^k D^k(f) sigma^k / k!, returns
/// c_n = pi(D^n(b))/n!. Each c_n is killed by the extended derivation and
/// b = sum c_n sigma^n exactly, denominators being powers of a.
std::vector<RatFunc> dixmier_decompose(const Derivation& D, const Poly& s, const Poly& b,
                                       unsigned bound = kDefaultIterBound);

}  // namespace lndcert
