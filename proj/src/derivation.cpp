#include "lndcert/derivation.hpp"

#include <algorithm>

namespace lndcert {

Derivation::Derivation(VarTablePtr table, std::vector<Poly> images, std::string name)
    : table_(std::move(table)), images_(std::move(images)), name_(std::move(name)) {
    if (!table_) throw Error("Derivation: missing variable table");
    if (images_.size() != table_->size()) throw Error("Derivation: one image per variable required");
    for (const Poly& p : images_) require_same_table(table_, p.table(), "Derivation");
}

Derivation Derivation::zero(VarTablePtr table) {
    std::vector<Poly> images(table->size(), Poly::zero(table));
    return Derivation(table, std::move(images));
}

Derivation Derivation::partial(VarTablePtr table, std::size_t var) {
    std::vector<Poly> images(table->size(), Poly::zero(table));
    images.at(var) = Poly::constant(table, Rat(1));
    return Derivation(table, std::move(images), "d/d" + table->name(var));
}

bool Derivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Derivation::operator==(const Derivation& o) const {
    return same_table(table_, o.table_) && images_ == o.images_;
}

Poly apply(const Derivation& D, const Poly& f) {
    require_same_table(D.table(), f.table(), "apply");
    Poly out = Poly::zero(f.table());
    for (std::size_t v = 0; v < D.table()->size(); ++v) {
        if (D.image(v).is_zero()) continue;
        Poly df = f.derivative(v);
        if (!df.is_zero()) out += D.image(v) * df;
    }
    return out;
}

RatFunc apply_ratfunc(const Derivation& D, const RatFunc& f) {
    Poly du = apply(D, f.num());
    Poly dv = apply(D, f.den());
    return RatFunc(du * f.den() - f.num() * dv, f.den() * f.den());
}

Poly iterate(const Derivation& D, Poly f, unsigned n) {
    for (unsigned i = 0; i < n && !f.is_zero(); ++i) f = apply(D, f);
    return f;
}

StabilityResult check_stability(const Derivation& D, const Algebra& B) {
    require_same_table(D.table(), B.table(), "check_stability");
    StabilityResult r;
    r.stable = true;
    for (std::size_t i = 0; i < B.generators().size(); ++i) {
        MembershipResult m = subalgebra_membership(apply(D, B.generators()[i]), B);
        if (!m.member) {
            r.stable = false;
            r.bad_generator = i;
            r.witnesses.clear();
            r.witness_table = m.witness_table;
            return r;
        }
        r.witness_table = m.witness_table;
        r.witnesses.push_back(std::move(m.witness));
    }
    return r;
}

std::optional<unsigned> nilpotency_index(const Derivation& D, const Poly& f, unsigned bound) {
    Poly g = f;
    for (unsigned n = 0; n <= bound; ++n) {
        if (g.is_zero()) return n;
        g = apply(D, g);
    }
    return std::nullopt;
}

LndStatus check_lnd(const Derivation& D, const Algebra& B, unsigned iter_bound) {
    StabilityResult st = check_stability(D, B);
    if (!st.stable)
        throw Error("check_lnd: derivation does not map the algebra into itself (generator " +
                    std::to_string(*st.bad_generator + 1) + ")");
    LndStatus status;
    status.bound = iter_bound;
    status.nilpotent = true;
    for (const Poly& g : B.generators()) {
        auto idx = nilpotency_index(D, g, iter_bound);
        if (!idx) {
            status.nilpotent = false;
            status.indices.clear();
            return status;
        }
        status.indices.push_back(*idx);
    }
    return status;
}

bool ambient_locally_nilpotent(const Derivation& D, unsigned bound) {
    for (std::size_t v = 0; v < D.table()->size(); ++v) {
        if (!nilpotency_index(D, Poly::variable(D.table(), v), bound)) return false;
    }
    return true;
}

Poly exp_map(const Derivation& D, const Poly& f, unsigned bound) {
    Poly acc = Poly::zero(f.table());
    Poly term = f;
    for (unsigned n = 0; !term.is_zero(); ++n) {
        if (n > bound) throw Error("exp_map: nilpotency bound exceeded");
        acc += term.scaled(Rat::factorial(n).inverse());
        term = apply(D, term);
    }
    return acc;
}

Derivation conjugate(const Derivation& D, const Derivation& E, unsigned bound) {
    require_same_table(D.table(), E.table(), "conjugate");
    Derivation minusE(E.table(), [&] {
        std::vector<Poly> imgs;
        for (const Poly& p : E.images()) imgs.push_back(-p);
        return imgs;
    }());
    std::vector<Poly> images;
    for (std::size_t v = 0; v < D.table()->size(); ++v) {
        Poly back = exp_map(minusE, Poly::variable(D.table(), v), bound);
        images.push_back(exp_map(E, apply(D, back), bound));
    }
    return Derivation(D.table(), std::move(images));
}

namespace {
/// Next non-decreasing index tuple over {0..n-1}; false when exhausted.
bool next_multiset(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t pos = idx.size();
    while (pos > 0) {
        --pos;
        if (idx[pos] + 1 < n) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < idx.size(); ++q) idx[q] = idx[pos];
            return true;
        }
    }
    return false;
}
}  // namespace

std::optional<LocalSlice> find_local_slice(const Derivation& D, const Algebra& B,
                                           unsigned search_degree) {
    require_same_table(D.table(), B.table(), "find_local_slice");
    const std::vector<Poly>& gens = B.generators();
    if (gens.empty()) return std::nullopt;
    for (unsigned len = 1; len <= search_degree; ++len) {
        // Words of the given length: non-decreasing index tuples.
        std::vector<std::size_t> idx(len, 0);
        std::optional<LocalSlice> best;
        do {
            Poly s = Poly::constant(B.table(), Rat(1));
            for (std::size_t i : idx) s = s * gens[i];
            Poly a = apply(D, s);
            if (!a.is_zero() && apply(D, a).is_zero()) {
                if (!best || Poly::compare(a, best->a) > 0) best = LocalSlice{std::move(s), std::move(a)};
            }
        } while (next_multiset(idx, gens.size()));
        if (best) return best;
    }
    return std::nullopt;
}

std::vector<RatFunc> dixmier_decompose(const Derivation& D, const Poly& s, const Poly& b,
                                       unsigned bound) {
    require_same_table(D.table(), s.table(), "dixmier_decompose");
    require_same_table(D.table(), b.table(), "dixmier_decompose");
    Poly a = apply(D, s);
    if (a.is_zero()) throw Error("dixmier_decompose: D(s) = 0, not a local slice");
    if (!apply(D, a).is_zero()) throw Error("dixmier_decompose: D^2(s) != 0, not a local slice");
    if (!ambient_locally_nilpotent(D, bound))
        throw Error("dixmier_decompose: derivation not locally nilpotent within bound");

    RatFunc sigma(s, a);
    // pi(f) = sum_k (-1)^k D^k(f) sigma^k / k!; terminates since D is
    // locally nilpotent.
    auto project = [&](const Poly& f) {
        RatFunc acc = RatFunc::zero(f.table());
        Poly it = f;
        RatFunc sig_pow = RatFunc::constant(f.table(), Rat(1));
        Rat sign(1);
        for (unsigned k = 0; !it.is_zero(); ++k) {
            if (k > bound) throw Error("dixmier_decompose: bound exceeded");
            RatFunc term = RatFunc(it.scaled(sign * Rat::factorial(k).inverse())) * sig_pow;
            acc += term;
            it = apply(D, it);
            sig_pow *= sigma;
            sign = -sign;
        }
        return acc;
    };

    std::vector<RatFunc> coeffs;
    Poly dn = b;
    for (unsigned n = 0; !dn.is_zero(); ++n) {
        if (n > bound) throw Error("dixmier_decompose: bound exceeded");
        coeffs.push_back(project(dn) * RatFunc::constant(b.table(), Rat::factorial(n).inverse()));
        dn = apply(D, dn);
    }
    if (coeffs.empty()) coeffs.push_back(RatFunc::zero(b.table()));
    return coeffs;
}

}  // namespace lndcert
