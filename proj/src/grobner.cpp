#include "lndcert/grobner.hpp"

#include <algorithm>
#include <set>

namespace lndcert {

namespace {

bool block_less(const Monomial& a, const Monomial& b, std::size_t k) {
    auto part_degree = [](const Monomial& m, std::size_t lo, std::size_t hi) {
        int d = 0;
        for (std::size_t i = lo; i < hi; ++i) d += m.exp[i];
        return d;
    };
    auto part_grevlex_less = [&](std::size_t lo, std::size_t hi) -> int {
        int da = part_degree(a, lo, hi), db = part_degree(b, lo, hi);
        if (da != db) return da < db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        }
        return 0;
    };
    if (int c = part_grevlex_less(0, k); c != 0) return c > 0;
    return part_grevlex_less(k, a.exp.size()) > 0;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_less(a, b);
        case Kind::Lex:
            return lex_less(a, b);
        case Kind::Block:
            return block_less(a, b, elim_block);
    }
    return false;
}

const Poly::Term& leading_term(const Poly& f, const MonomialOrder& order) {
    if (f.is_zero()) throw Error("leading_term: zero polynomial");
    const Poly::Term* best = &f.terms()[0];
    for (const Poly::Term& t : f.terms()) {
        if (order.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
}

namespace {

/// One reduction step: cancel the given term of p against g's leading term.
void reduce_term(Poly& p, const Poly& g, const Poly::Term& glt, const Poly::Term& target) {
    Monomial m = glt.mono.divide_into(target.mono);
    Rat c = target.coeff / glt.coeff;
    p -= g.mul_term(m, c);
}

Poly full_reduce(Poly p, const std::vector<Poly>& basis, const MonomialOrder& order) {
    if (basis.empty()) return p;
    std::vector<const Poly::Term*> leads;
    leads.reserve(basis.size());
    for (const Poly& g : basis) leads.push_back(&leading_term(g, order));
    Poly out = Poly::zero(p.table());
    while (!p.is_zero()) {
        // Largest term of p w.r.t. the order, then try to reduce it.
        const Poly::Term& top = leading_term(p, order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i]->mono.divides(top.mono)) {
                reduce_term(p, basis[i], *leads[i], top);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out += Poly::monomial(p.table(), top.mono, top.coeff);
            p -= Poly::monomial(p.table(), top.mono, top.coeff);
        }
    }
    return out;
}

Poly s_poly(const Poly& f, const Poly& g, const MonomialOrder& order) {
    const Poly::Term& fl = leading_term(f, order);
    const Poly::Term& gl = leading_term(g, order);
    Monomial l = Monomial::lcm(fl.mono, gl.mono);
    Poly a = f.mul_term(fl.mono.divide_into(l), fl.coeff.inverse());
    Poly b = g.mul_term(gl.mono.divide_into(l), gl.coeff.inverse());
    return a - b;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Poly> gens, MonomialOrder order) {
    std::vector<Poly> basis;
    VarTablePtr table;
    for (Poly& g : gens) {
        if (!g.table()) continue;
        if (!table) table = g.table();
        require_same_table(table, g.table(), "buchberger");
        if (!g.is_zero()) basis.push_back(canonical_associate(g));
    }
    if (basis.empty()) return {order, {}};

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto make_pairs = [&](std::size_t upto) {
        std::vector<Pair> pairs;
        for (std::size_t i = 0; i < upto; ++i)
            for (std::size_t j = i + 1; j < upto; ++j)
                pairs.push_back({i, j,
                                 Monomial::lcm(leading_term(basis[i], order).mono,
                                               leading_term(basis[j], order).mono)});
        return pairs;
    };
    std::vector<Pair> pending = make_pairs(basis.size());
    std::set<std::pair<std::size_t, std::size_t>> done;

    while (!pending.empty()) {
        // Normal selection: smallest lcm first; index pair breaks ties.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            if (order.less(pending[k].lcm, pending[best].lcm) ||
                (pending[k].lcm == pending[best].lcm &&
                 std::pair(pending[k].i, pending[k].j) < std::pair(pending[best].i, pending[best].j)))
                best = k;
        }
        Pair p = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        done.insert({p.i, p.j});

        const Monomial& li = leading_term(basis[p.i], order).mono;
        const Monomial& lj = leading_term(basis[p.j], order).mono;
        if (Monomial::coprime(li, lj)) continue;  // product criterion
        // Chain criterion: skip when some other leading term divides the lcm
        // and both companion pairs are already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!leading_term(basis[k], order).mono.divides(p.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::pair(std::min(a, b), std::max(a, b));
            };
            if (done.count(key(p.i, k)) && done.count(key(p.j, k))) skip = true;
        }
        if (skip) continue;

        Poly r = full_reduce(s_poly(basis[p.i], basis[p.j], order), basis, order);
        if (r.is_zero()) continue;
        r = canonical_associate(r);
        std::size_t n = basis.size();
        for (std::size_t i = 0; i < n; ++i)
            pending.push_back(
                {i, n, Monomial::lcm(leading_term(basis[i], order).mono, leading_term(r, order).mono)});
        basis.push_back(std::move(r));
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = leading_term(basis[i], order).mono;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = leading_term(basis[j], order).mono;
            if (lj.divides(li) && !(li == lj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Reduce each element against the others for the unique reduced basis.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = canonical_associate(full_reduce(minimal[i], others, order));
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return order.greater(leading_term(a, order).mono, leading_term(b, order).mono);
    });
    return {order, std::move(minimal)};
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    if (gb.gens.empty()) return f;
    require_same_table(f.table(), gb.gens[0].table(), "normal_form");
    return full_reduce(f, gb.gens, gb.order);
}

MembershipResult subalgebra_membership(const Poly& f, const Algebra& B) {
    require_same_table(f.table(), B.table(), "subalgebra_membership");
    const VarTable& amb = *B.table();
    const std::size_t n_amb = amb.size();
    const std::size_t n_gen = B.generators().size();

    // Extended ring: ambient variables then one tag per generator.
    std::vector<std::string> ext_params(amb.names().begin(),
                                        amb.names().begin() + static_cast<std::ptrdiff_t>(amb.param_count()));
    std::vector<std::string> ext_mains(amb.names().begin() + static_cast<std::ptrdiff_t>(amb.param_count()),
                                       amb.names().end());
    std::vector<std::string> tag_names;
    for (std::size_t i = 0; i < n_gen; ++i) {
        std::string tag = "g" + std::to_string(i + 1);
        while (amb.index_of(tag)) tag = "_" + tag;
        tag_names.push_back(tag);
        ext_mains.push_back(tag);
    }
    VarTablePtr ext = VarTable::make(ext_params, ext_mains);

    std::vector<std::size_t> amb_to_ext(n_amb);
    for (std::size_t i = 0; i < n_amb; ++i) amb_to_ext[i] = i;

    std::vector<Poly> ideal;
    for (std::size_t i = 0; i < n_gen; ++i) {
        Poly tag = Poly::variable(ext, n_amb + i);
        ideal.push_back(tag - B.generators()[i].reindex(ext, amb_to_ext));
    }
    GroebnerBasis gb = buchberger(std::move(ideal), MonomialOrder::block(n_amb));
    Poly nf = normal_form(f.reindex(ext, amb_to_ext), gb);

    MembershipResult result;
    result.witness_table = VarTable::make({}, tag_names);
    std::vector<bool> tags_only(ext->size(), false);
    for (std::size_t i = 0; i < n_gen; ++i) tags_only[n_amb + i] = true;
    if (!nf.uses_only(tags_only)) {
        result.member = false;
        result.witness = Poly::zero(result.witness_table);
        return result;
    }
    result.member = true;
    std::vector<std::size_t> ext_to_tag(ext->size(), 0);
    for (std::size_t i = 0; i < n_gen; ++i) ext_to_tag[n_amb + i] = i;
    result.witness = nf.reindex(result.witness_table, ext_to_tag);
    return result;
}

}  // namespace lndcert
