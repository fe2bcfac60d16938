#include "lndcert/invariants.hpp"

#include <algorithm>

namespace lndcert {

namespace {

/// Canonical basis polys from a set of spanning polys: index the union of
/// supports, row-reduce, convert back.
std::vector<Poly> canonical_span_basis(const VarTablePtr& table, const std::vector<Poly>& span) {
    MonomialIndexer ix;
    for (const Poly& p : span) ix.add_support(p);
    RatMatrix m;
    for (const Poly& p : span) m.push_back(ix.to_row(p));
    if (!m.empty()) {
        for (RatRow& row : m) row.resize(ix.size(), Rat(0));
    }
    RatMatrix basis = rref(std::move(m)).mat;
    std::vector<Poly> out;
    for (const RatRow& row : basis) out.push_back(ix.to_poly(table, row));
    return out;
}

/// Kernel of the linear map c -> sum_j c_j images[j], as polys over the
/// spanning set: returns coefficient rows.
RatMatrix kernel_of_images(const std::vector<Poly>& images) {
    MonomialIndexer ix;
    for (const Poly& p : images) ix.add_support(p);
    // Rows indexed by target monomials, columns by the spanning polys.
    RatMatrix m(ix.size(), RatRow(images.size(), Rat(0)));
    for (std::size_t j = 0; j < images.size(); ++j) {
        for (const Poly::Term& t : images[j].terms()) {
            m[ix.index_of(t.mono)][j] = t.coeff;
        }
    }
    return nullspace(m, images.size());
}

std::vector<Poly> combine(const std::vector<Poly>& gens, const RatMatrix& coeffs,
                          const VarTablePtr& table) {
    std::vector<Poly> out;
    for (const RatRow& row : coeffs) {
        Poly p = Poly::zero(table);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (!row[j].is_zero()) p += gens[j].scaled(row[j]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

KernelBasis kernel_basis_bounded(const Derivation& D, const TruncationSpec& spec) {
    std::vector<Derivation> one{D};
    return kernel_intersection_bounded(D.table(), one, spec);
}

KernelBasis kernel_intersection_bounded(const VarTablePtr& table, std::span<const Derivation> ds,
                                        const TruncationSpec& spec) {
    for (const Derivation& D : ds) require_same_table(table, D.table(), "kernel_intersection_bounded");
    std::vector<Monomial> window = monomials_up_to(table->size(), spec.ambient_degree);
    if (ds.empty()) {
        KernelBasis out;
        out.spec = spec;
        for (const Monomial& m : window) out.basis.push_back(Poly::monomial(table, m));
        return out;
    }
    // Stack one linear system per derivation: coefficients of D(m_j) must
    // cancel for each D.
    MonomialIndexer ix;
    std::vector<std::vector<Poly>> images;  // per derivation, per window monomial
    for (const Derivation& D : ds) {
        std::vector<Poly> row;
        for (const Monomial& m : window) {
            Poly img = apply(D, Poly::monomial(table, m));
            ix.add_support(img);
            row.push_back(std::move(img));
        }
        images.push_back(std::move(row));
    }
    RatMatrix m(ix.size() * ds.size(), RatRow(window.size(), Rat(0)));
    for (std::size_t d = 0; d < images.size(); ++d) {
        for (std::size_t j = 0; j < window.size(); ++j) {
            for (const Poly::Term& t : images[d][j].terms()) {
                m[d * ix.size() + ix.index_of(t.mono)][j] = t.coeff;
            }
        }
    }
    RatMatrix null = nullspace(m, window.size());
    KernelBasis out;
    out.spec = spec;
    for (const RatRow& row : null) {
        std::vector<Poly::Term> terms;
        for (std::size_t j = 0; j < window.size(); ++j) {
            if (!row[j].is_zero()) terms.push_back({window[j], row[j]});
        }
        out.basis.push_back(Poly::from_terms(table, std::move(terms)));
    }
    return out;
}

SubalgebraWindow subalgebra_window(const Algebra& B, int word_length) {
    SubalgebraWindow out;
    const VarTablePtr& table = B.table();
    out.words.push_back(Poly::constant(table, Rat(1)));
    // Words of each length: products over non-decreasing generator index
    // tuples, built by extending shorter words.
    std::vector<std::pair<std::size_t, Poly>> frontier;  // (max index used, word)
    frontier.emplace_back(0, Poly::constant(table, Rat(1)));
    for (int len = 1; len <= word_length; ++len) {
        std::vector<std::pair<std::size_t, Poly>> next;
        for (const auto& [start, w] : frontier) {
            for (std::size_t i = start; i < B.generators().size(); ++i) {
                Poly extended = w * B.generators()[i];
                out.words.push_back(extended);
                next.emplace_back(i, std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    out.basis = canonical_span_basis(table, out.words);
    return out;
}

MLCertificate ml_certificate(const Algebra& B, std::span<const Derivation> delta, int word_length,
                             unsigned iter_bound) {
    for (const Derivation& D : delta) {
        LndStatus st = check_lnd(D, B, iter_bound);  // throws when unstable
        if (!st.nilpotent)
            throw Error("ml_certificate: local nilpotency of '" + D.name() +
                        "' not established within bound " + std::to_string(st.bound));
    }
    SubalgebraWindow window = subalgebra_window(B, word_length);
    MLCertificate cert;
    cert.word_length = word_length;
    cert.window_dim = window.basis.size();
    if (delta.empty()) {
        cert.kernel_basis = window.basis;
    } else {
        // Coefficients over the window basis killed by every derivation.
        RatMatrix coeff_kernel;
        bool first = true;
        for (const Derivation& D : delta) {
            std::vector<Poly> images;
            for (const Poly& w : window.basis) images.push_back(apply(D, w));
            RatMatrix k = kernel_of_images(images);
            if (first) {
                coeff_kernel = std::move(k);
                first = false;
            } else {
                // Intersect coefficient spaces.
                coeff_kernel = row_space_intersection(coeff_kernel, k, window.basis.size());
            }
            if (coeff_kernel.empty()) break;
        }
        cert.kernel_basis = canonical_span_basis(B.table(), combine(window.basis, coeff_kernel, B.table()));
    }
    for (const Poly& p : cert.kernel_basis) {
        if (!p.is_constant()) cert.extra_elements.push_back(p);
    }
    cert.constants_only = cert.extra_elements.empty() && cert.kernel_basis.size() == 1;
    return cert;
}

PlinthBasis plinth_bounded(const Derivation& D, const TruncationSpec& spec) {
    const VarTablePtr& table = D.table();
    std::vector<Monomial> window = monomials_up_to(table->size(), spec.ambient_degree);
    std::vector<Poly> images;
    for (const Monomial& m : window) {
        Poly img = apply(D, Poly::monomial(table, m));
        if (!img.is_zero()) images.push_back(std::move(img));
    }
    KernelBasis kernel = kernel_basis_bounded(D, spec);
    // Shared coordinates for both spans.
    MonomialIndexer ix;
    for (const Poly& p : images) ix.add_support(p);
    for (const Poly& p : kernel.basis) ix.add_support(p);
    auto rows = [&](const std::vector<Poly>& ps) {
        RatMatrix m;
        for (const Poly& p : ps) m.push_back(ix.to_row(p));
        return m;
    };
    RatMatrix inter = row_space_intersection(rows(images), rows(kernel.basis), ix.size());
    PlinthBasis out;
    out.spec = spec;
    for (const RatRow& row : inter) out.basis.push_back(ix.to_poly(table, row));
    return out;
}

TightnessResult tightness_check(const Derivation& D, const TruncationSpec& spec) {
    const VarTablePtr& table = D.table();
    PlinthBasis plinth = plinth_bounded(D, spec);
    TightnessResult out;
    GroebnerBasis gb = buchberger(plinth.basis, MonomialOrder::grevlex());
    for (const Monomial& m : monomials_up_to(table->size(), spec.ambient_degree)) {
        Poly mono = Poly::monomial(table, m);
        Poly img = apply(D, mono);
        if (img.is_zero()) continue;
        if (gb.gens.empty() || !normal_form(img, gb).is_zero()) {
            out.tight = false;
            out.violating_monomial = mono;
            out.violation = img;
            return out;
        }
    }
    out.tight = true;
    return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("poly_det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("poly_det: not square");
    const VarTablePtr& table = m[0][0].table();
    // Laplace expansion along the first row; fine at certificate sizes.
    auto rec = [&](auto&& self, const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) -> Poly {
        if (rows.size() == 1) return m[rows[0]][cols[0]];
        Poly acc = Poly::zero(table);
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (m[rows[0]][cols[k]].is_zero()) continue;
            std::vector<std::size_t> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) sub_cols.push_back(cols[j]);
            Poly minor = self(self, sub_rows, sub_cols);
            Poly contrib = m[rows[0]][cols[k]] * minor;
            acc += (k % 2 == 0) ? contrib : -contrib;
        }
        return acc;
    };
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return rec(rec, all, all);
}

std::size_t poly_matrix_rank(const std::vector<std::vector<Poly>>& m) {
    if (m.empty() || m[0].empty()) return 0;
    const VarTablePtr& table = m[0][0].table();
    std::vector<std::vector<RatFunc>> a;
    for (const auto& row : m) {
        std::vector<RatFunc> r;
        for (const Poly& p : row) r.emplace_back(p);
        a.push_back(std::move(r));
    }
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        RatFunc inv = RatFunc::constant(table, Rat(1)) / a[rank][c];
        for (std::size_t j = c; j < cols; ++j) a[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c].is_zero()) continue;
            RatFunc f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

RankWitness rank_witness(std::span<const Derivation> ds, std::span<const Poly> bs) {
    if (ds.size() != bs.size()) throw Error("rank_witness: derivation/element count mismatch");
    if (ds.empty()) throw Error("rank_witness: empty input");
    std::vector<std::vector<Poly>> m;
    for (const Derivation& D : ds) {
        std::vector<Poly> row;
        for (const Poly& b : bs) row.push_back(apply(D, b));
        m.push_back(std::move(row));
    }
    RankWitness w;
    w.elements.assign(bs.begin(), bs.end());
    w.determinant = poly_det(m);
    w.nonzero = !w.determinant.is_zero();
    return w;
}

std::optional<RankWitness> find_rank_witness(std::span<const Derivation> ds, int degree_cap,
                                             const Algebra* within) {
    if (ds.empty()) return std::nullopt;
    const VarTablePtr& table = ds[0].table();
    std::vector<Poly> candidates;
    if (within) {
        candidates = subalgebra_window(*within, degree_cap).words;
    } else {
        for (const Monomial& m : monomials_up_to(table->size(), degree_cap))
            candidates.push_back(Poly::monomial(table, m));
    }
    std::vector<Poly> chosen;
    std::vector<std::vector<Poly>> matrix(ds.size());
    for (const Poly& b : candidates) {
        if (chosen.size() == ds.size()) break;
        std::vector<std::vector<Poly>> trial = matrix;
        for (std::size_t i = 0; i < ds.size(); ++i) trial[i].push_back(apply(ds[i], b));
        if (poly_matrix_rank(trial) > chosen.size()) {
            matrix = std::move(trial);
            chosen.push_back(b);
        }
    }
    if (chosen.size() != ds.size()) return std::nullopt;
    RankWitness w = rank_witness(ds, chosen);
    if (!w.nonzero) throw Error("find_rank_witness: internal rank/determinant disagreement");
    return w;
}

ChainCertificate chain_certificate(std::span<const ChainLevel> levels) {
    ChainCertificate cert;
    if (levels.empty()) {
        cert.failure = "empty chain";
        return cert;
    }
    auto fail = [&](std::size_t index, std::string why) {
        cert.valid = false;
        cert.failed_index = index;
        cert.failure = std::move(why);
        return cert;
    };
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const ChainLevel& level = levels[i];
        for (const Derivation& D : level.kernel_of) {
            for (const Poly& g : level.algebra.generators()) {
                if (!apply(D, g).is_zero())
                    return fail(i, "derivation '" + D.name() + "' does not kill level generators");
            }
        }
        if (i == 0) continue;
        for (const Poly& g : levels[i - 1].algebra.generators()) {
            if (!subalgebra_membership(g, level.algebra).member)
                return fail(i, "previous level is not contained in this level");
        }
        Poly witness;
        if (level.witness) {
            witness = *level.witness;
            if (!subalgebra_membership(witness, level.algebra).member)
                return fail(i, "witness is not a member of this level");
        } else {
            bool found = false;
            for (const Poly& g : level.algebra.generators()) {
                if (!subalgebra_membership(g, levels[i - 1].algebra).member) {
                    witness = g;
                    found = true;
                    break;
                }
            }
            if (!found) return fail(i, "no strictness witness found among generators");
        }
        if (subalgebra_membership(witness, levels[i - 1].algebra).member)
            return fail(i, "witness already lies in the previous level");
        cert.witnesses.push_back(std::move(witness));
    }
    cert.valid = true;
    cert.length = levels.size() - 1;
    return cert;
}

}  // namespace lndcert
