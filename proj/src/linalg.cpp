#include "lndcert/linalg.hpp"

#include <algorithm>

namespace lndcert {

RrefResult rref(RatMatrix m) {
    RrefResult out;
    if (m.empty()) return {std::move(m), {}};
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    m.resize(r);  // drop zero rows
    out.mat = std::move(m);
    return out;
}

std::size_t matrix_rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t ncols) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    RatMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatRow v(ncols, Rat(0));
        v[f] = Rat(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            v[r.pivot_cols[i]] = -r.mat[i][f];
        }
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis)).mat;
}

RatMatrix row_space_intersection(const RatMatrix& a, const RatMatrix& b, std::size_t ncols) {
    if (a.empty() || b.empty()) return {};
    // Solve sum_i x_i a_i = sum_j y_j b_j: nullspace of the column-stacked map.
    const std::size_t p = a.size(), q = b.size();
    RatMatrix m(ncols, RatRow(p + q, Rat(0)));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t c = 0; c < ncols; ++c) m[c][i] = a[i][c];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t c = 0; c < ncols; ++c) m[c][p + j] = -b[j][c];
    RatMatrix ns = nullspace(m, p + q);
    RatMatrix vectors;
    for (const RatRow& sol : ns) {
        RatRow v(ncols, Rat(0));
        for (std::size_t i = 0; i < p; ++i) {
            if (sol[i].is_zero()) continue;
            for (std::size_t c = 0; c < ncols; ++c) v[c] += sol[i] * a[i][c];
        }
        vectors.push_back(std::move(v));
    }
    return rref(std::move(vectors)).mat;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    std::size_t ra = matrix_rank(a), rb = matrix_rank(b);
    return ra == rb && matrix_rank(stacked) == ra;
}

std::size_t MonomialIndexer::index_of(const Monomial& m) {
    auto [it, inserted] = index_.emplace(m.exp, monomials_.size());
    if (inserted) monomials_.push_back(m);
    return it->second;
}

void MonomialIndexer::add_support(const Poly& p) {
    for (const Poly::Term& t : p.terms()) index_of(t.mono);
}

RatRow MonomialIndexer::to_row(const Poly& p) const {
    RatRow row(monomials_.size(), Rat(0));
    for (const Poly::Term& t : p.terms()) {
        auto it = index_.find(t.mono.exp);
        if (it == index_.end()) throw Error("MonomialIndexer: unregistered monomial");
        row[it->second] = t.coeff;
    }
    return row;
}

Poly MonomialIndexer::to_poly(const VarTablePtr& table, const RatRow& row) const {
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!row[i].is_zero()) terms.push_back({monomials_[i], row[i]});
    }
    return Poly::from_terms(table, std::move(terms));
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree) {
    std::vector<Monomial> out;
    std::vector<int> exp(nvars, 0);
    // Enumerate all exponent vectors of degree <= max_degree, then order.
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == nvars) {
            out.emplace_back(exp);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exp[pos] = 0;
    };
    if (max_degree >= 0) rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return grevlex_greater(a, b);
    });
    return out;
}

}  // namespace lndcert
