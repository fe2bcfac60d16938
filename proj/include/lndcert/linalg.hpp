#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lndcert/monomial.hpp"
#include "lndcert/poly.hpp"
#include "lndcert/rat.hpp"

namespace lndcert {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

struct RrefResult {
    RatMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

/// Exact reduced row echelon form; the canonical basis of the row space.
RrefResult rref(RatMatrix m);

std::size_t matrix_rank(const RatMatrix& m);

/// Canonical basis (as rows) of {x : m x = 0}.
RatMatrix nullspace(const RatMatrix& m, std::size_t ncols);

/// Canonical basis (as rows) of rowspace(a) intersected with rowspace(b).
RatMatrix row_space_intersection(const RatMatrix& a, const RatMatrix& b, std::size_t ncols);

bool same_row_space(const RatMatrix& a, const RatMatrix& b);

/// Stable monomial -> column index assignment for poly/vector conversion.
class MonomialIndexer {
public:
    /// Registers a monomial (appending a new column when unseen).
    std::size_t index_of(const Monomial& m);
    void add_support(const Poly& p);
    std::size_t size() const { return monomials_.size(); }
    const Monomial& monomial(std::size_t i) const { return monomials_[i]; }

    RatRow to_row(const Poly& p) const;  // throws if p has unregistered support
    Poly to_poly(const VarTablePtr& table, const RatRow& row) const;

private:
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<Monomial> monomials_;
};

/// All monomials of total degree at most d, in canonical enumeration order:
/// by total degree, then grevlex-descending within a degree.
std::vector<Monomial> monomials_up_to(std::size_t nvars, int max_degree);

}  // namespace lndcert
