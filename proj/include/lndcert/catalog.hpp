#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lndcert/model.hpp"

namespace lndcert {

/// Built-in example algebra with its scripted checks. The model carries the
/// full inputs, so serializing to text and re-running reproduces every
/// outcome.
struct CatalogEntry {
    std::string id;
    std::string note;
    Model model;

    std::string to_dsl() const { return print_model(model); }
};

/// Subalgebra of K[x,y] generated by x, y and r_i*x, r_i*y over m parameters,
/// with the two opposite triangular derivations. Its scripted checks certify
/// stability, local nilpotency, the trivial kernel-intersection window and a
/// rank-2 witness. Requires m >= 1.
CatalogEntry build_counterexample(int m);

/// Subalgebra generated by x, y, t*x, t*y with the three derivations
/// y*d/dx, x*d/dy, d/dt: kernel/window checks, the rank-3 witness with
/// determinant x^2*y, the nonnegative grading and the valuation-based
/// non-membership certificate for t.
CatalogEntry build_xytxty();

std::vector<CatalogEntry> catalog_entries();
std::optional<CatalogEntry> catalog_entry(const std::string& id);

/// Weight check: every generator must be homogeneous of nonnegative weight
/// under the given per-variable weights.
struct GradingResult {
    bool graded_nonneg = false;
    std::optional<std::size_t> failing_generator;
    std::vector<std::optional<int>> generator_weights;  // nullopt: not homogeneous
};
GradingResult grading_nonneg_check(const Algebra& B, const std::vector<int>& weights);

}  // namespace lndcert
