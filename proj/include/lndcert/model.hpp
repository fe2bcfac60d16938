#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lndcert/derivation.hpp"
#include "lndcert/valuation.hpp"

namespace lndcert {

/// One check request from a model file. Fields are populated per kind; the
/// generic `expect` token carries the expected outcome when the check is a
/// pass/fail assertion (empty means report-only).
struct ModelCheck {
    enum class Kind { Lnd, Kernel, Ml, Plinth, Rank, Chain, Valuation, Grading };

    struct Level {
        std::vector<Poly> gens;
        std::vector<std::string> derivations;
        std::optional<Poly> witness;
    };

    Kind kind = Kind::Lnd;
    std::string name;

    std::string algebra;                       // lnd, ml, valuation, grading, rank (optional)
    std::vector<std::string> derivations;      // lnd (single), kernel, ml, rank
    std::optional<int> degree;                 // kernel, plinth
    std::optional<int> word_length;            // ml
    std::optional<int> iter_bound;             // lnd, ml
    std::optional<int> cap;                    // rank (find mode)
    bool find = false;                         // rank
    std::vector<Poly> elements;                // rank (explicit mode)
    std::optional<Poly> expect_det;            // rank
    std::optional<int> max_index;              // lnd
    std::optional<int> expect_dim;             // kernel, ml
    std::vector<Poly> expect_contains;         // kernel
    std::vector<std::string> only_vars;        // kernel, ml
    std::vector<Poly> expect_basis;            // plinth
    std::optional<RatFunc> target;             // valuation
    std::optional<BaseValuation> valuation;    // valuation
    std::optional<LexValue> expect_value;      // valuation
    std::vector<std::pair<std::string, int>> weights;  // grading
    std::vector<Level> levels;                 // chain
    std::optional<int> expect_index;           // chain (expected failure index)
    std::string expect;                        // expected outcome token

    static std::string kind_name(Kind k);
    static std::optional<Kind> kind_from_name(const std::string& s);
};

/// Parsed model: one variable table, named algebras and derivations, and the
/// requested checks, in declaration order.
struct Model {
    VarTablePtr table;
    std::vector<Algebra> algebras;
    std::vector<Derivation> derivations;
    std::vector<ModelCheck> checks;

    const Algebra* find_algebra(const std::string& name) const;
    const Derivation* find_derivation(const std::string& name) const;
};

/// Parses model text; throws ParseError with 1-based line/column on failure.
Model parse_model(const std::string& text);

/// Canonical text form; parse_model(print_model(m)) reproduces m.
std::string print_model(const Model& m);

/// Expression parsing against a fixed table (shared with the DSL).
RatFunc parse_ratfunc(const std::string& text, const VarTablePtr& table);
Poly parse_poly(const std::string& text, const VarTablePtr& table);

}  // namespace lndcert
