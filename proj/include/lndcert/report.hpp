#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lndcert/catalog.hpp"
#include "lndcert/model.hpp"

namespace lndcert {

inline constexpr const char* kToolVersion = "lndcert 0.1.0";
inline constexpr int kReportFormatVersion = 1;

/// Command-line overrides. A set value overrides the corresponding field of
/// every check it applies to; unset values fall back to the check, then to
/// the built-in defaults (degree 6, word length 4, iteration bound 64).
struct RunOptions {
    std::optional<int> degree;
    std::optional<int> word_length;
    std::optional<int> iter_bound;
    std::optional<int> cap;
    bool force_find = false;  // rank checks: search for a witness instead of
                              // evaluating the listed elements
    bool timings = false;
};

struct RunReport {
    nlohmann::ordered_json doc;
    std::size_t ran = 0;
    std::size_t passed = 0;
    bool all_pass = true;

    std::string to_string() const { return doc.dump(2) + "\n"; }
};

/// Executes the model's checks (all of them, or only those of one kind) in
/// declaration order. Given identical inputs and options the report is
/// byte-identical across runs unless timings are enabled.
RunReport run_checks(const Model& model, std::optional<ModelCheck::Kind> filter,
                     const RunOptions& opts);

/// Serializes every catalog entry to model text, re-parses it, and runs it:
/// the round trip is part of the contract.
RunReport run_catalog(const RunOptions& opts, const std::string& only_id = "");

}  // namespace lndcert
