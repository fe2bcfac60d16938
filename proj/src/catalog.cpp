#include "lndcert/catalog.hpp"

#include <sstream>

namespace lndcert {

CatalogEntry build_counterexample(int m) {
    if (m < 1) throw Error("build_counterexample: m must be at least 1");
    std::ostringstream dsl;
    dsl << "vars { params: ";
    for (int i = 1; i <= m; ++i) dsl << (i > 1 ? ", " : "") << "r" << i;
    dsl << "; main: x, y; }\n";
    dsl << "algebra B { gens: x, y";
    for (int i = 1; i <= m; ++i) dsl << ", r" << i << "*x, r" << i << "*y";
    dsl << "; }\n";
    dsl << "derivation D1 { x -> y; }\n";
    dsl << "derivation D2 { y -> x; }\n";
    dsl << "check lnd lnd_D1 { algebra: B; derivation: D1; max_index: 3; expect: nilpotent; }\n";
    dsl << "check lnd lnd_D2 { algebra: B; derivation: D2; max_index: 3; expect: nilpotent; }\n";
    dsl << "check ml ml_window { algebra: B; derivations: D1, D2; word_length: 4; "
           "expect: constants_only; }\n";
    dsl << "check rank rank_2 { derivations: D1, D2; elements: x, y; expect_det: x*y; "
           "expect: nonzero; }\n";

    CatalogEntry entry;
    entry.id = "counterexample(m=" + std::to_string(m) + ")";
    entry.note =
        "Subalgebra of K[x,y] spanned by x, y and all r_i*x, r_i*y: the two opposite "
        "triangular derivations are locally nilpotent and share only constants in the "
        "bounded window, while every nonconstant coefficient function fails the window test.";
    entry.model = parse_model(dsl.str());
    return entry;
}

CatalogEntry build_xytxty() {
    std::ostringstream dsl;
    dsl << "vars { params: t; main: x, y; }\n";
    dsl << "algebra B { gens: x, y, t*x, t*y; }\n";
    dsl << "derivation D1 { x -> y; }\n";
    dsl << "derivation D2 { y -> x; }\n";
    dsl << "derivation D3 { t -> 1; }\n";
    dsl << "check lnd lnd_D1 { algebra: B; derivation: D1; max_index: 3; expect: nilpotent; }\n";
    dsl << "check lnd lnd_D2 { algebra: B; derivation: D2; max_index: 3; expect: nilpotent; }\n";
    dsl << "check lnd lnd_D3 { algebra: B; derivation: D3; max_index: 3; expect: nilpotent; }\n";
    dsl << "check ml ml_window { algebra: B; derivations: D1, D2, D3; word_length: 4; "
           "expect: constants_only; }\n";
    // The kernel of d/dt inside the bounded window stays inside Q[x,y].
    dsl << "check ml kernel_D3_window { algebra: B; derivations: D3; word_length: 2; "
           "only_vars: x, y; expect: extra_elements; }\n";
    dsl << "check rank rank_3 { algebra: B; derivations: D1, D2, D3; elements: x, y, t*x; "
           "expect_det: x^2*y; expect: nonzero; }\n";
    dsl << "check grading grading_nonneg { algebra: B; weights: t=-1, x=1, y=1; "
           "expect: graded_nonneg; }\n";
    dsl << "check valuation t_outside { algebra: B; target: t; "
           "valuation: order_at_infinity(t); expect_value: (0,0|-1); expect: non_member; }\n";

    CatalogEntry entry;
    entry.id = "xytxty";
    entry.note =
        "Subalgebra generated by x, y, t*x, t*y: three independent locally nilpotent "
        "derivations give a rank-3 witness with determinant x^2*y; the grading by "
        "deg(x)=deg(y)=1, deg(t)=-1 is nonnegative on all generators; the order-at-infinity "
        "valuation in t is nonnegative on the algebra but negative on t, so t lies outside "
        "the algebra and its integral closure.";
    entry.model = parse_model(dsl.str());
    return entry;
}

std::vector<CatalogEntry> catalog_entries() {
    std::vector<CatalogEntry> entries;
    entries.push_back(build_counterexample(1));
    entries.push_back(build_counterexample(2));
    entries.push_back(build_xytxty());
    return entries;
}

std::optional<CatalogEntry> catalog_entry(const std::string& id) {
    for (CatalogEntry& e : catalog_entries()) {
        if (e.id == id) return std::move(e);
    }
    // Accept "counterexample(m=K)" for any K >= 1.
    const std::string prefix = "counterexample(m=";
    if (id.size() > prefix.size() + 1 && id.compare(0, prefix.size(), prefix) == 0 && id.back() == ')') {
        try {
            int m = std::stoi(id.substr(prefix.size(), id.size() - prefix.size() - 1));
            return build_counterexample(m);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

GradingResult grading_nonneg_check(const Algebra& B, const std::vector<int>& weights) {
    if (weights.size() != B.table()->size())
        throw Error("grading_nonneg_check: one weight per variable required");
    GradingResult out;
    out.graded_nonneg = true;
    for (std::size_t i = 0; i < B.generators().size(); ++i) {
        const Poly& g = B.generators()[i];
        std::optional<int> weight;
        bool homogeneous = true;
        for (const Poly::Term& t : g.terms()) {
            int w = 0;
            for (std::size_t v = 0; v < weights.size(); ++v) w += t.mono.exp[v] * weights[v];
            if (!weight) {
                weight = w;
            } else if (*weight != w) {
                homogeneous = false;
                break;
            }
        }
        out.generator_weights.push_back(homogeneous ? weight : std::nullopt);
        if ((!homogeneous || *weight < 0) && out.graded_nonneg) {
            out.graded_nonneg = false;
            out.failing_generator = i;
        }
    }
    return out;
}

}  // namespace lndcert
