#include "lndcert/report.hpp"

#include <algorithm>
#include <chrono>

#include "lndcert/invariants.hpp"
#include "lndcert/util.hpp"

namespace lndcert {

namespace {

using json = nlohmann::ordered_json;

json poly_list(const std::vector<Poly>& ps) {
    json out = json::array();
    for (const Poly& p : ps) out.push_back(p.to_string());
    return out;
}

std::vector<Poly> sorted_for_display(std::vector<Poly> ps) {
    std::sort(ps.begin(), ps.end(), [](const Poly& a, const Poly& b) {
        return Poly::compare(a, b) < 0;
    });
    return ps;
}

json model_inputs(const Model& m, const ModelCheck& c) {
    json in;
    json vars;
    json params = json::array(), mains = json::array();
    for (std::size_t i = 0; i < m.table->param_count(); ++i) params.push_back(m.table->name(i));
    for (std::size_t j = 0; j < m.table->main_count(); ++j)
        mains.push_back(m.table->name(m.table->main_index(j)));
    vars["params"] = params;
    vars["main"] = mains;
    in["vars"] = vars;
    if (!c.algebra.empty()) {
        const Algebra* a = m.find_algebra(c.algebra);
        in["algebra"] = {{"name", c.algebra}, {"gens", poly_list(a->generators())}};
    }
    if (!c.derivations.empty()) {
        json ds = json::array();
        for (const std::string& name : c.derivations) {
            const Derivation* d = m.find_derivation(name);
            json images;
            for (std::size_t v = 0; v < m.table->size(); ++v)
                images[m.table->name(v)] = d->image(v).to_string();
            ds.push_back({{"name", name}, {"images", images}});
        }
        in["derivations"] = ds;
    }
    return in;
}

bool in_span(const std::vector<Poly>& basis, const Poly& p) {
    MonomialIndexer ix;
    for (const Poly& b : basis) ix.add_support(b);
    for (const Poly::Term& t : p.terms()) ix.index_of(t.mono);
    RatMatrix rows;
    for (const Poly& b : basis) {
        RatRow r = ix.to_row(b);
        r.resize(ix.size(), Rat(0));
        rows.push_back(std::move(r));
    }
    std::size_t base_rank = matrix_rank(rows);
    rows.push_back(ix.to_row(p));
    return matrix_rank(rows) == base_rank;
}

bool same_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return std::all_of(a.begin(), a.end(), [&](const Poly& p) { return in_span(b, p); }) &&
           std::all_of(b.begin(), b.end(), [&](const Poly& p) { return in_span(a, p); });
}

bool only_vars_ok(const Model& m, const std::vector<std::string>& allowed_names,
                  const std::vector<Poly>& ps) {
    std::vector<bool> allowed(m.table->size(), false);
    for (const std::string& name : allowed_names) {
        auto idx = m.table->index_of(name);
        if (!idx) throw Error("only_vars: unknown variable '" + name + "'");
        allowed[*idx] = true;
    }
    return std::all_of(ps.begin(), ps.end(), [&](const Poly& p) { return p.uses_only(allowed); });
}

struct CheckRun {
    std::string outcome;
    bool pass = true;
    json certificate;
};

std::vector<Derivation> resolve_derivations(const Model& m, const std::vector<std::string>& names) {
    std::vector<Derivation> ds;
    for (const std::string& n : names) ds.push_back(*m.find_derivation(n));
    return ds;
}

int pick(const std::optional<int>& override_v, const std::optional<int>& check_v, int fallback) {
    if (override_v) return *override_v;
    if (check_v) return *check_v;
    return fallback;
}

CheckRun run_lnd(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    if (c.algebra.empty() || c.derivations.size() != 1)
        throw Error("lnd check needs one algebra and one derivation");
    const Algebra& B = *m.find_algebra(c.algebra);
    const Derivation& D = *m.find_derivation(c.derivations[0]);
    unsigned bound = static_cast<unsigned>(pick(opts.iter_bound, c.iter_bound, kDefaultIterBound));
    CheckRun run;
    StabilityResult st = check_stability(D, B);
    run.certificate["stable"] = st.stable;
    if (!st.stable) {
        run.certificate["unstable_generator"] = B.generators()[*st.bad_generator].to_string();
        run.outcome = "unstable";
    } else {
        json witnesses = json::array();
        for (const Poly& w : st.witnesses) witnesses.push_back(w.to_string());
        run.certificate["stability_witnesses"] = witnesses;
        LndStatus status = check_lnd(D, B, bound);
        run.certificate["iter_bound"] = status.bound;
        if (status.nilpotent) {
            run.outcome = "nilpotent";
            json idx = json::array();
            for (unsigned i : status.indices) idx.push_back(i);
            run.certificate["nilpotency_indices"] = idx;
            if (c.max_index) {
                unsigned max_seen = 0;
                for (unsigned i : status.indices) max_seen = std::max(max_seen, i);
                run.certificate["max_index"] = max_seen;
                if (max_seen > static_cast<unsigned>(*c.max_index)) run.pass = false;
            }
        } else {
            run.outcome = "inconclusive";
        }
    }
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_kernel(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    TruncationSpec spec;
    spec.ambient_degree = pick(opts.degree, c.degree, TruncationSpec{}.ambient_degree);
    std::vector<Derivation> ds = resolve_derivations(m, c.derivations);
    KernelBasis kb = kernel_intersection_bounded(m.table, ds, spec);
    CheckRun run;
    run.outcome = "dim=" + std::to_string(kb.basis.size());
    run.certificate["degree"] = spec.ambient_degree;
    run.certificate["dim"] = kb.basis.size();
    run.certificate["basis"] = poly_list(sorted_for_display(kb.basis));
    if (c.expect_dim && static_cast<std::size_t>(*c.expect_dim) != kb.basis.size()) run.pass = false;
    for (const Poly& p : c.expect_contains) {
        if (!in_span(kb.basis, p)) {
            run.pass = false;
            run.certificate["missing"] = p.to_string();
            break;
        }
    }
    if (!c.only_vars.empty() && !only_vars_ok(m, c.only_vars, kb.basis)) run.pass = false;
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_ml(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    if (c.algebra.empty()) throw Error("ml check needs an algebra");
    const Algebra& B = *m.find_algebra(c.algebra);
    std::vector<Derivation> ds = resolve_derivations(m, c.derivations);
    int L = pick(opts.word_length, c.word_length, TruncationSpec{}.word_length);
    unsigned bound = static_cast<unsigned>(pick(opts.iter_bound, c.iter_bound, kDefaultIterBound));
    MLCertificate cert = ml_certificate(B, ds, L, bound);
    CheckRun run;
    run.outcome = cert.constants_only ? "constants_only" : "extra_elements";
    run.certificate["word_length"] = cert.word_length;
    run.certificate["window_dim"] = cert.window_dim;
    run.certificate["kernel_dim"] = cert.kernel_basis.size();
    run.certificate["kernel_basis"] = poly_list(sorted_for_display(cert.kernel_basis));
    run.certificate["extra_elements"] = poly_list(sorted_for_display(cert.extra_elements));
    if (c.expect_dim && static_cast<std::size_t>(*c.expect_dim) != cert.kernel_basis.size())
        run.pass = false;
    if (!c.only_vars.empty() && !only_vars_ok(m, c.only_vars, cert.kernel_basis)) run.pass = false;
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_plinth(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    if (c.derivations.size() != 1) throw Error("plinth check needs one derivation");
    const Derivation& D = *m.find_derivation(c.derivations[0]);
    TruncationSpec spec;
    spec.ambient_degree = pick(opts.degree, c.degree, TruncationSpec{}.ambient_degree);
    PlinthBasis plinth = plinth_bounded(D, spec);
    TightnessResult tight = tightness_check(D, spec);
    CheckRun run;
    run.outcome = tight.tight ? "tight" : "violation";
    run.certificate["degree"] = spec.ambient_degree;
    run.certificate["plinth_basis"] = poly_list(sorted_for_display(plinth.basis));
    run.certificate["tight"] = tight.tight;
    if (tight.violation) {
        run.certificate["violating_monomial"] = tight.violating_monomial->to_string();
        run.certificate["violation"] = tight.violation->to_string();
    }
    if (!c.expect_basis.empty() && !same_span(c.expect_basis, plinth.basis)) run.pass = false;
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_rank(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    std::vector<Derivation> ds = resolve_derivations(m, c.derivations);
    CheckRun run;
    std::optional<RankWitness> witness;
    if (c.find || opts.force_find) {
        int cap = pick(opts.cap, c.cap, 2);
        const Algebra* within = c.algebra.empty() ? nullptr : m.find_algebra(c.algebra);
        witness = find_rank_witness(ds, cap, within);
        run.certificate["cap"] = cap;
        if (!c.algebra.empty()) run.certificate["within"] = c.algebra;
    } else {
        if (c.elements.size() != ds.size())
            throw Error("rank check needs as many elements as derivations");
        witness = rank_witness(ds, c.elements);
    }
    if (!witness) {
        run.outcome = "none";
    } else {
        run.outcome = witness->nonzero ? "nonzero" : "zero";
        run.certificate["elements"] = poly_list(witness->elements);
        run.certificate["determinant"] = witness->determinant.to_string();
        run.certificate["rank_at_least"] = witness->nonzero ? witness->elements.size() : 0;
        if (c.expect_det && !(witness->determinant == *c.expect_det)) run.pass = false;
    }
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_chain(const Model& m, const ModelCheck& c, const RunOptions&) {
    std::vector<ChainLevel> levels;
    json level_inputs = json::array();
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        const ModelCheck::Level& spec = c.levels[i];
        ChainLevel level{Algebra(m.table, spec.gens, "level_" + std::to_string(i)),
                         resolve_derivations(m, spec.derivations), spec.witness};
        json li;
        li["gens"] = poly_list(spec.gens);
        li["derivations"] = spec.derivations;
        if (spec.witness) li["witness"] = spec.witness->to_string();
        level_inputs.push_back(std::move(li));
        levels.push_back(std::move(level));
    }
    ChainCertificate cert = chain_certificate(levels);
    CheckRun run;
    run.outcome = cert.valid ? "valid" : "invalid";
    run.certificate["levels"] = level_inputs;
    if (cert.valid) {
        run.certificate["length"] = cert.length;
        run.certificate["witnesses"] = poly_list(cert.witnesses);
    } else {
        run.certificate["failed_index"] = cert.failed_index;
        run.certificate["failure"] = cert.failure;
    }
    if (c.expect_index && (cert.valid || cert.failed_index != static_cast<std::size_t>(*c.expect_index)))
        run.pass = false;
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_valuation(const Model& m, const ModelCheck& c, const RunOptions&) {
    if (c.algebra.empty() || !c.target || !c.valuation)
        throw Error("valuation check needs an algebra, a target and a valuation");
    const Algebra& B = *m.find_algebra(c.algebra);
    NonMembershipCertificate cert = non_membership_by_valuation(*c.target, B, *c.valuation);
    CheckRun run;
    run.outcome = cert.proved ? "non_member" : "inconclusive";
    run.certificate["valuation"] = c.valuation->to_string(*m.table);
    run.certificate["target"] = c.target->to_string();
    run.certificate["target_value"] = cert.target_value.to_string();
    json gen_values = json::array();
    for (std::size_t i = 0; i < B.generators().size(); ++i) {
        gen_values.push_back({{"generator", B.generators()[i].to_string()},
                              {"value", cert.generators.generator_values[i].to_string()}});
    }
    run.certificate["generator_values"] = gen_values;
    run.certificate["generators_nonneg"] = cert.generators.all_nonneg;
    if (c.expect_value && !(cert.target_value == *c.expect_value)) run.pass = false;
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun run_grading(const Model& m, const ModelCheck& c, const RunOptions&) {
    if (c.algebra.empty()) throw Error("grading check needs an algebra");
    const Algebra& B = *m.find_algebra(c.algebra);
    std::vector<int> weights(m.table->size(), 0);
    for (const auto& [name, w] : c.weights) weights[*m.table->index_of(name)] = w;
    GradingResult result = grading_nonneg_check(B, weights);
    CheckRun run;
    run.outcome = result.graded_nonneg ? "graded_nonneg" : "failure";
    json declared;
    for (std::size_t v = 0; v < m.table->size(); ++v) declared[m.table->name(v)] = weights[v];
    run.certificate["weights"] = declared;
    json gen_weights = json::array();
    for (std::size_t i = 0; i < B.generators().size(); ++i) {
        json entry;
        entry["generator"] = B.generators()[i].to_string();
        if (result.generator_weights[i])
            entry["weight"] = *result.generator_weights[i];
        else
            entry["weight"] = nullptr;
        gen_weights.push_back(entry);
    }
    run.certificate["generator_weights"] = gen_weights;
    if (result.failing_generator)
        run.certificate["failing_generator"] = B.generators()[*result.failing_generator].to_string();
    if (!c.expect.empty() && c.expect != run.outcome) run.pass = false;
    return run;
}

CheckRun dispatch(const Model& m, const ModelCheck& c, const RunOptions& opts) {
    switch (c.kind) {
        case ModelCheck::Kind::Lnd: return run_lnd(m, c, opts);
        case ModelCheck::Kind::Kernel: return run_kernel(m, c, opts);
        case ModelCheck::Kind::Ml: return run_ml(m, c, opts);
        case ModelCheck::Kind::Plinth: return run_plinth(m, c, opts);
        case ModelCheck::Kind::Rank: return run_rank(m, c, opts);
        case ModelCheck::Kind::Chain: return run_chain(m, c, opts);
        case ModelCheck::Kind::Valuation: return run_valuation(m, c, opts);
        case ModelCheck::Kind::Grading: return run_grading(m, c, opts);
    }
    throw Error("unknown check kind");
}

}  // namespace

RunReport run_checks(const Model& model, std::optional<ModelCheck::Kind> filter,
                     const RunOptions& opts) {
    RunReport report;
    report.doc["format_version"] = kReportFormatVersion;
    report.doc["tool"] = kToolVersion;
    report.doc["model_digest"] = "fnv1a64:" + fnv1a64_hex(print_model(model));
    json checks = json::array();
    for (const ModelCheck& c : model.checks) {
        if (filter && c.kind != *filter) continue;
        json entry;
        entry["name"] = c.name;
        entry["kind"] = ModelCheck::kind_name(c.kind);
        entry["inputs"] = model_inputs(model, c);
        auto start = std::chrono::steady_clock::now();
        CheckRun run;
        try {
            run = dispatch(model, c, opts);
        } catch (const Error& e) {
            run.outcome = "error";
            run.pass = false;
            run.certificate["error"] = e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        entry["expected"] = c.expect.empty() ? json(nullptr) : json(c.expect);
        entry["outcome"] = run.outcome;
        entry["pass"] = run.pass;
        entry["certificate"] = run.certificate;
        if (opts.timings) {
            entry["time_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        }
        checks.push_back(std::move(entry));
        ++report.ran;
        if (run.pass) ++report.passed;
        report.all_pass = report.all_pass && run.pass;
    }
    report.doc["checks"] = checks;
    report.doc["summary"] = {
        {"total", report.ran}, {"passed", report.passed}, {"failed", report.ran - report.passed}};
    return report;
}

RunReport run_catalog(const RunOptions& opts, const std::string& only_id) {
    RunReport total;
    total.doc["format_version"] = kReportFormatVersion;
    total.doc["tool"] = kToolVersion;
    json entries = json::array();
    std::vector<CatalogEntry> selected;
    if (only_id.empty()) {
        selected = catalog_entries();
    } else {
        auto entry = catalog_entry(only_id);
        if (!entry) throw Error("unknown catalog entry '" + only_id + "'");
        selected.push_back(std::move(*entry));
    }
    for (const CatalogEntry& entry : selected) {
        // Round trip through the text form first; entries must rerun from
        // their serialized form alone.
        std::string dsl = entry.to_dsl();
        Model reparsed = parse_model(dsl);
        RunReport sub = run_checks(reparsed, std::nullopt, opts);
        json e;
        e["id"] = entry.id;
        e["note"] = entry.note;
        e["model"] = dsl;
        e["model_digest"] = sub.doc["model_digest"];
        e["checks"] = sub.doc["checks"];
        e["summary"] = sub.doc["summary"];
        entries.push_back(std::move(e));
        total.ran += sub.ran;
        total.passed += sub.passed;
        total.all_pass = total.all_pass && sub.all_pass;
    }
    total.doc["entries"] = entries;
    total.doc["summary"] = {
        {"total", total.ran}, {"passed", total.passed}, {"failed", total.ran - total.passed}};
    return total;
}

}  // namespace lndcert
