#include "lndcert/model.hpp"

#include <sstream>

namespace lndcert {

std::string ModelCheck::kind_name(Kind k) {
    switch (k) {
        case Kind::Lnd: return "lnd";
        case Kind::Kernel: return "kernel";
        case Kind::Ml: return "ml";
        case Kind::Plinth: return "plinth";
        case Kind::Rank: return "rank";
        case Kind::Chain: return "chain";
        case Kind::Valuation: return "valuation";
        case Kind::Grading: return "grading";
    }
    return "lnd";
}

std::optional<ModelCheck::Kind> ModelCheck::kind_from_name(const std::string& s) {
    using Kind = ModelCheck::Kind;
    if (s == "lnd") return Kind::Lnd;
    if (s == "kernel") return Kind::Kernel;
    if (s == "ml") return Kind::Ml;
    if (s == "plinth") return Kind::Plinth;
    if (s == "rank") return Kind::Rank;
    if (s == "chain") return Kind::Chain;
    if (s == "valuation") return Kind::Valuation;
    if (s == "grading") return Kind::Grading;
    return std::nullopt;
}

const Algebra* Model::find_algebra(const std::string& name) const {
    for (const Algebra& a : algebras)
        if (a.name() == name) return &a;
    return nullptr;
}

const Derivation* Model::find_derivation(const std::string& name) const {
    for (const Derivation& d : derivations)
        if (d.name() == name) return &d;
    return nullptr;
}

namespace {

void print_namelist(std::ostream& out, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
}

void print_exprlist(std::ostream& out, const std::vector<Poly>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? ", " : "") << ps[i].to_string();
}

void print_check(std::ostream& out, const Model& m, const ModelCheck& c) {
    out << "check " << ModelCheck::kind_name(c.kind) << " " << c.name << " {";
    if (!c.algebra.empty()) out << " algebra: " << c.algebra << ";";
    if (c.kind == ModelCheck::Kind::Lnd && c.derivations.size() == 1) {
        out << " derivation: " << c.derivations[0] << ";";
    } else if (!c.derivations.empty()) {
        out << " derivations: ";
        print_namelist(out, c.derivations);
        out << ";";
    }
    if (c.target) out << " target: " << c.target->to_string() << ";";
    if (c.valuation) out << " valuation: " << c.valuation->to_string(*m.table) << ";";
    if (c.degree) out << " degree: " << *c.degree << ";";
    if (c.word_length) out << " word_length: " << *c.word_length << ";";
    if (c.iter_bound) out << " iter_bound: " << *c.iter_bound << ";";
    if (c.find) out << " find: true;";
    if (c.cap) out << " cap: " << *c.cap << ";";
    if (!c.elements.empty()) {
        out << " elements: ";
        print_exprlist(out, c.elements);
        out << ";";
    }
    if (!c.weights.empty()) {
        out << " weights: ";
        for (std::size_t i = 0; i < c.weights.size(); ++i)
            out << (i ? ", " : "") << c.weights[i].first << "=" << c.weights[i].second;
        out << ";";
    }
    for (const ModelCheck::Level& level : c.levels) {
        out << " level {";
        out << " gens: ";
        print_exprlist(out, level.gens);
        out << ";";
        if (!level.derivations.empty()) {
            out << " derivations: ";
            print_namelist(out, level.derivations);
            out << ";";
        }
        if (level.witness) out << " witness: " << level.witness->to_string() << ";";
        out << " }";
    }
    if (c.max_index) out << " max_index: " << *c.max_index << ";";
    if (c.expect_dim) out << " expect_dim: " << *c.expect_dim << ";";
    if (!c.expect_contains.empty()) {
        out << " expect_contains: ";
        print_exprlist(out, c.expect_contains);
        out << ";";
    }
    if (!c.only_vars.empty()) {
        out << " only_vars: ";
        print_namelist(out, c.only_vars);
        out << ";";
    }
    if (!c.expect_basis.empty()) {
        out << " expect_basis: ";
        print_exprlist(out, c.expect_basis);
        out << ";";
    }
    if (c.expect_det) out << " expect_det: " << c.expect_det->to_string() << ";";
    if (c.expect_value) out << " expect_value: " << c.expect_value->to_string() << ";";
    if (c.expect_index) out << " expect_index: " << *c.expect_index << ";";
    if (!c.expect.empty()) out << " expect: " << c.expect << ";";
    out << " }\n";
}

}  // namespace

std::string print_model(const Model& m) {
    std::ostringstream out;
    out << "vars {";
    if (m.table->param_count() > 0) {
        out << " params: ";
        for (std::size_t i = 0; i < m.table->param_count(); ++i)
            out << (i ? ", " : "") << m.table->name(i);
        out << ";";
    }
    out << " main: ";
    for (std::size_t j = 0; j < m.table->main_count(); ++j)
        out << (j ? ", " : "") << m.table->name(m.table->main_index(j));
    out << "; }\n";

    for (const Algebra& a : m.algebras) {
        out << "algebra " << a.name() << " { gens: ";
        print_exprlist(out, a.generators());
        out << "; }\n";
    }
    for (const Derivation& d : m.derivations) {
        out << "derivation " << d.name() << " {";
        for (std::size_t v = 0; v < m.table->size(); ++v)
            out << " " << m.table->name(v) << " -> " << d.image(v).to_string() << ";";
        out << " }\n";
    }
    for (const ModelCheck& c : m.checks) print_check(out, m, c);
    return out.str();
}

}  // namespace lndcert
