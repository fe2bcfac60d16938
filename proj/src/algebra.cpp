#include "lndcert/algebra.hpp"

namespace lndcert {

Algebra::Algebra(VarTablePtr table, std::vector<Poly> generators, std::string name)
    : table_(std::move(table)), gens_(std::move(generators)), name_(std::move(name)) {
    if (!table_) throw Error("Algebra: missing variable table");
    for (const Poly& g : gens_) {
        require_same_table(table_, g.table(), "Algebra");
        if (g.is_zero()) throw Error("Algebra: zero generator");
    }
}

}  // namespace lndcert
