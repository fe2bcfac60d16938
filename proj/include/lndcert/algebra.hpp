#pragma once

#include <string>
#include <vector>

#include "lndcert/poly.hpp"

namespace lndcert {

/// Finitely generated subalgebra of the ambient polynomial ring: the smallest
/// subring containing Q and the listed generator polynomials. Generators must
/// be nonzero; an empty list denotes Q itself.
class Algebra {
public:
    Algebra(VarTablePtr table, std::vector<Poly> generators, std::string name = "");

    const VarTablePtr& table() const { return table_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const std::string& name() const { return name_; }

private:
    VarTablePtr table_;
    std::vector<Poly> gens_;
    std::string name_;
};

}  // namespace lndcert
