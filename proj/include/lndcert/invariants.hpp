#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lndcert/derivation.hpp"
#include "lndcert/linalg.hpp"

namespace lndcert {

/// Finite window onto infinite objects: ambient total-degree cap for kernel
/// spaces, generator word-length cap for subalgebra spans. Every certificate
/// carries the window it was computed in.
struct TruncationSpec {
    int ambient_degree = 6;
    int word_length = 4;
};

/// Basis of {f : total degree <= d, D(f) = 0 for all D in the set}, in
/// reduced row-echelon canonical form over the canonical monomial ordering.
struct KernelBasis {
    TruncationSpec spec;
    std::vector<Poly> basis;
};

KernelBasis kernel_basis_bounded(const Derivation& D, const TruncationSpec& spec);
/// Empty derivation set gives the whole window (the empty intersection is
/// the ambient ring).
KernelBasis kernel_intersection_bounded(const VarTablePtr& table, std::span<const Derivation> ds,
                                        const TruncationSpec& spec);

/// Products of at most word_length generators, plus the canonical basis of
/// their span.
struct SubalgebraWindow {
    std::vector<Poly> words;
    std::vector<Poly> basis;
};
SubalgebraWindow subalgebra_window(const Algebra& B, int word_length);

/// Window certificate for Makar-Limanov-style claims: the span of generator
/// words of bounded length intersected with all kernels. constants_only
/// certifies that the intersection is Q*1 inside this window; it makes no
/// claim beyond the window.
struct MLCertificate {
    int word_length = 0;
    std::size_t window_dim = 0;
    bool constants_only = false;
    std::vector<Poly> kernel_basis;     // basis of the intersection, contains 1
    std::vector<Poly> extra_elements;   // the non-constant basis elements
};
MLCertificate ml_certificate(const Algebra& B, std::span<const Derivation> delta, int word_length,
                             unsigned iter_bound = kDefaultIterBound);

/// Bounded-degree basis of the plinth ideal pl(D) = D(B) ∩ ker(D), with B the
/// ambient polynomial ring: span of the images of window monomials
/// intersected with the bounded kernel space.
struct PlinthBasis {
    TruncationSpec spec;
    std::vector<Poly> basis;
};
PlinthBasis plinth_bounded(const Derivation& D, const TruncationSpec& spec);

/// Tightness within the window: the image of every window monomial lies in
/// the ideal generated by the plinth window.
struct TightnessResult {
    bool tight = false;
    std::optional<Poly> violating_monomial;  // the window monomial m
    std::optional<Poly> violation;           // D(m), not in the plinth ideal
};
TightnessResult tightness_check(const Derivation& D, const TruncationSpec& spec);

/// Witness that n derivations are independent: det(D_i(b_j)) != 0 certifies
/// that the derivation span has dimension at least n.
struct RankWitness {
    std::vector<Poly> elements;
    Poly determinant;
    bool nonzero = false;
};
RankWitness rank_witness(std::span<const Derivation> ds, std::span<const Poly> bs);

/// Greedy witness search. Candidates are ambient monomials of degree at most
/// degree_cap in canonical order; with an algebra given, candidates are its
/// generator words of length at most degree_cap instead, so the witness
/// elements certifiably lie in the algebra.
std::optional<RankWitness> find_rank_witness(std::span<const Derivation> ds, int degree_cap,
                                             const Algebra* within = nullptr);

/// One level of an ascending chain: a subalgebra, derivations that must kill
/// all of its generators, and (above level 0) a strictness witness expected
/// to lie in this level but not the previous one. A missing witness is
/// resolved as the first generator that is not a member of the previous
/// level.
struct ChainLevel {
    Algebra algebra;
    std::vector<Derivation> kernel_of;
    std::optional<Poly> witness;
};

/// Verified chain: every level killed by its derivation set, every level
/// contained in the next, and every inclusion strict. The length (number of
/// strict inclusions) is a lower bound for the height of the subalgebra
/// poset.
struct ChainCertificate {
    bool valid = false;
    std::size_t length = 0;
    std::vector<Poly> witnesses;       // resolved, one per inclusion
    std::size_t failed_index = 0;      // level at which verification failed
    std::string failure;               // empty when valid
};
ChainCertificate chain_certificate(std::span<const ChainLevel> levels);

/// det of a square polynomial matrix (entries over one table), exact.
Poly poly_det(const std::vector<std::vector<Poly>>& m);

/// Rank of a polynomial matrix over the fraction field.
std::size_t poly_matrix_rank(const std::vector<std::vector<Poly>>& m);

}  // namespace lndcert
