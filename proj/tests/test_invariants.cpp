#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lndcert/invariants.hpp"
#include "testutil.hpp"

using namespace lndcert;
using testutil::rand_int;
using testutil::rand_nonzero_poly;
using testutil::spans_equal;

namespace {

VarTablePtr table_xy() { return VarTable::make({}, {"x", "y"}); }
VarTablePtr table_txy() { return VarTable::make({"t"}, {"x", "y"}); }

Poly var(const VarTablePtr& t, const char* name) {
    return Poly::variable(t, *t->index_of(name));
}

Derivation make_deriv(const VarTablePtr& t, std::vector<std::pair<const char*, Poly>> images,
                      const char* name = "") {
    std::vector<Poly> imgs(t->size(), Poly::zero(t));
    for (auto& [v, p] : images) imgs[*t->index_of(v)] = p;
    return Derivation(t, std::move(imgs), name);
}

using testutil::oracle_kernel;

}  // namespace

TEST_CASE("kernel windows, pinned examples") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    Derivation d1 = make_deriv(t, {{"x", y}});
    KernelBasis kb = kernel_basis_bounded(d1, {2, 0});
    std::vector<Poly> expected = {Poly::constant(t, Rat(1)), y, y * y};
    CHECK(spans_equal(kb.basis, expected));
    CHECK(kb.basis.size() == 3);

    auto tab = table_txy();
    Derivation d3 = Derivation::partial(tab, 0);
    KernelBasis kb2 = kernel_basis_bounded(d3, {1, 0});
    CHECK(kb2.basis.size() == 3);  // 1, x, y

    Derivation zero = Derivation::zero(t);
    KernelBasis kb3 = kernel_basis_bounded(zero, {1, 0});
    CHECK(kb3.basis.size() == 3);  // the full degree-1 window
}

TEST_CASE("kernel intersections") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    std::vector<Derivation> delta = {make_deriv(t, {{"x", y}}), make_deriv(t, {{"y", x}})};
    KernelBasis kb = kernel_intersection_bounded(t, delta, {2, 0});
    REQUIRE(kb.basis.size() == 1);
    CHECK(kb.basis[0].is_constant());

    auto t1 = VarTable::make({}, {"x"});
    std::vector<Derivation> dx = {Derivation::partial(t1, 0)};
    KernelBasis kb2 = kernel_intersection_bounded(t1, dx, {3, 0});
    REQUIRE(kb2.basis.size() == 1);
    CHECK(kb2.basis[0].is_constant());

    KernelBasis full = kernel_intersection_bounded(t, {}, {2, 0});
    CHECK(full.basis.size() == 6);  // empty set: the whole window
}

TEST_CASE("kernel windows match the brute-force oracle") {
    // Randomized equivalence on =3 variables, monomial images of degree <=2.
    auto t3 = VarTable::make({}, {"x", "y", "z"});
    int cases = 0;
    while (cases < 60) {
        std::vector<Poly> images;
        for (std::size_t v = 0; v < 3; ++v) {
            if (rand_int(0, 2) == 0) {
                images.push_back(Poly::zero(t3));
                continue;
            }
            Monomial m(3);
            int budget = rand_int(0, 2);
            for (std::size_t w = 0; w < 3 && budget > 0; ++w) {
                int e = rand_int(0, budget);
                m.exp[w] = e;
                budget -= e;
            }
            images.push_back(Poly::monomial(t3, m, Rat(rand_int(1, 3))));
        }
        Derivation D(t3, images);
        int degree = rand_int(1, 3);
        KernelBasis got = kernel_basis_bounded(D, {degree, 0});
        std::vector<Poly> expected = oracle_kernel(D, degree);
        CHECK(got.basis.size() == expected.size());
        CHECK(spans_equal(got.basis, expected));
        ++cases;
    }
}

TEST_CASE("window monotonicity in the degree cap") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    Derivation D = make_deriv(t, {{"x", x * y}, {"y", y * y}});
    std::size_t prev = 0;
    for (int d = 0; d <= 4; ++d) {
        std::size_t dim = kernel_basis_bounded(D, {d, 0}).basis.size();
        CHECK(dim >= prev);
        prev = dim;
    }
}

TEST_CASE("subalgebra windows") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    SubalgebraWindow w = subalgebra_window(Algebra(t, {x, y}, "B"), 2);
    CHECK(w.basis.size() == 6);  // 1, x, y, x^2, xy, y^2

    SubalgebraWindow w2 = subalgebra_window(Algebra(t, {x, x}, "B"), 1);
    CHECK(w2.basis.size() == 2);  // duplicates collapse

    auto tab = table_txy();
    Poly tx = var(tab, "t") * var(tab, "x"), ty = var(tab, "t") * var(tab, "y");
    Algebra B(tab, {var(tab, "x"), var(tab, "y"), tx, ty}, "B");
    SubalgebraWindow w3 = subalgebra_window(B, 2);
    CHECK(w3.words.size() == 15);  // 1 + 4 + 10
    CHECK(w3.basis.size() == 14);  // x*(t*y) and y*(t*x) coincide
}

TEST_CASE("ml window certificates") {
    auto tab = table_txy();
    Poly x = var(tab, "x"), y = var(tab, "y");
    Poly tx = var(tab, "t") * x, ty = var(tab, "t") * y;
    Algebra B(tab, {x, y, tx, ty}, "B");
    Derivation d1 = make_deriv(tab, {{"x", y}}, "D1");
    Derivation d2 = make_deriv(tab, {{"y", x}}, "D2");
    Derivation d3 = Derivation::partial(tab, 0);

    SUBCASE("two derivations suffice at word length 4") {
        std::vector<Derivation> delta = {d1, d2};
        MLCertificate cert = ml_certificate(B, delta, 4);
        CHECK(cert.constants_only);
        CHECK(cert.kernel_basis.size() == 1);
    }
    SUBCASE("three derivations at word length 3") {
        std::vector<Derivation> delta = {d1, d2, d3};
        MLCertificate cert = ml_certificate(B, delta, 3);
        CHECK(cert.constants_only);
    }
    SUBCASE("a single partial leaves visible kernel elements") {
        auto t = table_xy();
        Poly u = var(t, "x"), v = var(t, "y");
        std::vector<Derivation> delta = {Derivation::partial(t, 0)};
        MLCertificate cert = ml_certificate(Algebra(t, {u, v}, "B"), delta, 3);
        CHECK_FALSE(cert.constants_only);
        std::vector<Poly> expected = {v, v * v, v * v * v};
        for (const Poly& e : expected) {
            bool found = false;
            for (const Poly& b : cert.extra_elements) found = found || b == e;
            CHECK(found);
        }
    }
    SUBCASE("monotone in the derivation set") {
        std::vector<Derivation> small = {d1, d2};
        std::vector<Derivation> big = {d1, d2, d3};
        for (int L = 1; L <= 4; ++L) {
            if (ml_certificate(B, small, L).constants_only)
                CHECK(ml_certificate(B, big, L).constants_only);
        }
    }
    SUBCASE("unstable derivations are rejected") {
        Algebra small(tab, {tx}, "small");
        std::vector<Derivation> delta = {d3};
        CHECK_THROWS_AS(ml_certificate(small, delta, 2), Error);
    }
}

TEST_CASE("ml window agrees with the ambient-kernel route") {
    // Second route to the same space: intersect the ambient kernel window
    // (degree cap large enough to cover all window words) with the span of
    // the subalgebra window, and compare dimensions.
    auto tab = VarTable::make({"r"}, {"x", "y"});
    Poly r = var(tab, "r"), x = var(tab, "x"), y = var(tab, "y");
    Algebra B(tab, {x, y, r * x, r * y}, "B");
    std::vector<Derivation> delta = {make_deriv(tab, {{"x", y}}, "D1"),
                                     make_deriv(tab, {{"y", x}}, "D2")};
    const int L = 3;
    SubalgebraWindow window = subalgebra_window(B, L);
    int max_word_degree = 0;
    for (const Poly& w : window.words) max_word_degree = std::max(max_word_degree, w.total_degree());
    KernelBasis ambient = kernel_intersection_bounded(tab, delta, {max_word_degree, 0});

    MonomialIndexer ix;
    for (const Poly& p : ambient.basis) ix.add_support(p);
    for (const Poly& p : window.basis) ix.add_support(p);
    auto rows = [&](const std::vector<Poly>& ps) {
        RatMatrix m;
        for (const Poly& p : ps) {
            RatRow row = ix.to_row(p);
            row.resize(ix.size(), Rat(0));
            m.push_back(std::move(row));
        }
        return m;
    };
    RatMatrix inter = row_space_intersection(rows(ambient.basis), rows(window.basis), ix.size());

    MLCertificate cert = ml_certificate(B, delta, L);
    CHECK(cert.kernel_basis.size() == inter.size());
    CHECK(cert.constants_only == (inter.size() == 1));
    CHECK(cert.constants_only);
}

TEST_CASE("plinth windows and tightness") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");

    SUBCASE("multiplied partial") {
        Derivation D = make_deriv(t, {{"y", x}});  // x d/dy
        PlinthBasis p = plinth_bounded(D, {2, 0});
        std::vector<Poly> expected = {x, x * x};
        CHECK(spans_equal(p.basis, expected));
        CHECK(tightness_check(D, {2, 0}).tight);
        PlinthBasis p3 = plinth_bounded(D, {3, 0});
        std::vector<Poly> expected3 = {x, x * x, x * x * x};
        CHECK(spans_equal(p3.basis, expected3));
        CHECK(tightness_check(D, {3, 0}).tight);
    }
    SUBCASE("plain partial reaches the kernel window a degree lower") {
        Derivation D = Derivation::partial(t, 1);
        TruncationSpec spec{2, 0};
        PlinthBasis p = plinth_bounded(D, spec);
        std::vector<Poly> expected = {Poly::constant(t, Rat(1)), x};
        CHECK(spans_equal(p.basis, expected));
        for (const Poly& b : p.basis) CHECK(apply(D, b).is_zero());
        CHECK(tightness_check(D, spec).tight);
    }
    SUBCASE("two independent columns in four variables: non-principal plinth") {
        auto t4 = VarTable::make({}, {"x", "y", "z", "w"});
        Poly u = Poly::variable(t4, 0), v = Poly::variable(t4, 1);
        Derivation D = make_deriv(t4, {{"z", u}, {"w", v}});  // x d/dz + y d/dw
        PlinthBasis p = plinth_bounded(D, {2, 0});
        // Frozen from the window computation: the ideal (x, y) shows up, the
        // skew kernel element x*w - y*z does not (it is not an image).
        std::vector<Poly> expected = {u, v, u * u, u * v, v * v};
        CHECK(spans_equal(p.basis, expected));
        CHECK(tightness_check(D, {2, 0}).tight);
    }
}

TEST_CASE("rank witnesses") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    std::vector<Derivation> partials = {Derivation::partial(t, 0), Derivation::partial(t, 1)};
    std::vector<Poly> bs = {x, y};
    RankWitness w = rank_witness(partials, bs);
    CHECK(w.nonzero);
    CHECK(w.determinant.is_one());

    auto tab = table_txy();
    Poly tx = var(tab, "t") * var(tab, "x");
    std::vector<Derivation> three = {make_deriv(tab, {{"x", var(tab, "y")}}),
                                     make_deriv(tab, {{"y", var(tab, "x")}}),
                                     Derivation::partial(tab, 0)};
    std::vector<Poly> bs3 = {var(tab, "x"), var(tab, "y"), tx};
    RankWitness w3 = rank_witness(three, bs3);
    CHECK(w3.nonzero);
    CHECK(w3.determinant == var(tab, "x") * var(tab, "x") * var(tab, "y"));

    std::vector<Derivation> dependent = {Derivation::partial(t, 0), Derivation::partial(t, 0)};
    RankWitness wd = rank_witness(dependent, bs);
    CHECK_FALSE(wd.nonzero);
    CHECK(wd.determinant.is_zero());

    std::vector<Poly> wrong = {x};
    CHECK_THROWS_AS(rank_witness(partials, wrong), Error);
}

TEST_CASE("greedy witness search") {
    auto t = table_xy();
    Poly x = var(t, "x"), y = var(t, "y");
    std::vector<Derivation> partials = {Derivation::partial(t, 0), Derivation::partial(t, 1)};
    auto w = find_rank_witness(partials, 1);
    REQUIRE(w.has_value());
    CHECK(w->elements == std::vector<Poly>{x, y});

    auto tab = table_txy();
    std::vector<Derivation> three = {make_deriv(tab, {{"x", var(tab, "y")}}),
                                     make_deriv(tab, {{"y", var(tab, "x")}}),
                                     Derivation::partial(tab, 0)};
    auto w2 = find_rank_witness(three, 2);
    REQUIRE(w2.has_value());
    CHECK(w2->nonzero);

    // Restricted to the algebra, the first witness in word order is
    // (x, y, t*x) with determinant x^2*y.
    Poly tx = var(tab, "t") * var(tab, "x"), ty = var(tab, "t") * var(tab, "y");
    Algebra B(tab, {var(tab, "x"), var(tab, "y"), tx, ty}, "B");
    auto w3 = find_rank_witness(three, 2, &B);
    REQUIRE(w3.has_value());
    CHECK(w3->elements == std::vector<Poly>{var(tab, "x"), var(tab, "y"), tx});
    CHECK(w3->determinant == var(tab, "x") * var(tab, "x") * var(tab, "y"));

    std::vector<Derivation> zero = {Derivation::zero(t)};
    CHECK_FALSE(find_rank_witness(zero, 2).has_value());
}

TEST_CASE("chain certificates") {
    auto t3 = VarTable::make({}, {"x", "y", "z"});
    Poly x = Poly::variable(t3, 0), y = Poly::variable(t3, 1), z = Poly::variable(t3, 2);
    Derivation dx = Derivation::partial(t3, 0), dy = Derivation::partial(t3, 1),
               dz = Derivation::partial(t3, 2);

    SUBCASE("full flag in three variables") {
        std::vector<ChainLevel> levels;
        levels.push_back({Algebra(t3, {}, "A0"), {dx, dy, dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x}, "A1"), {dy, dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x, y}, "A2"), {dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x, y, z}, "A3"), {}, std::nullopt});
        ChainCertificate cert = chain_certificate(levels);
        CHECK(cert.valid);
        CHECK(cert.length == 3);
        CHECK(cert.length <= t3->size());
    }
    SUBCASE("two-variable flag") {
        auto t = table_xy();
        std::vector<ChainLevel> levels;
        levels.push_back({Algebra(t, {}, "A0"),
                          {Derivation::partial(t, 0), Derivation::partial(t, 1)},
                          std::nullopt});
        levels.push_back({Algebra(t, {var(t, "x")}, "A1"), {Derivation::partial(t, 1)}, std::nullopt});
        levels.push_back({Algebra(t, {var(t, "x"), var(t, "y")}, "A2"), {}, std::nullopt});
        ChainCertificate cert = chain_certificate(levels);
        CHECK(cert.valid);
        CHECK(cert.length == 2);
    }
    SUBCASE("witness in the lower level is rejected at the right index") {
        std::vector<ChainLevel> levels;
        levels.push_back({Algebra(t3, {}, "A0"), {dx, dy, dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x}, "A1"), {dy, dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x, y}, "A2"), {dz}, x});  // x already in A1
        ChainCertificate cert = chain_certificate(levels);
        CHECK_FALSE(cert.valid);
        CHECK(cert.failed_index == 2);
    }
    SUBCASE("derivation that fails to kill a level is rejected") {
        std::vector<ChainLevel> levels;
        levels.push_back({Algebra(t3, {}, "A0"), {dx}, std::nullopt});
        levels.push_back({Algebra(t3, {x}, "A1"), {dx}, std::nullopt});  // dx(x) != 0
        ChainCertificate cert = chain_certificate(levels);
        CHECK_FALSE(cert.valid);
        CHECK(cert.failed_index == 1);
    }
    SUBCASE("non-inclusion is rejected") {
        std::vector<ChainLevel> levels;
        levels.push_back({Algebra(t3, {y}, "A0"), {dx, dz}, std::nullopt});
        levels.push_back({Algebra(t3, {x}, "A1"), {dy, dz}, std::nullopt});
        ChainCertificate cert = chain_certificate(levels);
        CHECK_FALSE(cert.valid);
        CHECK(cert.failed_index == 1);
    }
}

TEST_CASE("fraction-side window properties of kernel intersections") {
    auto tab = table_txy();
    Poly x = var(tab, "x"), y = var(tab, "y");
    Poly t = var(tab, "t");
    Poly tx = t * x, ty = t * y;
    Algebra B(tab, {x, y, tx, ty}, "B");
    Derivation d1 = make_deriv(tab, {{"x", y}}, "D1");

    SUBCASE("members built from kernel fractions land in the kernel window") {
        // u/v with u, v killed by D1; whenever the reduced form is a member
        // of B, it is killed by D1 as well.
        std::vector<Poly> kernel_elems = {y, ty, y * y, t * y * y};
        for (const Poly& u : kernel_elems) {
            for (const Poly& v : kernel_elems) {
                RatFunc f(u * v * v, v);  // stays a polynomial after reduction
                REQUIRE(f.is_poly());
                Poly rep = f.as_poly();
                if (subalgebra_membership(rep, B).member) {
                    CHECK(apply(d1, rep).is_zero());
                }
            }
        }
    }
    SUBCASE("killed reduced fractions have killed numerator and denominator") {
        // Over the ambient polynomial ring: if D kills u/v in reduced form,
        // it kills u and v separately.
        for (int i = 0; i < 25; ++i) {
            Poly u0 = rand_nonzero_poly(tab, 3, 3), v0 = rand_nonzero_poly(tab, 3, 3);
            RatFunc f(u0, v0);
            if (f.is_zero()) continue;
            if (!apply_ratfunc(d1, f).is_zero()) continue;
            CHECK(apply(d1, f.num()).is_zero());
            CHECK(apply(d1, f.den()).is_zero());
        }
        // Deterministic instances built from kernel elements.
        RatFunc g(y * y * ty, y * ty * ty);
        REQUIRE(apply_ratfunc(d1, g).is_zero());
        CHECK(apply(d1, g.num()).is_zero());
        CHECK(apply(d1, g.den()).is_zero());
    }
}
