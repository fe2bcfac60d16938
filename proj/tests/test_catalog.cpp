#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lndcert/invariants.hpp"
#include "lndcert/report.hpp"
#include "testutil.hpp"

using namespace lndcert;

namespace {

Poly var(const VarTablePtr& t, const char* name) {
    return Poly::variable(t, *t->index_of(name));
}

}  // namespace

TEST_CASE("counterexample entries are shaped as documented") {
    CatalogEntry e1 = build_counterexample(1);
    REQUIRE(e1.model.algebras.size() == 1);
    CHECK(e1.model.algebras[0].generators().size() == 4);
    CHECK(e1.model.table->param_count() == 1);

    CatalogEntry e2 = build_counterexample(2);
    CHECK(e2.model.algebras[0].generators().size() == 6);
    CHECK(e2.model.table->param_count() == 2);

    CHECK_THROWS_AS(build_counterexample(0), Error);
}

TEST_CASE("catalog entries rerun green from their serialized form") {
    for (const CatalogEntry& entry : catalog_entries()) {
        Model reparsed = parse_model(entry.to_dsl());
        CHECK(print_model(reparsed) == entry.to_dsl());
        RunReport report = run_checks(reparsed, std::nullopt, {});
        CHECK(report.all_pass);
        CHECK(report.ran == entry.model.checks.size());
    }
}

TEST_CASE("ml window check passes for m = 1, 2, 3 at word length 4") {
    for (int m = 1; m <= 3; ++m) {
        CatalogEntry entry = build_counterexample(m);
        const Algebra& B = entry.model.algebras[0];
        std::vector<Derivation> delta = {*entry.model.find_derivation("D1"),
                                         *entry.model.find_derivation("D2")};
        MLCertificate cert = ml_certificate(B, delta, 4);
        CHECK(cert.constants_only);
    }
}

TEST_CASE("grading checks") {
    auto tab = VarTable::make({"t"}, {"x", "y"});
    Poly t = var(tab, "t"), x = var(tab, "x"), y = var(tab, "y");

    SUBCASE("parameter-product algebra is nonnegatively graded") {
        Algebra B(tab, {x, y, t * x, t * y}, "B");
        GradingResult r = grading_nonneg_check(B, {-1, 1, 1});
        CHECK(r.graded_nonneg);
        REQUIRE(r.generator_weights.size() == 4);
        CHECK(*r.generator_weights[0] == 1);
        CHECK(*r.generator_weights[2] == 0);
    }
    SUBCASE("negative weight fails") {
        Algebra B(tab, {t}, "B");
        GradingResult r = grading_nonneg_check(B, {-1, 1, 1});
        CHECK_FALSE(r.graded_nonneg);
        CHECK(*r.failing_generator == 0);
    }
    SUBCASE("inhomogeneous generator fails") {
        Algebra B(tab, {x + y * y}, "B");
        GradingResult r1 = grading_nonneg_check(B, {0, 2, 1});
        CHECK(r1.graded_nonneg);  // weights 2 = 2: homogeneous
        GradingResult r2 = grading_nonneg_check(B, {0, 1, 1});
        CHECK_FALSE(r2.graded_nonneg);
    }
}

TEST_CASE("catalog runner round trip is deterministic") {
    RunOptions opts;
    RunReport a = run_catalog(opts, "counterexample(m=1)");
    RunReport b = run_catalog(opts, "counterexample(m=1)");
    CHECK(a.to_string() == b.to_string());
    CHECK(a.all_pass);
}

TEST_CASE("catalog lookup by id") {
    CHECK(catalog_entry("xytxty").has_value());
    CHECK(catalog_entry("counterexample(m=3)").has_value());
    CHECK_FALSE(catalog_entry("nope").has_value());
}
