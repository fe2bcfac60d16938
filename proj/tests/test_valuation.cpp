#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lndcert/valuation.hpp"
#include "testutil.hpp"

using namespace lndcert;
using testutil::rand_nonzero_poly;

namespace {

VarTablePtr table_txy() { return VarTable::make({"t"}, {"x", "y"}); }
VarTablePtr table_2p2m() { return VarTable::make({"s", "t"}, {"x", "y"}); }

Poly var(const VarTablePtr& t, const char* name) {
    return Poly::variable(t, *t->index_of(name));
}

LexValue lv(std::vector<int> main, int base) {
    LexValue v;
    v.main = std::move(main);
    v.base = base;
    return v;
}

}  // namespace

TEST_CASE("lex value ordering and parsing") {
    CHECK(lv({1, 0}, -1) > lv({0, 0}, 0));
    CHECK(lv({0, 0}, -1) < lv({0, 0}, 0));
    CHECK(lv({0, 1}, 5) < lv({1, 0}, -7));
    CHECK(lv({1, 0}, -1).is_nonnegative());
    CHECK_FALSE(lv({0, 0}, -1).is_nonnegative());
    CHECK(lv({0, 0}, 0).is_nonnegative());
    CHECK(lv({1, 2}, -3).to_string() == "(1,2|-3)");
    CHECK(LexValue::parse("(1,2|-3)") == lv({1, 2}, -3));
    CHECK(LexValue::parse("(|4)") == lv({}, 4));
    CHECK_THROWS_AS(LexValue::parse("(1,2|"), Error);
}

TEST_CASE("base valuations on parameter-only inputs") {
    auto tab = table_txy();
    Poly t = var(tab, "t");
    Poly one = Poly::constant(tab, Rat(1));

    BaseValuation inf = BaseValuation::order_at_infinity(0);
    CHECK(base_value(inf, RatFunc(t)) == -1);
    CHECK(base_value(inf, RatFunc(one, t)) == 1);
    CHECK(base_value(inf, RatFunc(t * t + t)) == -2);

    BaseValuation at0 = BaseValuation::order_at_value(0, Rat(0));
    CHECK(base_value(at0, RatFunc(t * t, t + one)) == 2);
    CHECK(base_value(at0, RatFunc(t + one)) == 0);

    BaseValuation at1 = BaseValuation::order_at_value(0, Rat(1));
    CHECK(base_value(at1, RatFunc(t - one)) == 1);

    BaseValuation triv = BaseValuation::trivial();
    CHECK(base_value(triv, RatFunc(t * t + t)) == 0);

    CHECK_THROWS_AS(base_value(inf, RatFunc::zero(tab)), Error);
    CHECK_THROWS_AS(base_value(inf, RatFunc(var(tab, "x"))), Error);
}

TEST_CASE("order at an irreducible parameter polynomial") {
    auto tab = table_2p2m();
    Poly s = var(tab, "s"), t = var(tab, "t");
    Poly p = s * s + t * t;  // irreducible over Q
    BaseValuation v = BaseValuation::order_at_irreducible(p);
    CHECK(base_value(v, RatFunc(p * p * (s + t))) == 2);
    CHECK(base_value(v, RatFunc(s + t)) == 0);
    CHECK(base_value(v, RatFunc(s, p)) == -1);
    CHECK_THROWS_AS(BaseValuation::order_at_irreducible(Poly::constant(tab, Rat(2))), Error);
}

TEST_CASE("gauss extension, pinned examples") {
    auto tab = table_txy();
    Poly t = var(tab, "t"), x = var(tab, "x"), y = var(tab, "y");
    BaseValuation inf = BaseValuation::order_at_infinity(0);

    CHECK(gauss_lex_value(inf, x) == lv({1, 0}, 0));
    CHECK(gauss_lex_value(inf, y) == lv({0, 1}, 0));
    CHECK(gauss_lex_value(inf, t * x) == lv({1, 0}, -1));
    CHECK(gauss_lex_value(inf, RatFunc(t)) == lv({0, 0}, -1));
    CHECK(gauss_lex_value(inf, RatFunc(Poly::constant(tab, Rat(1)), x)) == lv({-1, 0}, 0));
    CHECK(gauss_lex_value(inf, t * x).is_nonnegative());
    CHECK_FALSE(gauss_lex_value(inf, RatFunc(t)).is_nonnegative());
    CHECK_THROWS_AS(gauss_lex_value(inf, Poly::zero(tab)), Error);
}

TEST_CASE("gauss extension matches the series oracle in one main variable") {
    // For inputs polynomial in the first main variable the value is the
    // lowest-degree pair read off directly.
    auto tab = table_txy();
    Poly t = var(tab, "t"), x = var(tab, "x");
    BaseValuation at0 = BaseValuation::order_at_value(0, Rat(0));
    for (int i = 0; i < 30; ++i) {
        // Random sum of t^a x^b terms.
        std::vector<Poly::Term> terms;
        int n = testutil::rand_int(1, 4);
        for (int k = 0; k < n; ++k) {
            Monomial m(3);
            m.exp[0] = testutil::rand_int(0, 3);
            m.exp[1] = testutil::rand_int(0, 3);
            Rat c = testutil::rand_rat(4);
            if (!c.is_zero()) terms.push_back({m, c});
        }
        Poly f = Poly::from_terms(tab, terms);
        if (f.is_zero()) continue;
        int m = f.lowest_degree_in(1);
        Poly coeff = f.coefficient_of(1, m);  // series coefficient of x^m
        LexValue got = gauss_lex_value(at0, f);
        CHECK(got.main[0] == m);
        CHECK(got.main[1] == 0);
        CHECK(got.base == base_value(at0, RatFunc(coeff)));
        (void)t;
        (void)x;
    }
}

TEST_CASE("valuation axioms on random fractions") {
    auto tab = table_2p2m();
    std::vector<BaseValuation> vs = {
        BaseValuation::order_at_infinity(1), BaseValuation::order_at_value(0, Rat(0)),
        BaseValuation::trivial()};
    for (const BaseValuation& v : vs) {
        for (int i = 0; i < 60; ++i) {
            RatFunc f(rand_nonzero_poly(tab, 3, 3), rand_nonzero_poly(tab, 3, 3));
            RatFunc g(rand_nonzero_poly(tab, 3, 3), rand_nonzero_poly(tab, 3, 3));
            if (f.is_zero() || g.is_zero()) continue;
            LexValue vf = gauss_lex_value(v, f);
            LexValue vg = gauss_lex_value(v, g);
            CHECK(gauss_lex_value(v, f * g) == vf + vg);
            RatFunc sum = f + g;
            if (!sum.is_zero()) {
                LexValue vs_ = gauss_lex_value(v, sum);
                CHECK(vs_ >= std::min(vf, vg));
                if (!(vf == vg)) CHECK(vs_ == std::min(vf, vg));
            }
        }
    }
}

TEST_CASE("parameter-only values agree with the base valuation") {
    auto tab = table_2p2m();
    BaseValuation v = BaseValuation::order_at_infinity(0);
    for (int i = 0; i < 25; ++i) {
        Poly num = rand_nonzero_poly(tab, 3, 3);
        Poly den = rand_nonzero_poly(tab, 3, 3);
        // Strip main variables.
        auto strip = [&](const Poly& p) {
            std::vector<Poly::Term> kept;
            for (const Poly::Term& t : p.terms()) {
                Monomial m = t.mono;
                m.exp[2] = 0;
                m.exp[3] = 0;
                kept.push_back({m, t.coeff});
            }
            return Poly::from_terms(tab, std::move(kept));
        };
        Poly n2 = strip(num), d2 = strip(den);
        if (n2.is_zero() || d2.is_zero()) continue;
        RatFunc f(n2, d2);
        if (f.is_zero()) continue;
        LexValue value = gauss_lex_value(v, f);
        CHECK(value.main == std::vector<int>{0, 0});
        CHECK(value.base == base_value(v, f));
    }
}

TEST_CASE("nonnegativity certificates") {
    auto tab = table_txy();
    Poly t = var(tab, "t"), x = var(tab, "x"), y = var(tab, "y");
    BaseValuation inf = BaseValuation::order_at_infinity(0);

    Algebra B(tab, {x, y, t * x, t * y}, "B");
    NonnegCertificate cert = nonneg_certificate(B, inf);
    CHECK(cert.all_nonneg);
    REQUIRE(cert.generator_values.size() == 4);
    CHECK(cert.generator_values[0] == lv({1, 0}, 0));
    CHECK(cert.generator_values[2] == lv({1, 0}, -1));

    Algebra bad(tab, {t}, "bad");
    NonnegCertificate cert2 = nonneg_certificate(bad, inf);
    CHECK_FALSE(cert2.all_nonneg);
    CHECK(*cert2.violating_generator == 0);

    Algebra plain(tab, {x, y}, "plain");
    CHECK(nonneg_certificate(plain, inf).all_nonneg);
    CHECK(nonneg_certificate(plain, BaseValuation::trivial()).all_nonneg);
}

TEST_CASE("non-membership by valuation") {
    auto tab = table_txy();
    Poly t = var(tab, "t"), x = var(tab, "x"), y = var(tab, "y");
    BaseValuation inf = BaseValuation::order_at_infinity(0);
    Algebra B(tab, {x, y, t * x, t * y}, "B");

    NonMembershipCertificate cert = non_membership_by_valuation(RatFunc(t), B, inf);
    CHECK(cert.proved);
    CHECK(cert.target_value == lv({0, 0}, -1));

    NonMembershipCertificate cert2 = non_membership_by_valuation(RatFunc(x), B, inf);
    CHECK_FALSE(cert2.proved);  // v(x) >= 0: inconclusive

    auto t1 = VarTable::make({}, {"x"});
    Poly u = Poly::variable(t1, 0);
    Algebra A(t1, {u}, "A");
    NonMembershipCertificate cert3 = non_membership_by_valuation(
        RatFunc(Poly::constant(t1, Rat(1)), u), A, BaseValuation::trivial());
    CHECK(cert3.proved);

    CHECK_THROWS_AS(non_membership_by_valuation(RatFunc::zero(tab), B, inf), Error);
}
