// Acceptance suite: one line per criterion, "PASS"/"FAIL" plus a short
// description. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

#include "lndcert/report.hpp"
#include "lndcert/invariants.hpp"
#include "testutil.hpp"

using namespace lndcert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const char* what, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    auto start = Clock::now();
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s  criterion %2d  (%.2fs)  %s%s%s\n", ok ? "PASS" : "FAIL", number, secs, what,
                error.empty() ? "" : " -- ", error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

Poly var(const VarTablePtr& t, const char* name) {
    return Poly::variable(t, *t->index_of(name));
}

Derivation make_deriv(const VarTablePtr& t, std::vector<std::pair<const char*, Poly>> images,
                      const char* name = "") {
    std::vector<Poly> imgs(t->size(), Poly::zero(t));
    for (auto& [v, p] : images) imgs[*t->index_of(v)] = p;
    return Derivation(t, std::move(imgs), name);
}

bool expect(bool cond, const char* what) {
    if (!cond) std::printf("      detail: failed condition: %s\n", what);
    return cond;
}

// 1. Counterexample family at m=1: stability, local nilpotency with small
//    indices, and the constants-only window at word length 4, within 60 s.
bool criterion1() {
    auto start = Clock::now();
    auto tab = VarTable::make({"r1"}, {"x", "y"});
    Poly r1 = var(tab, "r1"), x = var(tab, "x"), y = var(tab, "y");
    Algebra B(tab, {x, y, r1 * x, r1 * y}, "B");
    Derivation d1 = make_deriv(tab, {{"x", y}}, "D1");
    Derivation d2 = make_deriv(tab, {{"y", x}}, "D2");

    bool ok = true;
    for (const Derivation* d : {&d1, &d2}) {
        StabilityResult st = check_stability(*d, B);
        ok = ok && expect(st.stable, "derivation stable on B");
        LndStatus lnd = check_lnd(*d, B);
        ok = ok && expect(lnd.nilpotent, "derivation locally nilpotent on B");
        for (unsigned idx : lnd.indices) ok = ok && expect(idx <= 3, "nilpotency index <= 3");
    }
    std::vector<Derivation> delta = {d1, d2};
    MLCertificate cert = ml_certificate(B, delta, 4);
    ok = ok && expect(cert.constants_only, "window certificate is constants_only at L=4");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && expect(secs < 60.0, "runtime under 60 s");
    return ok;
}

// 2. Valuation certificate on the parameter-product algebra: exact integer
//    values, nonnegative generators, negative target.
bool criterion2() {
    auto tab = VarTable::make({"t"}, {"x", "y"});
    Poly t = var(tab, "t"), x = var(tab, "x"), y = var(tab, "y");
    Algebra B(tab, {x, y, t * x, t * y}, "B");
    BaseValuation v = BaseValuation::order_at_infinity(0);

    LexValue zero;
    zero.main = {0, 0};
    zero.base = 0;
    NonnegCertificate gens = nonneg_certificate(B, v);
    bool ok = expect(gens.all_nonneg, "all generator values nonnegative");
    for (const LexValue& value : gens.generator_values)
        ok = ok && expect(value >= zero, "generator value >= (0,0|0)");
    LexValue tv = gauss_lex_value(v, RatFunc(t));
    LexValue expected;
    expected.main = {0, 0};
    expected.base = -1;
    ok = ok && expect(tv == expected, "value of t is (0,0|-1)");
    ok = ok && expect(non_membership_by_valuation(RatFunc(t), B, v).proved,
                      "non-membership certificate for t");
    return ok;
}

// 3. Rank witness (x, y, t*x) for {y d/dx, x d/dy, d/dt}: determinant x^2*y,
//    so the derivation span has dimension >= 3 = number of ambient variables.
bool criterion3() {
    auto tab = VarTable::make({"t"}, {"x", "y"});
    Poly x = var(tab, "x"), y = var(tab, "y"), t = var(tab, "t");
    std::vector<Derivation> ds = {make_deriv(tab, {{"x", y}}, "D1"),
                                  make_deriv(tab, {{"y", x}}, "D2"),
                                  Derivation::partial(tab, 0)};
    std::vector<Poly> bs = {x, y, t * x};
    RankWitness w = rank_witness(ds, bs);
    bool ok = expect(w.nonzero, "determinant nonzero");
    ok = ok && expect(w.determinant == x * x * y, "determinant equals x^2*y");
    ok = ok && expect(bs.size() == tab->size(), "witness size matches ambient variable count");
    return ok;
}

// 4. Chain certificate for the full flag in Q[x,y,z], plus rejection of a
//    corrupted chain at the right index.
bool criterion4() {
    auto t3 = VarTable::make({}, {"x", "y", "z"});
    Poly x = Poly::variable(t3, 0), y = Poly::variable(t3, 1), z = Poly::variable(t3, 2);
    Derivation dx = Derivation::partial(t3, 0), dy = Derivation::partial(t3, 1),
               dz = Derivation::partial(t3, 2);
    std::vector<ChainLevel> levels;
    levels.push_back({Algebra(t3, {}, "A0"), {dx, dy, dz}, std::nullopt});
    levels.push_back({Algebra(t3, {x}, "A1"), {dy, dz}, std::nullopt});
    levels.push_back({Algebra(t3, {x, y}, "A2"), {dz}, std::nullopt});
    levels.push_back({Algebra(t3, {x, y, z}, "A3"), {}, std::nullopt});
    ChainCertificate cert = chain_certificate(levels);
    bool ok = expect(cert.valid, "flag chain verifies");
    ok = ok && expect(cert.length == 3, "length 3");

    // Corrupt: use the witness from one level down, so strictness fails.
    std::vector<ChainLevel> bad = levels;
    bad[3].witness = y;  // y already lies in A2
    ChainCertificate cert2 = chain_certificate(bad);
    ok = ok && expect(!cert2.valid, "corrupted chain rejected");
    ok = ok && expect(cert2.failed_index == 3, "rejection at index 3");
    return ok;
}

// 5. Kernel windows match the brute-force coefficient-solver oracle on
//    randomized monomial derivations: >= 50 cases, dimension and span.
bool criterion5() {
    auto t3 = VarTable::make({}, {"x", "y", "z"});
    int cases = 0;
    bool ok = true;
    while (cases < 50) {
        std::vector<Poly> images;
        for (std::size_t v = 0; v < 3; ++v) {
            if (testutil::rand_int(0, 2) == 0) {
                images.push_back(Poly::zero(t3));
                continue;
            }
            Monomial m(3);
            int budget = testutil::rand_int(0, 2);
            for (std::size_t w = 0; w < 3 && budget > 0; ++w) {
                int e = testutil::rand_int(0, budget);
                m.exp[w] = e;
                budget -= e;
            }
            images.push_back(Poly::monomial(t3, m, Rat(testutil::rand_int(1, 3))));
        }
        Derivation D(t3, images);
        int degree = testutil::rand_int(1, 3);
        KernelBasis got = kernel_basis_bounded(D, {degree, 0});
        std::vector<Poly> want = testutil::oracle_kernel(D, degree);
        ok = ok && expect(got.basis.size() == want.size(), "kernel dimension matches oracle");
        ok = ok && expect(testutil::spans_equal(got.basis, want), "kernel span matches oracle");
        if (!ok) return false;
        ++cases;
    }
    return ok;
}

// 6. Divisibility property of locally nilpotent derivations: 200 randomized
//    pairs, no violation of "f | D(f) implies D(f) = 0".
bool criterion6() {
    auto t3 = VarTable::make({}, {"x", "y", "z"});
    int violations = 0;
    int pairs = 0;
    while (pairs < 200) {
        Derivation D = testutil::rand_triangular_derivation(t3, 2, 2);
        Poly f = testutil::rand_nonzero_poly(t3, 4, 4);
        ++pairs;
        Poly df = apply(D, f);
        if (df.is_zero()) continue;  // divisibility holds, image zero: fine
        if (poly_divides(f, df)) ++violations;
    }
    return expect(violations == 0, "no divisibility violations in 200 pairs");
}

// 7. Reconstruction along a slice: 100 random elements for d/dy (sigma = y)
//    and for y d/dx with slice (x, y); exact identity, kernel coefficients,
//    denominators powers of the slice image.
bool criterion7() {
    auto t = VarTable::make({}, {"x", "y"});
    Poly x = Poly::variable(t, 0), y = Poly::variable(t, 1);
    bool ok = true;

    Derivation dy = Derivation::partial(t, 1);
    for (int i = 0; i < 100 && ok; ++i) {
        Poly b = testutil::rand_poly(t, 8, 6);
        std::vector<RatFunc> c = dixmier_decompose(dy, y, b);
        RatFunc sum = RatFunc::zero(t);
        RatFunc sigma(y);
        for (std::size_t n = 0; n < c.size(); ++n) {
            ok = ok && expect(apply_ratfunc(dy, c[n]).is_zero(), "coefficient killed (d/dy)");
            sum += c[n] * sigma.pow(static_cast<int>(n));
        }
        ok = ok && expect(sum == RatFunc(b), "reconstruction identity (d/dy)");
    }

    Derivation d1 = make_deriv(t, {{"x", y}}, "D1");
    for (int i = 0; i < 100 && ok; ++i) {
        Poly b = testutil::rand_poly(t, 8, 6);
        std::vector<RatFunc> c = dixmier_decompose(d1, x, b);
        RatFunc sum = RatFunc::zero(t);
        RatFunc sigma(x, y);
        for (std::size_t n = 0; n < c.size(); ++n) {
            ok = ok && expect(apply_ratfunc(d1, c[n]).is_zero(), "coefficient killed (y d/dx)");
            // Denominator must be a power of a = y: a single pure-y term.
            const Poly& den = c[n].den();
            bool denom_ok = den.terms().size() == 1 && !den.uses_var(0);
            ok = ok && expect(denom_ok, "denominator is a power of y");
            sum += c[n] * sigma.pow(static_cast<int>(n));
        }
        ok = ok && expect(sum == RatFunc(b), "reconstruction identity (y d/dx)");
    }
    return ok;
}

// 8. Plinth window of x d/dy at degree 3 is the window of x*Q[x], and the
//    derivation is tight in the window.
bool criterion8() {
    auto t = VarTable::make({}, {"x", "y"});
    Poly x = Poly::variable(t, 0);
    Derivation D = make_deriv(t, {{"y", x}}, "D");
    PlinthBasis p = plinth_bounded(D, {3, 0});
    std::vector<Poly> expected = {x, x * x, x * x * x};
    bool ok = expect(testutil::spans_equal(p.basis, expected), "plinth window equals x*Q[x] window");
    ok = ok && expect(p.basis.size() == 3, "plinth window dimension 3");
    ok = ok && expect(tightness_check(D, {3, 0}).tight, "tightness holds");
    return ok;
}

// 9. Valuation axioms on 500 random nonzero pairs over two parameters and
//    two main variables.
bool criterion9() {
    auto tab = VarTable::make({"s", "t"}, {"x", "y"});
    BaseValuation v = BaseValuation::order_at_infinity(1);
    int pairs = 0;
    bool ok = true;
    while (pairs < 500 && ok) {
        RatFunc f(testutil::rand_nonzero_poly(tab, 3, 3), testutil::rand_nonzero_poly(tab, 3, 3));
        RatFunc g(testutil::rand_nonzero_poly(tab, 3, 3), testutil::rand_nonzero_poly(tab, 3, 3));
        if (f.is_zero() || g.is_zero()) continue;
        ++pairs;
        LexValue vf = gauss_lex_value(v, f);
        LexValue vg = gauss_lex_value(v, g);
        ok = ok && expect(gauss_lex_value(v, f * g) == vf + vg, "multiplicativity");
        RatFunc sum = f + g;
        if (!sum.is_zero()) {
            LexValue vsum = gauss_lex_value(v, sum);
            ok = ok && expect(vsum >= std::min(vf, vg), "ultrametric inequality");
            if (!(vf == vg)) ok = ok && expect(vsum == std::min(vf, vg), "equality when values differ");
        }
    }
    return ok && expect(pairs == 500, "500 pairs exercised");
}

// 10. Grading check on the catalog example, and the full catalog green end
//     to end from its serialized text within 5 minutes.
bool criterion10() {
    auto start = Clock::now();
    CatalogEntry entry = build_xytxty();
    const Algebra& B = entry.model.algebras[0];
    std::vector<int> weights = {-1, 1, 1};
    bool ok = expect(grading_nonneg_check(B, weights).graded_nonneg, "grading nonnegative");

    RunOptions opts;
    RunReport report = run_catalog(opts);
    ok = ok && expect(report.all_pass, "catalog green end to end");
    ok = ok && expect(report.ran >= 16, "all scripted checks executed");
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    ok = ok && expect(secs < 300.0, "runtime under 5 minutes");
    return ok;
}

}  // namespace

int main() {
    criterion(1, "counterexample family m=1: stable, locally nilpotent, constants-only window",
              criterion1);
    criterion(2, "valuation certificate: generators nonnegative, v(t)=(0,0|-1), non-membership",
              criterion2);
    criterion(3, "rank witness (x, y, t*x) with determinant x^2*y", criterion3);
    criterion(4, "chain certificate: full flag valid, corrupted chain rejected at its index",
              criterion4);
    criterion(5, "kernel windows match the brute-force oracle on 50 random derivations",
              criterion5);
    criterion(6, "f | D(f) forces D(f)=0 for locally nilpotent D: 200 random pairs", criterion6);
    criterion(7, "slice reconstruction: exact expansion with kernel coefficients, 2x100 cases",
              criterion7);
    criterion(8, "plinth window of x d/dy at degree 3 equals the x*Q[x] window, tight",
              criterion8);
    criterion(9, "valuation axioms on 500 random pairs over 2 parameters + 2 mains", criterion9);
    criterion(10, "grading nonnegative and full catalog green from serialized text", criterion10);
    std::printf("%s: %d of 10 criteria passed\n", failures == 0 ? "OK" : "FAILED", 10 - failures);
    return failures;
}
