// Forward Cauchy weights, way-below tables, continuity and interpolation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "udom/domain.hpp"

using namespace udom;

namespace {

const TNorm kGodel = TNorm::godel();
const TNorm kLuk = TNorm::lukasiewicz();
const TNorm kProd = TNorm::product();
const TNorm kOS1 = TNorm::ordinal_sum({{0.0, 0.5, Archetype::lukasiewicz}});
const TNorm kOS2 = TNorm::ordinal_sum({{0.25, 0.5, Archetype::lukasiewicz}});

ParamStructure shape(const TNorm& t, const std::string& sel) {
    return ParamStructure::parse_shape(t, sel);
}

FiniteQOrder two_chain(const TNorm& t) {
    FiniteQOrder X;
    X.tnorm = t;
    X.elements = {"a", "b"};
    X.alpha = {{1.0, 1.0}, {0.0, 1.0}};
    return X;
}

FiniteQOrder kronecker(const TNorm& t, int n) {
    FiniteQOrder X;
    X.tnorm = t;
    for (int i = 0; i < n; ++i) X.elements.push_back(std::string(1, char('a' + i)));
    X.alpha.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) X.alpha[i][i] = 1.0;
    return X;
}

// Godel chain with increasing sub-diagonal column values: complete.
FiniteQOrder godel_chain(const std::vector<double>& cols) {
    FiniteQOrder X;
    X.tnorm = TNorm::godel();
    const int n = static_cast<int>(cols.size()) + 1;
    for (int i = 0; i < n; ++i) X.elements.push_back("c" + std::to_string(i));
    X.alpha.assign(n, std::vector<double>(n, 1.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) X.alpha[i][j] = cols[j];
    return X;
}

}  // namespace

TEST_CASE("forward Cauchy: representables pass, antichain tops fail") {
    std::mt19937 rng(5);
    for (const TNorm* t : {&kGodel, &kLuk}) {
        FiniteQOrder X = godel_chain({0.3, 0.7});
        X.tnorm = *t;
        for (int x = 0; x < X.size(); ++x) {
            FCReport r = is_forward_cauchy(X, yoneda(X, x));
            CHECK(r.forward_cauchy);
            CHECK(r.ideal.size() >= 1);
        }
    }
    FiniteQOrder D = kronecker(kGodel, 2);
    FCReport r = is_forward_cauchy(D, make_weight(D, {1.0, 1.0}));
    CHECK_FALSE(r.forward_cauchy);
    CHECK(r.inhabited);
    CHECK_FALSE(r.ideal_directed);  // the whole antichain is not directed
}

TEST_CASE("forward Cauchy: join identity rejects partial levels") {
    FiniteQOrder X = two_chain(kGodel);
    Weight phi = make_weight(X, {1.0, 0.5});
    FCReport r = is_forward_cauchy(X, phi);
    CHECK_FALSE(r.forward_cauchy);
    CHECK(r.ideal == std::vector<int>{0});
    CHECK(r.ideal_directed);
    CHECK_FALSE(r.join_identity);  // join over {a} is yoneda(a) = (1, 0) != phi
}

TEST_CASE("forward Cauchy oracle agrees with the ideal path") {
    FiniteQOrder X = two_chain(kGodel);
    Weight phi = make_weight(X, {1.0, 0.5});
    FCReport r = is_forward_cauchy(X, phi, 4);
    REQUIRE(r.oracle_verdict.has_value());
    CHECK_FALSE(*r.oracle_verdict);
    CHECK(r.paths_agree);
    FCReport r2 = is_forward_cauchy(X, yoneda(X, 1), 4);
    CHECK(*r2.oracle_verdict);
    CHECK(r2.paths_agree);
    CHECK_THROWS_AS(is_forward_cauchy(kronecker(kGodel, 2), zero_weight(kronecker(kGodel, 2)), 9),
                    input_error);
}

TEST_CASE("way-below on finite snapshots is the alpha table") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> cols;
        double v = 0.1;
        for (int i = 0; i < 1 + int(rng() % 3); ++i) {
            cols.push_back(v);
            v += 0.2;
        }
        FiniteQOrder X = godel_chain(cols);
        WayBelowTable t = way_below_finite(X);
        CHECK(t.invariants_hold);
        for (int x = 0; x < X.size(); ++x)
            for (int y = 0; y < X.size(); ++y)
                CHECK(t.w[x][y] == doctest::Approx(X.alpha[x][y]).epsilon(1e-9));
        for (int a = 0; a < X.size(); ++a) CHECK(is_compact_finite(X, a));
    }
}

TEST_CASE("parametric way-below tables") {
    // alphaR, Godel: w(0.5, 0.5) = 0.5 while hom(0.5, 0.5) = 1
    WayBelowTable g = way_below_param(shape(kGodel, "alphaR"), 4);
    FiniteQOrder G = grid_snapshot(shape(kGodel, "alphaR"), 4);
    int half = G.index_of("0.5");
    CHECK(g.w[half][half] == 0.5);
    CHECK(G.alpha[half][half] == 1.0);
    CHECK(g.invariants_hold);

    // alphaR, Lukasiewicz: w = hom everywhere
    WayBelowTable l = way_below_param(shape(kLuk, "alphaR"), 8);
    FiniteQOrder L = grid_snapshot(shape(kLuk, "alphaR"), 8);
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
            CHECK(l.w[x][y] == doctest::Approx(L.alpha[x][y]).epsilon(1e-12));
    CHECK(l.invariants_hold);

    // alphaR invariants hold for every spec; alphaL and xinf invariants
    // fail exactly for the non-(S) spec (the d map is not a way-below
    // relation there, matching the condition (S) hypothesis)
    for (const TNorm* t : {&kGodel, &kLuk, &kProd, &kOS1, &kOS2}) {
        CHECK(way_below_param(shape(*t, "alphaR"), 8).invariants_hold);
        CHECK(way_below_param(shape(*t, "alphaL"), 8).invariants_hold ==
              t->classify().satisfies_condition_s);
        CHECK(way_below_param(shape(*t, "xinf"), 8).invariants_hold ==
              t->classify().satisfies_condition_s);
    }
}

TEST_CASE("compactness on alphaR") {
    // Godel: fails at every idempotent in (0,1) and at 0; holds at 1
    for (double a : {0.25, 0.5, 0.75}) CHECK_FALSE(is_compact_param(shape(kGodel, "alphaR"), a, 16));
    CHECK_FALSE(is_compact_param(shape(kGodel, "alphaR"), 0.0, 16));
    CHECK(is_compact_param(shape(kGodel, "alphaR"), 1.0, 16));
    // Lukasiewicz: compact everywhere; product: compact off 0
    for (double a : {0.0, 0.25, 0.5, 1.0}) CHECK(is_compact_param(shape(kLuk, "alphaR"), a, 16));
    for (double a : {0.25, 0.5, 1.0}) CHECK(is_compact_param(shape(kProd, "alphaR"), a, 16));
    CHECK_FALSE(is_compact_param(shape(kProd, "alphaR"), 0.0, 16));
}

TEST_CASE("check_continuity on finite snapshots") {
    FiniteQOrder X = godel_chain({0.3, 0.7});
    ContinuityReport r = check_continuity(X);
    CHECK(r.is_continuous_lattice);
    CHECK(r.conditions_agree);
    CHECK(r.separated);
    CHECK(r.complete);

    // a discrete pair is not complete, hence not a continuous lattice
    ContinuityReport d = check_continuity(kronecker(kGodel, 2));
    CHECK_FALSE(d.is_continuous_lattice);
    CHECK_FALSE(d.complete);
}

TEST_CASE("check_continuity on parametric structures") {
    for (const TNorm* t : {&kGodel, &kLuk, &kProd, &kOS1, &kOS2}) {
        ContinuityReport r = check_continuity(shape(*t, "alphaR"), 32);
        CHECK(r.is_continuous_lattice);
        CHECK(r.conditions_agree);
        ContinuityReport l = check_continuity(shape(*t, "alphaL"), 32);
        CHECK(l.is_continuous_lattice == t->classify().satisfies_condition_s);
    }
    ContinuityReport xi = check_continuity(shape(kGodel, "xinf"), 8);
    CHECK_FALSE(xi.is_continuous_lattice);  // no bottom in the underlying order
}

TEST_CASE("interpolation") {
    FiniteQOrder X = godel_chain({0.2, 0.6});
    InterpolationReport fr = check_interpolation(X);
    CHECK(fr.pass);
    CHECK(fr.max_excess <= 1e-9);
    CHECK(fr.max_deficit <= 1e-9);

    for (const TNorm* t : {&kGodel, &kLuk, &kProd, &kOS1, &kOS2}) {
        InterpolationReport r = check_interpolation(shape(*t, "alphaR"), 50);
        CHECK(r.pass);
        CHECK(r.max_excess <= 1e-9);
        CHECK(r.max_deficit <= 1.0 / 50 + 1e-9);
    }
}

TEST_CASE("way-below in finite powers") {
    ParamStructure p2 = shape(kGodel, "power:alphaR:2");
    PowerWayBelow r = way_below_power(p2, {0.25, 0.5}, {0.5, 0.75});
    ParamStructure base = shape(kGodel, "alphaR");
    double expect = std::min(param_d(base, CPoint::val(0.5), CPoint::val(0.25)),
                             param_d(base, CPoint::val(0.75), CPoint::val(0.5)));
    CHECK(r.upper_bound == doctest::Approx(expect));
    CHECK(r.equality);

    // the upper bound never exceeds the componentwise hom meet on a sweep
    FiniteQOrder G = grid_snapshot(base, 4);
    for (int i = 0; i < G.size(); ++i)
        for (int j = 0; j < G.size(); ++j)
            for (int k = 0; k < G.size(); ++k)
                for (int l = 0; l < G.size(); ++l) {
                    double xi = i / 4.0, xj = j / 4.0, yk = k / 4.0, yl = l / 4.0;
                    PowerWayBelow pw = way_below_power(p2, {xi, xj}, {yk, yl});
                    double hom = std::min(param_hom(base, CPoint::val(xi), CPoint::val(yk)),
                                          param_hom(base, CPoint::val(xj), CPoint::val(yl)));
                    CHECK(pw.upper_bound <= hom + 1e-9);
                }
    CHECK_THROWS_AS(way_below_power(base, {0.1}, {0.2}), input_error);
}

TEST_CASE("scott continuity transfer (finite complete snapshots)") {
    // a table map between complete snapshots preserves enriched suprema of
    // forward Cauchy weights iff its underlying map preserves directed joins
    std::mt19937 rng(101);
    FiniteQOrder X = godel_chain({0.3, 0.6});
    FiniteQOrder Y = godel_chain({0.2, 0.5});
    for (int rep = 0; rep < 64; ++rep) {
        std::vector<int> asg(X.size());
        for (int i = 0; i < X.size(); ++i) asg[i] = int(rng() % Y.size());
        QMap f{&X, &Y, asg};
        if (!preserves_qorder(f)) continue;
        // enriched side: forward Cauchy weights are the representables
        bool enriched = true;
        for (int a = 0; a < X.size(); ++a) {
            SupResult s = supremum_of_weight(Y, push_forward(f, yoneda(X, a)));
            if (!s.element || !Y.isomorphic_elements(*s.element, f(a))) enriched = false;
        }
        // underlying side: directed subsets of a finite order have maxima,
        // so monotone maps preserve directed joins
        bool underlying = true;
        for (int a = 0; a < X.size(); ++a)
            for (int b = 0; b < X.size(); ++b)
                if (X.und(a, b) && !Y.und(f(a), f(b))) underlying = false;
        CHECK(enriched == underlying);
    }
}

TEST_CASE("w(x,-) preserves suprema of forward Cauchy weights (finite)") {
    FiniteQOrder X = godel_chain({0.4, 0.8});
    WayBelowTable wt = way_below_finite(X);
    for (int x = 0; x < X.size(); ++x)
        for (int a = 0; a < X.size(); ++a) {
            // Eq (1) with psi = w(x, -): sup psi->(phi_a) = join_y phi_a(y) & psi(y)
            double expect = 0.0;
            for (int y = 0; y < X.size(); ++y)
                expect = std::max(expect, X.tnorm.conj(X.alpha[y][a], wt.w[x][y]));
            CHECK(wt.w[x][a] == doctest::Approx(expect).epsilon(1e-9));
        }
}

TEST_CASE("the underlying order of a finite snapshot is directed complete") {
    // every finite snapshot has a directed-complete underlying order
    std::mt19937 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        FiniteQOrder X = godel_chain({0.1, 0.5});
        // any directed subset of a finite preorder has a maximum
        for (unsigned mask = 1; mask < (1u << X.size()); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < X.size(); ++i)
                if (mask & (1u << i)) sub.push_back(i);
            bool directed = true;
            for (int a : sub)
                for (int b : sub) {
                    bool bound = false;
                    for (int c : sub) bound |= X.und(a, c) && X.und(b, c);
                    directed &= bound;
                }
            if (!directed) continue;
            bool has_max = false;
            for (int m : sub) {
                bool all = true;
                for (int a : sub) all &= X.und(a, m);
                has_max |= all;
            }
            CHECK(has_max);
        }
    }
}
