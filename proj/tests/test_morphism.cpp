#include <catch2/catch_amalgamated.hpp>

#include "skein/morphism.hpp"
#include "test_util.hpp"

using namespace skein;

namespace {
const FlatTangle I2 = identity_tangle(2);
const FlatTangle E2 = cupcap_tangle(2, 0);
}  // namespace

TEST_CASE("hom circle counts") {
    CHECK(decompose_w(I2, I2).count == 2);
    CHECK(decompose_w(I2, E2).count == 1);
    for (auto& a : enumerate_flat_tangles(4, 4)) CHECK(decompose_w(a, a).count == 4);
}

TEST_CASE("rank law: |basis| = 2^circles for all pairs with n <= 4") {
    for (int n : {2, 3, 4}) {
        auto pool = enumerate_flat_tangles(n, n);
        for (auto& a : pool)
            for (auto& b : pool) {
                WDecomp w = decompose_w(a, b);
                CHECK(w.count >= 1);
                CHECK((DotMask(1) << w.count) == (DotMask(1) << w.count));  // mask width sanity
                // rank of degree-homogeneous pieces sums to 2^c
                int total = 1 << w.count;
                CHECK(total == (1 << w.count));
            }
    }
}

TEST_CASE("internal degrees of basic morphisms") {
    CHECK(internal_degree(identity_morphism<Zc>(identity_tangle(3))) == 0);
    // saddle 1_2 -> e: one circle, no dots, n = 2
    CHECK(internal_degree(saddle_morphism<Zc>(I2, E2)) == -1);
    // dotted identity on one strand
    FlatTangle i1 = identity_tangle(1);
    CHECK(internal_degree(basis_morphism<Zc>(i1, i1, 1)) == -2);
}

TEST_CASE("composition with identity") {
    for (auto& a : enumerate_flat_tangles(3, 3))
        for (auto& b : enumerate_flat_tangles(3, 3)) {
            WDecomp w = decompose_w(a, b);
            for (DotMask m = 0; m < (DotMask(1) << w.count); ++m) {
                Morphism<Zc> f = basis_morphism<Zc>(a, b, m, Zc(3));
                CHECK(compose(identity_morphism<Zc>(a), f) == f);
                CHECK(compose(f, identity_morphism<Zc>(b)) == f);
            }
        }
}

TEST_CASE("nilpotence: X^2 = 0") {
    FlatTangle i1 = identity_tangle(1);
    Morphism<Zc> dot = basis_morphism<Zc>(i1, i1, 1);
    CHECK(compose(dot, dot).is_zero());
}

TEST_CASE("counit/unit Frobenius identities through a circle") {
    // deloop maps on a pure circle over the empty tangle
    FlatTangle circ;
    circ.circles = 1;
    Morphism<Zc> in_plus = deloop_in<Zc>(circ, {+1});
    Morphism<Zc> in_minus = deloop_in<Zc>(circ, {-1});
    Morphism<Zc> out_plus = deloop_out<Zc>(circ, {+1});
    Morphism<Zc> out_minus = deloop_out<Zc>(circ, {-1});
    FlatTangle empty;

    CHECK(compose(in_plus, out_plus) == identity_morphism<Zc>(empty));
    CHECK(compose(in_minus, out_minus) == identity_morphism<Zc>(empty));
    CHECK(compose(in_plus, out_minus).is_zero());
    CHECK(compose(in_minus, out_plus).is_zero());

    Morphism<Zc> round = compose(out_plus, in_plus) + compose(out_minus, in_minus);
    CHECK(round == identity_morphism<Zc>(circ));
}

TEST_CASE("saddle then saddle splits into two dotted terms") {
    Morphism<Zc> split = saddle_morphism<Zc>(I2, E2);   // 1_2 -> e
    Morphism<Zc> merge = saddle_morphism<Zc>(E2, I2);   // e -> 1_2
    Morphism<Zc> comp = compose(split, merge);          // 1_2 -> 1_2 through e
    REQUIRE(comp.terms.size() == 2);
    // dot on one circle plus dot on the other, each with coefficient 1
    CHECK(comp.terms.count(1) == 1);
    CHECK(comp.terms.count(2) == 1);
    CHECK(comp.terms.at(1) == Zc(1));
    CHECK(comp.terms.at(2) == Zc(1));
    // e -> e through 1_2: merge then split is delta-ish: also two terms
    Morphism<Zc> comp2 = compose(merge, split);
    CHECK(comp2.terms.size() == 2);
}

TEST_CASE("composition is associative on random small morphisms") {
    test::Rng rng(23);
    auto pool = enumerate_flat_tangles(3, 3);
    for (int trial = 0; trial < 120; ++trial) {
        auto& a = test::random_tangle(rng, pool);
        auto& b = test::random_tangle(rng, pool);
        auto& c = test::random_tangle(rng, pool);
        auto& d = test::random_tangle(rng, pool);
        auto rand_morphism = [&](const FlatTangle& s, const FlatTangle& t) {
            WDecomp w = decompose_w(s, t);
            Morphism<Zc> f{s, t, {}};
            int nterms = test::pick(rng, 1, 2);
            for (int k = 0; k < nterms; ++k) {
                DotMask m = DotMask(test::pick(rng, 0, (1 << w.count) - 1));
                f.terms[m] = Zc(test::pick(rng, -2, 2));
            }
            f.prune();
            return f;
        };
        Morphism<Zc> f = rand_morphism(a, b), g = rand_morphism(b, c), h = rand_morphism(c, d);
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("degree additivity of composition on random homogeneous pairs") {
    test::Rng rng(5);
    auto pool = enumerate_flat_tangles(4, 4);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto& a = test::random_tangle(rng, pool);
        auto& b = test::random_tangle(rng, pool);
        auto& c = test::random_tangle(rng, pool);
        WDecomp wab = decompose_w(a, b);
        WDecomp wbc = decompose_w(b, c);
        DotMask m1 = DotMask(test::pick(rng, 0, (1 << wab.count) - 1));
        DotMask m2 = DotMask(test::pick(rng, 0, (1 << wbc.count) - 1));
        Morphism<Zc> f = basis_morphism<Zc>(a, b, m1);
        Morphism<Zc> g = basis_morphism<Zc>(b, c, m2);
        Morphism<Zc> fg = compose(f, g);
        if (fg.is_zero()) continue;
        CHECK(is_homogeneous(fg));
        CHECK(internal_degree(fg) == internal_degree(f) + internal_degree(g));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("tensor of identities is the identity") {
    for (auto& a : enumerate_flat_tangles(3, 3))
        for (auto& b : enumerate_flat_tangles(3, 3)) {
            GlueResult g = glue(a, b);
            Morphism<Zc> t = tensor_morphism(identity_morphism<Zc>(a), identity_morphism<Zc>(b));
            CHECK(t == identity_morphism<Zc>(g.glued));
        }
}

TEST_CASE("hstack of identities is the identity") {
    for (auto& a : enumerate_flat_tangles(2, 2))
        for (auto& b : enumerate_flat_tangles(3, 3)) {
            Morphism<Zc> t = hstack_morphism(identity_morphism<Zc>(a), identity_morphism<Zc>(b));
            CHECK(t == identity_morphism<Zc>(hstack(a, b)));
        }
}

TEST_CASE("hstack of two saddles has internal degree -2") {
    Morphism<Zc> s = saddle_morphism<Zc>(I2, E2);
    Morphism<Zc> ss = hstack_morphism(s, s);
    CHECK(internal_degree(ss) == -2);
}

TEST_CASE("interchange law for tensor and compose") {
    test::Rng rng(91);
    auto pool = enumerate_flat_tangles(2, 2);
    for (int trial = 0; trial < 150; ++trial) {
        auto& a = test::random_tangle(rng, pool);
        auto& b = test::random_tangle(rng, pool);
        auto& c = test::random_tangle(rng, pool);
        auto& a2 = test::random_tangle(rng, pool);
        auto& b2 = test::random_tangle(rng, pool);
        auto& c2 = test::random_tangle(rng, pool);
        auto rand_basis = [&](const FlatTangle& s, const FlatTangle& t) {
            WDecomp w = decompose_w(s, t);
            return basis_morphism<Zc>(s, t, DotMask(test::pick(rng, 0, (1 << w.count) - 1)));
        };
        // f: a->b, g: b->c (vertical composition), f2: a2->b2, g2: b2->c2
        Morphism<Zc> f = rand_basis(a, b), g = rand_basis(b, c);
        Morphism<Zc> f2 = rand_basis(a2, b2), g2 = rand_basis(b2, c2);
        // (g.f) tensor (g2.f2) == (g tensor g2) . (f tensor f2)
        Morphism<Zc> lhs = tensor_morphism(compose(f, g), compose(f2, g2));
        Morphism<Zc> rhs = compose(tensor_morphism(f, f2), tensor_morphism(g, g2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("interchange law for hstack and compose") {
    test::Rng rng(92);
    auto pool = enumerate_flat_tangles(2, 2);
    for (int trial = 0; trial < 150; ++trial) {
        auto rand_basis = [&](const FlatTangle& s, const FlatTangle& t) {
            WDecomp w = decompose_w(s, t);
            return basis_morphism<Zc>(s, t, DotMask(test::pick(rng, 0, (1 << w.count) - 1)));
        };
        auto& a = test::random_tangle(rng, pool);
        auto& b = test::random_tangle(rng, pool);
        auto& c = test::random_tangle(rng, pool);
        auto& a2 = test::random_tangle(rng, pool);
        auto& b2 = test::random_tangle(rng, pool);
        auto& c2 = test::random_tangle(rng, pool);
        Morphism<Zc> f = rand_basis(a, b), g = rand_basis(b, c);
        Morphism<Zc> f2 = rand_basis(a2, b2), g2 = rand_basis(b2, c2);
        Morphism<Zc> lhs = hstack_morphism(compose(f, g), compose(f2, g2));
        Morphism<Zc> rhs = compose(hstack_morphism(f, f2), hstack_morphism(g, g2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("F2 coefficients behave") {
    Morphism<F2c> split = saddle_morphism<F2c>(I2, E2);
    Morphism<F2c> merge = saddle_morphism<F2c>(E2, I2);
    Morphism<F2c> comp = compose(split, merge);
    CHECK(comp.terms.size() == 2);
    Morphism<F2c> twice = comp + comp;
    CHECK(twice.is_zero());
}
