#include <catch2/catch_amalgamated.hpp>

#include "skein/homsolve.hpp"
#include "skein/khovanov.hpp"
#include "test_util.hpp"

using namespace skein;

TEST_CASE("nullhomotopy of the zero map is zero") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1", 2));
    NullhomotopyResult<Zc> r = nullhomotopy(c, c, {});
    CHECK(r.cert == Cert::yes);
    CHECK(r.homotopy.empty());
}

TEST_CASE("identity on a contractible complex is nullhomotopic") {
    // cone(id) on the one-crossing complex
    Complex<Zc> c = crossing_complex<Zc>(2, 0, +1);
    ChainMap<Zc> idm;
    idm.src = &c;
    idm.tgt = &c;
    for (int i = 0; i < c.size(); ++i) idm.add(i, i, identity_morphism<Zc>(c.obj[i].tangle));
    Complex<Zc> cn = cone(idm);
    EntryMap<Zc> f;
    for (int i = 0; i < cn.size(); ++i)
        detail::entry_map_add(f, i, i, identity_morphism<Zc>(cn.obj[i].tangle));
    NullhomotopyResult<Zc> r = nullhomotopy(cn, cn, f);
    CHECK(r.cert == Cert::yes);
    // verify h d + d h = f
    EntryMap<Zc> lhs;
    for (auto& [ij, h] : r.homotopy)
        for (auto& [jk, d] : cn.diff)
            if (jk.first == ij.second) detail::entry_map_add(lhs, ij.first, jk.second, compose(h, d));
    for (auto& [ij, d] : cn.diff)
        for (auto& [jk, h] : r.homotopy)
            if (jk.first == ij.second) detail::entry_map_add(lhs, ij.first, jk.second, compose(d, h));
    for (auto& [ij, m] : f) detail::entry_map_add(lhs, ij.first, ij.second, -m);
    CHECK(lhs.empty());
}

TEST_CASE("identity on 1_n admits no nullhomotopy") {
    Complex<Zc> c = identity_complex<Zc>(2);
    EntryMap<Zc> f;
    detail::entry_map_add(f, 0, 0, identity_morphism<Zc>(c.obj[0].tangle));
    CHECK(nullhomotopy(c, c, f).cert != Cert::yes);
    Complex<Qc> cq = identity_complex<Qc>(2);
    EntryMap<Qc> fq;
    detail::entry_map_add(fq, 0, 0, identity_morphism<Qc>(cq.obj[0].tangle));
    CHECK(nullhomotopy(cq, cq, fq).cert == Cert::no);  // definitive over a field
}

TEST_CASE("equivalent: reflexive, detects R3, refuses distinct tangles") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1 s2 s1", 3));
    CHECK(equivalent(c, c).cert == Cert::yes);

    Complex<Zc> d = kh_bracket<Zc>(parse_braid("s2 s1 s2", 3));
    EquivalenceResult<Zc> r3 = equivalent(c, d);
    CHECK(r3.cert == Cert::yes);

    Complex<Zc> i2 = identity_complex<Zc>(2);
    Complex<Zc> e2 = one_object_complex<Zc>(cupcap_tangle(2, 0));
    CHECK(equivalent(i2, e2).cert == Cert::no);
}

TEST_CASE("equivalent witness is a chain map with invertible heads") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1 s2 s1", 3));
    Complex<Zc> d = kh_bracket<Zc>(parse_braid("s2 s1 s2", 3));
    EquivalenceResult<Zc> r = equivalent(c, d);
    REQUIRE(r.cert == Cert::yes);
    ChainMap<Zc> g{&r.reduced_a, &r.reduced_b, 0, r.witness};
    CHECK(is_chain_map(g));
}

TEST_CASE("equivalence distinguishes nonzero shifts") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1 s1", 2));
    CHECK(equivalent(c, shift(c, Degree{2, 0})).cert != Cert::yes);
    CHECK(equivalent(c, shift(c, Degree{0, 1})).cert != Cert::yes);
}

TEST_CASE("cone of a chain map is contractible iff the map is an equivalence (small, over Q)") {
    // f = id : C -> C gives a contractible cone; f = 0 does not (C nonempty)
    Complex<Qc> c = kh_bracket<Qc>(parse_braid("s1", 2));
    ChainMap<Qc> idm{&c, &c, 0, {}};
    for (int i = 0; i < c.size(); ++i) idm.add(i, i, identity_morphism<Qc>(c.obj[i].tangle));
    CHECK(is_contractible(cone(idm)) == Cert::yes);
    ChainMap<Qc> zero{&c, &c, 0, {}};
    CHECK(is_contractible(cone(zero)) == Cert::no);
}

TEST_CASE("equivalent_up_to_shift finds the exact power") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1 s1", 2));
    Degree gen{2, 3};
    ShiftEquivalence<Zc> r0 = equivalent_up_to_shift(c, c, gen);
    REQUIRE(r0.found);
    CHECK(r0.j == 0);
    ShiftEquivalence<Zc> r2 = equivalent_up_to_shift(shift(c, gen * 2), c, gen);
    REQUIRE(r2.found);
    CHECK(r2.j == 2);
    ShiftEquivalence<Zc> rm = equivalent_up_to_shift(c, shift(c, gen), gen);
    REQUIRE(rm.found);
    CHECK(rm.j == -1);
    // misaligned shift: no candidate
    ShiftEquivalence<Zc> none = equivalent_up_to_shift(shift(c, Degree{1, 0}), c, gen);
    CHECK_FALSE(none.found);
}

TEST_CASE("markov-style sanity: conjugate closures are equivalent") {
    test::Rng rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        BraidWord w{3, {}};
        for (int k = 0; k < test::pick(rng, 1, 4); ++k)
            w.letters.push_back((test::pick(rng, 0, 1) ? 1 : -1) * test::pick(rng, 1, 2));
        BraidWord g{3, {test::pick(rng, 1, 2)}};
        BraidWord conj = g * w * g.inverse();
        Complex<Zc> a = kh_bracket<Zc>(trace_closure(w));
        Complex<Zc> b = kh_bracket<Zc>(trace_closure(conj));
        CHECK(equivalent(a, b).cert == Cert::yes);
    }
}
