#include <catch2/catch_amalgamated.hpp>

#include "skein/khovanov.hpp"
#include "skein/reduce.hpp"
#include "test_util.hpp"

using namespace skein;

TEST_CASE("identity complex is valid") {
    Complex<Zc> c = identity_complex<Zc>(3);
    CHECK(check_complex(c).ok);
}

TEST_CASE("one-crossing cone is valid and a corrupted differential is reported") {
    Complex<Zc> c = crossing_complex<Zc>(2, 0, +1);
    CHECK(check_complex(c).ok);
    // corrupt: break internal degree by moving the target q
    Complex<Zc> bad = c;
    bad.obj[1].deg.q += 1;
    CHECK_FALSE(check_complex(bad).ok);
}

TEST_CASE("shift is a group action and euler_char transforms by sign and monomial") {
    Complex<Zc> c = crossing_complex<Zc>(2, 0, +1);
    CHECK(shift(c, Degree{0, 0}).obj == c.obj);
    Complex<Zc> s1 = shift(shift(c, Degree{2, 1}), Degree{4, -3});
    Complex<Zc> s2 = shift(c, Degree{6, -2});
    CHECK(s1.obj == s2.obj);

    EulerChar e = euler_char(c);
    EulerChar es = euler_char(shift(c, Degree{2, 2}));  // t+1, q+2
    // shifting by t^1 q^2 negates and multiplies by q^2
    EulerChar expect;
    expect.t_parity = e.t_parity;
    for (auto& [t, poly] : e.terms)
        for (auto& [ex, cf] : poly) expect.add(t, ex + 2, -cf);
    CHECK(es == expect);
}

TEST_CASE("cone of zero map splits; cone of identity is contractible") {
    Complex<Zc> c = crossing_complex<Zc>(2, 0, +1);
    ChainMap<Zc> z;
    z.src = &c;
    z.tgt = &c;
    Complex<Zc> cz = cone(z);
    CHECK(check_complex(cz).ok);
    CHECK(cz.size() == 2 * c.size());

    ChainMap<Zc> idm;
    idm.src = &c;
    idm.tgt = &c;
    for (int i = 0; i < c.size(); ++i) idm.add(i, i, identity_morphism<Zc>(c.obj[i].tangle));
    CHECK(is_chain_map(idm));
    Complex<Zc> ci = cone(idm);
    CHECK(check_complex(ci).ok);
    CHECK(simplify(ci).empty());
}

TEST_CASE("tensor with the identity complex is neutral") {
    Complex<Zc> c = crossing_complex<Zc>(3, 1, -1);
    Complex<Zc> t = tensor(c, identity_complex<Zc>(3));
    canonical_sort(c);
    canonical_sort(t);
    CHECK(t.obj == c.obj);
    CHECK(t.diff.size() == c.diff.size());
}

TEST_CASE("tensor of two crossing complexes has four objects and is valid") {
    Complex<Zc> a = crossing_complex<Zc>(2, 0, +1);
    Complex<Zc> b = crossing_complex<Zc>(2, 0, -1);
    Complex<Zc> t = tensor(a, b);
    CHECK(t.size() == 4);
    Diagnostic d = check_complex(t);
    // the HH object carries an undelooped circle, reported but d^2 still holds
    Complex<Zc> dl = deloop(t).complex;
    CHECK(check_complex(dl).ok);
    CHECK(dl.size() == 5);
}

TEST_CASE("deloop: one circle becomes q-shifted pair, double circle becomes four objects") {
    FlatTangle circ;
    circ.circles = 1;
    Complex<Zc> c = one_object_complex<Zc>(circ, Degree{0, 0});
    Complex<Zc> d = deloop(c).complex;
    REQUIRE(d.size() == 2);
    canonical_sort(d);
    CHECK(d.obj[0].deg == Degree{0, -1});
    CHECK(d.obj[1].deg == Degree{0, +1});
    CHECK(d.diff.empty());

    FlatTangle two;
    two.circles = 2;
    Complex<Zc> c2 = one_object_complex<Zc>(two, Degree{0, 0});
    Complex<Zc> d2 = deloop(c2).complex;
    REQUIRE(d2.size() == 4);
    canonical_sort(d2);
    CHECK(d2.obj[0].deg.q == -2);
    CHECK(d2.obj[1].deg.q == 0);
    CHECK(d2.obj[2].deg.q == 0);
    CHECK(d2.obj[3].deg.q == 2);

    Complex<Zc> free = identity_complex<Zc>(2);
    CHECK(deloop(free).complex.obj == free.obj);
}

TEST_CASE("deloop witnesses form a strict isomorphism") {
    Complex<Zc> t = tensor(crossing_complex<Zc>(2, 0, +1), crossing_complex<Zc>(2, 0, -1));
    ReductionResult<Zc> rr = deloop(t, true);
    // proj . incl = id on the delooped side; incl . proj = id on the original
    EntryMap<Zc> pi = detail::entry_map_compose(rr.incl, rr.proj);
    for (int i = 0; i < rr.complex.size(); ++i) {
        auto it = pi.find({i, i});
        REQUIRE(it != pi.end());
        CHECK(it->second == identity_morphism<Zc>(rr.complex.obj[i].tangle));
        pi.erase(it);
    }
    CHECK(pi.empty());
    EntryMap<Zc> ip = detail::entry_map_compose(rr.proj, rr.incl);
    for (int i = 0; i < t.size(); ++i) {
        auto it = ip.find({i, i});
        REQUIRE(it != ip.end());
        CHECK(it->second == identity_morphism<Zc>(t.obj[i].tangle));
        ip.erase(it);
    }
    CHECK(ip.empty());
}

TEST_CASE("gaussian elimination: cone(id) vanishes, R2 complex reduces to 1_2 at zero") {
    // R2: positive then negative crossing
    Complex<Zc> a = crossing_complex<Zc>(2, 0, +1);
    Complex<Zc> b = crossing_complex<Zc>(2, 0, -1);
    Complex<Zc> t = simplify(tensor(a, b));
    REQUIRE(t.size() == 1);
    CHECK(t.obj[0].tangle == identity_tangle(2));
    CHECK(t.obj[0].deg == Degree{0, 0});
    CHECK(t.diff.empty());
}

TEST_CASE("gaussian elimination leaves non-unit pivots alone over Z") {
    // x --2*id--> y is reduced over Z
    FlatTangle i2 = identity_tangle(2);
    Complex<Zc> c;
    c.obj.push_back({Degree{0, 0}, i2});
    c.obj.push_back({Degree{2, 0}, i2});
    c.diff.emplace(std::pair{0, 1}, basis_morphism<Zc>(i2, i2, 0, Zc(2)));
    Complex<Zc> r = gaussian_eliminate(c).complex;
    CHECK(r.size() == 2);
    CHECK(is_reduced(r));
    // same complex over Q collapses
    Complex<Qc> cq;
    cq.obj = c.obj;
    cq.diff.emplace(std::pair{0, 1}, basis_morphism<Qc>(i2, i2, 0, Qc(2)));
    CHECK(gaussian_eliminate(cq).complex.empty());
}

TEST_CASE("gaussian elimination witnesses satisfy the deformation-retract identities") {
    Complex<Zc> t = deloop(tensor(crossing_complex<Zc>(2, 0, +1), crossing_complex<Zc>(2, 0, -1))).complex;
    ReductionResult<Zc> rr = gaussian_eliminate(t, PivotOrder::forward, true);
    REQUIRE(rr.complex.size() == 1);

    // proj and incl are chain maps
    ChainMap<Zc> p{&t, &rr.complex, 0, rr.proj};
    ChainMap<Zc> i{&rr.complex, &t, 0, rr.incl};
    CHECK(is_chain_map(p));
    CHECK(is_chain_map(i));

    // proj . incl = id_reduced
    EntryMap<Zc> pi = detail::entry_map_compose(rr.incl, rr.proj);
    REQUIRE(pi.size() == 1);
    CHECK(pi.begin()->second == identity_morphism<Zc>(rr.complex.obj[0].tangle));

    // id - incl.proj = d h + h d on the original
    EntryMap<Zc> ip = detail::entry_map_compose(rr.proj, rr.incl);
    EntryMap<Zc> rhs;
    for (auto& [ij, m] : rr.htpy)
        for (auto& [jk, d] : t.diff)
            if (jk.first == ij.second) detail::entry_map_add(rhs, ij.first, jk.second, compose(m, d));
    for (auto& [ij, d] : t.diff)
        for (auto& [jk, m] : rr.htpy)
            if (jk.first == ij.second) detail::entry_map_add(rhs, ij.first, jk.second, compose(d, m));
    // rhs should equal id - ip
    for (int k = 0; k < t.size(); ++k)
        detail::entry_map_add(rhs, k, k, -identity_morphism<Zc>(t.obj[k].tangle));
    for (auto& [ij, m] : ip) detail::entry_map_add(rhs, ij.first, ij.second, m);
    CHECK(rhs.empty());
}

TEST_CASE("euler characteristic is invariant under deloop, elimination and simplify") {
    test::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = test::pick(rng, 2, 3);
        BraidWord w{n, {}};
        int len = test::pick(rng, 1, 5);
        for (int k = 0; k < len; ++k) {
            int i = test::pick(rng, 1, n - 1);
            w.letters.push_back(test::pick(rng, 0, 1) ? i : -i);
        }
        KhOptions opts;
        opts.eager_eliminate = false;
        Complex<Zc> c = kh_bracket<Zc>(w, opts);
        EulerChar before = euler_char(c);
        CHECK(euler_char(deloop(c).complex) == before);
        CHECK(euler_char(gaussian_eliminate(c).complex) == before);
        CHECK(euler_char(simplify(c)) == before);
        CHECK(euler_char(simplify(c, PivotOrder::reverse)) == before);
    }
}

TEST_CASE("window algebra for tensor") {
    Complex<Zc> a = identity_complex<Zc>(2);
    a.window = Window::band(0, 16);  // [0, 8] in t
    Complex<Zc> b = identity_complex<Zc>(2);
    b.window = Window::band(0, 12);  // [0, 6]
    Complex<Zc> t = tensor(a, b);
    CHECK(t.window.lo2 == 0);
    CHECK(t.window.hi2 == 12);  // min(0+6, 0+8) doubled
    // exact times truncated: bounded by t_base of the exact factor
    Complex<Zc> e = crossing_complex<Zc>(2, 0, +1);  // objects at -1/2, 1/2
    Complex<Zc> t2 = tensor(e, b);
    CHECK(t2.window.hi2 == -1 + 12);
    CHECK(t2.window.lo2 == Window::neg_inf);
}

TEST_CASE("truncate drops objects outside the window") {
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1 s1 s1", 2));
    Complex<Zc> tr = truncate(c, Window::band(0, 2));
    for (auto& o : tr.obj) CHECK((o.deg.t2 >= 0 && o.deg.t2 <= 2));
    CHECK(check_complex(tr).ok);
}
