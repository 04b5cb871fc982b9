#include <catch2/catch_amalgamated.hpp>

#include "skein/khovanov.hpp"
#include "test_util.hpp"

using namespace skein;

TEST_CASE("kh of the trivial braid is the identity complex") {
    for (int n = 1; n <= 4; ++n) {
        Complex<Zc> c = kh_bracket<Zc>(BraidWord{n, {}});
        REQUIRE(c.size() == 1);
        CHECK(c.obj[0].tangle == identity_tangle(n));
        CHECK(c.obj[0].deg == Degree{0, 0});
    }
}

TEST_CASE("kh of a single crossing is the two-object skein cone") {
    KhOptions opts;
    opts.eager_eliminate = false;
    Complex<Zc> c = kh_bracket<Zc>(parse_braid("s1", 2), opts);
    REQUIRE(c.size() == 2);
    canonical_sort(c);
    CHECK(c.obj[0].deg == Degree{-1, 0});
    CHECK(c.obj[0].tangle == identity_tangle(2));
    CHECK(c.obj[1].deg == Degree{1, 1});
    CHECK(c.obj[1].tangle == cupcap_tangle(2, 0));
    CHECK(c.diff.size() == 1);
    // t-degrees of a k-crossing bracket live in k/2 + Z
    CHECK(c.obj[0].deg.t_parity() == 1);
}

TEST_CASE("unknot diagram deloops to q + 1/q") {
    SlicedTangle unknot;
    unknot.bottom = 0;
    unknot.slices.push_back({Slice::cup, 0, 0});
    unknot.slices.push_back({Slice::cap, 0, 0});
    Complex<Zc> c = kh_bracket<Zc>(unknot);
    REQUIRE(c.size() == 2);
    canonical_sort(c);
    CHECK(c.obj[0].deg == Degree{0, -1});
    CHECK(c.obj[1].deg == Degree{0, +1});
    CHECK(c.obj[0].tangle.points() == 0);
    CHECK(c.diff.empty());

    EulerChar e = euler_char(c);
    REQUIRE(e.terms.size() == 1);
    auto& poly = e.terms.begin()->second;
    CHECK(poly == std::map<int, long long>{{-1, 1}, {1, 1}});
}

TEST_CASE("R1: each kink is a pure shift and the two signs cancel") {
    Degree pos = r1_shift<Zc>(+1);
    Degree neg = r1_shift<Zc>(-1);
    CHECK(pos + neg == Degree{0, 0});
    CHECK(pos == Degree{-1, -1});  // t = -1/2, q = -1
    CHECK(neg == Degree{+1, +1});
}

TEST_CASE("R2 reduces to the identity with zero net shift for all generators, n <= 4") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i < n; ++i) {
            for (auto& word : {std::vector<int>{i, -i}, std::vector<int>{-i, i}}) {
                Complex<Zc> c = simplify(kh_bracket<Zc>(BraidWord{n, word}));
                REQUIRE(c.size() == 1);
                CHECK(c.obj[0].tangle == identity_tangle(n));
                CHECK(c.obj[0].deg == Degree{0, 0});
            }
        }
}

TEST_CASE("R2 fails under a corrupted crossing convention (negative control)") {
    KhOptions opts;
    opts.convention = CrossingConvention::corrupted();
    Complex<Zc> c = simplify(kh_bracket<Zc>(parse_braid("s1 s1^-1", 2), opts));
    REQUIRE(c.size() == 1);
    CHECK(c.obj[0].deg != Degree{0, 0});
}

TEST_CASE("kh is multiplicative under tensor") {
    BraidWord u = parse_braid("s1", 2);
    BraidWord v = parse_braid("s1^-1", 2);
    Complex<Zc> joint = kh_bracket<Zc>(u * v);
    Complex<Zc> split = simplify(tensor(kh_bracket<Zc>(u), kh_bracket<Zc>(v)));
    Complex<Zc> js = simplify(joint);
    canonical_sort(js);
    CHECK(js.obj == split.obj);
}

TEST_CASE("kh respects t-parity of the crossing count") {
    test::Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = test::pick(rng, 2, 3);
        BraidWord w{n, {}};
        int len = test::pick(rng, 1, 5);
        for (int k = 0; k < len; ++k)
            w.letters.push_back((test::pick(rng, 0, 1) ? 1 : -1) * test::pick(rng, 1, n - 1));
        Complex<Zc> c = kh_bracket<Zc>(w);
        for (auto& o : c.obj) CHECK(o.deg.t_parity() == len % 2);
    }
}

TEST_CASE("trace closure of one positive crossing is the kinked unknot") {
    Complex<Zc> c = kh_bracket<Zc>(trace_closure(parse_braid("s1", 2)));
    REQUIRE(c.size() == 2);
    canonical_sort(c);
    // R1 shift (-1/2, -1) applied to q + 1/q: objects at q in {-2, 0}
    CHECK(c.obj[0].deg == Degree{-1, -2});
    CHECK(c.obj[1].deg == Degree{-1, 0});
}
