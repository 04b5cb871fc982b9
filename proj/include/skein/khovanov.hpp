#pragma once

#include <optional>

#include "skein/braid.hpp"
#include "skein/complex.hpp"
#include "skein/reduce.hpp"

namespace skein {

// Degree assignment for the two-object skein cone of a crossing. Pinned by:
// differential entries have internal degree zero (target q = source q + 1),
// R2/R3 hold with zero net shift, the negative crossing is the mirror of the
// positive one, and full-twist stabilization is positively graded.
struct CrossingConvention {
    Degree pos_low{-1, 0};   // identity resolution of a positive crossing
    Degree pos_high{1, 1};   // cup-cap resolution
    Degree neg_low{-1, -1};  // cup-cap resolution of a negative crossing
    Degree neg_high{1, 0};   // identity resolution

    static CrossingConvention standard() { return {}; }
    // Breaks the mirror relation between positive and negative crossings;
    // used as a negative control (R2 must fail).
    static CrossingConvention corrupted() {
        CrossingConvention c;
        c.neg_low.q += 1;
        c.neg_high.q += 1;
        return c;
    }
    bool operator==(const CrossingConvention&) const = default;
};

// The cone complex of one crossing at strand position i (0-based) in width w.
template <class R>
Complex<R> crossing_complex(int w, int i, int sign, const CrossingConvention& conv = {}) {
    FlatTangle idw = identity_tangle(w);
    FlatTangle ei = cupcap_tangle(w, i);
    Complex<R> c;
    if (sign > 0) {
        c.obj.push_back({conv.pos_low, idw});
        c.obj.push_back({conv.pos_high, ei});
        c.diff.emplace(std::pair{0, 1}, saddle_morphism<R>(idw, ei));
    } else {
        c.obj.push_back({conv.neg_low, ei});
        c.obj.push_back({conv.neg_high, idw});
        c.diff.emplace(std::pair{0, 1}, saddle_morphism<R>(ei, idw));
    }
    return c;
}

struct KhOptions {
    CrossingConvention convention{};
    bool eager_eliminate = true;
    PivotOrder order = PivotOrder::forward;
};

// The Khovanov bracket of a sliced tangle diagram: iterated skein cones over
// the slices, every circle delooped eagerly.
template <class R>
Complex<R> kh_bracket(const SlicedTangle& t, const KhOptions& opts = {}) {
    validate_sliced(t);
    Complex<R> c = identity_complex<R>(t.bottom);
    int w = t.bottom;
    for (auto& s : t.slices) {
        switch (s.kind) {
            case Slice::crossing:
                c = tensor(c, crossing_complex<R>(w, s.i, s.sign, opts.convention));
                break;
            case Slice::cap:
                c = tensor(c, one_object_complex<R>(cap_tangle(w, s.i)));
                w -= 2;
                break;
            case Slice::cup:
                c = tensor(c, one_object_complex<R>(cup_tangle(w, s.i)));
                w += 2;
                break;
        }
        c = deloop(c).complex;
        if (opts.eager_eliminate) c = gaussian_eliminate(c, opts.order).complex;
    }
    canonical_sort(c);
    return c;
}

template <class R>
Complex<R> kh_bracket(const BraidWord& w, const KhOptions& opts = {}) {
    validate_braid(w);
    return kh_bracket<R>(from_braid(w), opts);
}

// If C is a one-object complex on 1_n, return the degree of that object.
template <class R>
std::optional<Degree> pure_shift_of_identity(const Complex<R>& c, int n) {
    if (c.size() != 1 || !c.diff.empty()) return std::nullopt;
    if (c.obj[0].tangle != identity_tangle(n)) return std::nullopt;
    return c.obj[0].deg;
}

// The grading shift of one Reidemeister-1 kink: simplify(kh(kink)) must be a
// pure shift of the single strand.
template <class R>
Degree r1_shift(int sign, const KhOptions& opts = {}) {
    Complex<R> c = simplify(kh_bracket<R>(kink(sign), opts), opts.order);
    auto d = pure_shift_of_identity(c, 1);
    require(d.has_value(), "R1 kink did not reduce to a pure shift");
    return *d;
}

}  // namespace skein
