#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "skein/base.hpp"

namespace skein {

// A crossingless tangle with nb boundary points on the bottom edge and nt on
// the top, given by a planar perfect matching. Points are numbered bottom
// left-to-right, then top left-to-right. The planarity check runs along the
// boundary circle (bottom left-to-right, then top right-to-left).
//
// `circles` counts closed components. Normal-form tangles carry none; the
// field is nonzero only transiently inside gluing/tensor machinery, before
// delooping removes the circles at the complex level.
struct FlatTangle {
    int nb = 0;
    int nt = 0;
    std::vector<int> match;
    int circles = 0;

    int points() const { return nb + nt; }
    // Strand count in the cobordism-category sense; boundary has 2n points.
    int n() const { return (nb + nt) / 2; }
    bool is_bottom(int p) const { return p < nb; }

    bool operator==(const FlatTangle&) const = default;
    auto operator<=>(const FlatTangle&) const = default;

    std::string str() const {
        std::string s = "[" + std::to_string(nb) + "|" + std::to_string(nt) + ":";
        for (int p = 0; p < points(); ++p) {
            if (match[p] > p) s += " " + std::to_string(p) + "-" + std::to_string(match[p]);
        }
        if (circles) s += " +" + std::to_string(circles) + "o";
        return s + "]";
    }
};

namespace detail {
// Position of point p along the boundary circle.
inline int circle_pos(const FlatTangle& a, int p) {
    return p < a.nb ? p : a.nb + (a.points() - 1 - p);
}
}  // namespace detail

inline bool is_planar(const FlatTangle& a) {
    const int m = a.points();
    if (m % 2 != 0 || static_cast<int>(a.match.size()) != m) return false;
    for (int p = 0; p < m; ++p) {
        int q = a.match[p];
        if (q < 0 || q >= m || q == p || a.match[q] != p) return false;
    }
    // Chords on the boundary circle must not interleave.
    std::vector<std::pair<int, int>> chords;
    for (int p = 0; p < m; ++p) {
        int q = a.match[p];
        if (q > p) {
            int u = detail::circle_pos(a, p);
            int v = detail::circle_pos(a, q);
            chords.push_back({std::min(u, v), std::max(u, v)});
        }
    }
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            auto [a1, b1] = chords[i];
            auto [a2, b2] = chords[j];
            if (a1 < a2 && a2 < b1 && b1 < b2) return false;
            if (a2 < a1 && a1 < b2 && b2 < b1) return false;
        }
    return true;
}

inline void validate_tangle(const FlatTangle& a) {
    require(a.nb >= 0 && a.nt >= 0 && (a.nb + a.nt) % 2 == 0, "tangle boundary size must be even");
    require(a.circles >= 0, "negative circle count");
    require(is_planar(a), "matching is not a planar perfect pairing");
}

// n parallel strands.
inline FlatTangle identity_tangle(int n) {
    FlatTangle a;
    a.nb = a.nt = n;
    a.match.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        a.match[i] = n + i;
        a.match[n + i] = i;
    }
    return a;
}

// Cup-cap e_i on w strands: bottom points (i, i+1) joined, same on top,
// everything else straight. i is 0-based, 0 <= i <= w-2.
inline FlatTangle cupcap_tangle(int w, int i) {
    require(w >= 2 && i >= 0 && i + 1 < w, "cupcap position out of range");
    FlatTangle a = identity_tangle(w);
    a.match[i] = i + 1;
    a.match[i + 1] = i;
    a.match[w + i] = w + i + 1;
    a.match[w + i + 1] = w + i;
    return a;
}

// Cap joining bottom points (i, i+1): a (w, w-2)-tangle.
inline FlatTangle cap_tangle(int w, int i) {
    require(w >= 2 && i >= 0 && i + 1 < w, "cap position out of range");
    FlatTangle a;
    a.nb = w;
    a.nt = w - 2;
    a.match.assign(2 * w - 2, -1);
    a.match[i] = i + 1;
    a.match[i + 1] = i;
    for (int j = 0; j < w; ++j) {
        if (j == i || j == i + 1) continue;
        int top = w + (j < i ? j : j - 2);
        a.match[j] = top;
        a.match[top] = j;
    }
    return a;
}

// Cup inserting a new matched pair at top positions (i, i+1): a (w, w+2)-tangle.
inline FlatTangle cup_tangle(int w, int i) {
    require(i >= 0 && i <= w, "cup position out of range");
    FlatTangle a;
    a.nb = w;
    a.nt = w + 2;
    a.match.assign(2 * w + 2, -1);
    a.match[w + i] = w + i + 1;
    a.match[w + i + 1] = w + i;
    for (int j = 0; j < w; ++j) {
        int top = w + (j < i ? j : j + 2);
        a.match[j] = top;
        a.match[top] = j;
    }
    return a;
}

// Where each closed circle of a glued tangle came from. Needed so the
// morphism-level tensor can locate the cobordism sheet a circle touches.
struct CircleOrigin {
    enum Kind { from_bottom_factor, from_top_factor, new_middle } kind;
    // circle index in the originating factor, or (for new_middle) the shared
    // interface index i, meaning a's top point i glued to b's bottom point i.
    int index = 0;
};

struct GlueResult {
    FlatTangle glued;
    std::vector<CircleOrigin> origins;  // one per glued.circles, in storage order
};

// Vertical composition: b stacked on top of a (a's top against b's bottom).
inline GlueResult glue(const FlatTangle& a, const FlatTangle& b) {
    require(a.nt == b.nb, "glue: boundary mismatch");
    const int m = a.nt;
    GlueResult r;
    r.glued.nb = a.nb;
    r.glued.nt = b.nt;
    r.glued.match.assign(a.nb + b.nt, -1);

    // Walk from each outer boundary point through the interface.
    // Outer points: 0..a.nb-1 are a's bottom; a.nb..a.nb+b.nt-1 are b's top.
    auto a_point = [&](int outer) { return outer; };            // outer < a.nb
    auto b_point = [&](int outer) { return outer - a.nb + m; };  // outer >= a.nb

    std::vector<char> mid_seen(m, 0);
    for (int start = 0; start < a.nb + b.nt; ++start) {
        if (r.glued.match[start] != -1) continue;
        bool in_a = start < a.nb;
        int p = in_a ? a_point(start) : b_point(start);
        for (;;) {
            p = in_a ? a.match[p] : b.match[p];
            bool exits = in_a ? (p < a.nb) : (p >= b.nb);
            if (exits) {
                int outer = in_a ? p : a.nb + (p - b.nb);
                r.glued.match[start] = outer;
                r.glued.match[outer] = start;
                break;
            }
            // Cross the interface: a's top point (a.nb + i) meets b's bottom i.
            int i = in_a ? p - a.nb : p;
            mid_seen[i] = 1;
            in_a = !in_a;
            p = in_a ? a.nb + i : i;
        }
    }

    // Inherited circles keep factor order: a's, then b's, then new ones.
    for (int i = 0; i < a.circles; ++i) r.origins.push_back({CircleOrigin::from_bottom_factor, i});
    for (int i = 0; i < b.circles; ++i) r.origins.push_back({CircleOrigin::from_top_factor, i});

    // Remaining interface points lie on newly closed circles.
    for (int i = 0; i < m; ++i) {
        if (mid_seen[i]) continue;
        r.origins.push_back({CircleOrigin::new_middle, i});
        // Trace the circle, marking its interface points.
        bool in_a = true;
        int p = a.nb + i;
        for (;;) {
            p = in_a ? a.match[p] : b.match[p];
            int j = in_a ? p - a.nb : p;
            mid_seen[j] = 1;
            if (j == i && !in_a) break;
            in_a = !in_a;
            p = in_a ? a.nb + j : j;
        }
    }
    r.glued.circles = static_cast<int>(r.origins.size());
    return r;
}

// Spec-facing form: composite tangle must be circle-free apart from the
// reported count.
inline std::pair<FlatTangle, int> glue_flat(const FlatTangle& a, const FlatTangle& b) {
    GlueResult r = glue(a, b);
    int c = r.glued.circles;
    FlatTangle t = r.glued;
    t.circles = 0;
    return {t, c};
}

// Horizontal disjoint union: b placed to the right of a.
inline FlatTangle hstack(const FlatTangle& a, const FlatTangle& b) {
    FlatTangle r;
    r.nb = a.nb + b.nb;
    r.nt = a.nt + b.nt;
    r.circles = a.circles + b.circles;
    r.match.assign(r.points(), -1);
    auto map_a = [&](int p) { return p < a.nb ? p : p + b.nb; };
    auto map_b = [&](int p) { return p < b.nb ? p + a.nb : p + a.nb + a.nt; };
    for (int p = 0; p < a.points(); ++p) r.match[map_a(p)] = map_a(a.match[p]);
    for (int p = 0; p < b.points(); ++p) r.match[map_b(p)] = map_b(b.match[p]);
    return r;
}

// Point of the hstack that a's point p becomes / b's point p becomes.
inline int hstack_point_a(const FlatTangle& a, const FlatTangle& b, int p) {
    return p < a.nb ? p : p + b.nb;
}
inline int hstack_point_b(const FlatTangle& a, const FlatTangle& b, int p) {
    return p < b.nb ? p + a.nb : p + a.nb + a.nt;
}

// Number of strands running bottom-to-top; equals n - 2*caps for an
// (n,n)-tangle.
inline int through_strands(const FlatTangle& a) {
    int c = 0;
    for (int p = 0; p < a.nb; ++p)
        if (a.match[p] >= a.nb) ++c;
    return c;
}

// All planar matchings with nb bottom and nt top points (circle-free).
inline std::vector<FlatTangle> enumerate_flat_tangles(int nb, int nt) {
    require((nb + nt) % 2 == 0, "odd boundary");
    const int m = nb + nt;
    std::vector<FlatTangle> out;
    FlatTangle cur;
    cur.nb = nb;
    cur.nt = nt;
    cur.match.assign(m, -1);
    // Work in boundary-circle coordinates where planarity is plain
    // non-crossing nesting.
    std::vector<int> point_at(m);  // circle position -> point id
    for (int p = 0; p < m; ++p) point_at[detail::circle_pos(cur, p)] = p;

    std::vector<int> cmatch(m, -1);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == m) {
            FlatTangle t = cur;
            for (int i = 0; i < m; ++i) t.match[point_at[i]] = point_at[cmatch[i]];
            out.push_back(std::move(t));
            return;
        }
        if (cmatch[pos] != -1) {
            self(self, pos + 1);
            return;
        }
        for (int j = pos + 1; j < m; j += 2) {
            if (cmatch[j] != -1) continue;
            bool free_between = true;
            for (int k = pos + 1; k < j; ++k)
                if (cmatch[k] != -1 && (cmatch[k] < pos || cmatch[k] > j)) free_between = false;
            if (!free_between) continue;
            cmatch[pos] = j;
            cmatch[j] = pos;
            self(self, pos + 1);
            cmatch[pos] = -1;
            cmatch[j] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace skein
