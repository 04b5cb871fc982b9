#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "skein/ring.hpp"
#include "skein/tangle.hpp"

namespace skein {

// Morphisms of the dotted cobordism category, in Frobenius normal form for
// A = R[X]/(X^2): a basis cobordism between tangles a, b is a union of disks,
// one per circle of the closed 1-manifold W(a,b) obtained by gluing a to the
// reflection of b, each disk carrying at most one dot. A morphism is an
// R-linear combination of dot subsets, encoded as bitmasks over the circles
// of W(a,b).
//
// Circle indexing of W(a,b): components made of arcs first, ordered by their
// minimal contained point; then the closed circles of a; then those of b.

struct WDecomp {
    int count = 0;      // total circles of W(a,b)
    int arc_comps = 0;  // circles made of arcs
    std::vector<int> comp_of_point;
    std::vector<int> min_point;  // per arc component
    int src_circles = 0;

    int of_src_circle(int i) const { return arc_comps + i; }
    int of_tgt_circle(int i) const { return arc_comps + src_circles + i; }
};

inline WDecomp decompose_w(const FlatTangle& a, const FlatTangle& b) {
    require(a.nb == b.nb && a.nt == b.nt, "W(a,b): boundary mismatch");
    const int m = a.points();
    WDecomp w;
    w.comp_of_point.assign(m, -1);
    for (int start = 0; start < m; ++start) {
        if (w.comp_of_point[start] != -1) continue;
        int id = w.arc_comps++;
        w.min_point.push_back(start);
        int p = start;
        bool use_a = true;
        do {
            w.comp_of_point[p] = id;
            p = use_a ? a.match[p] : b.match[p];
            w.comp_of_point[p] = id;
            p = use_a ? b.match[p] : a.match[p];
            use_a = use_a;  // alternation is baked into the two steps above
        } while (p != start);
    }
    w.src_circles = a.circles;
    w.count = w.arc_comps + a.circles + b.circles;
    return w;
}

using DotMask = std::uint32_t;

template <class R>
struct Morphism {
    FlatTangle src, tgt;
    std::map<DotMask, R> terms;

    bool is_zero() const { return terms.empty(); }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();) {
            if (ring_traits<R>::is_zero(it->second))
                it = terms.erase(it);
            else
                ++it;
        }
    }

    Morphism& operator+=(const Morphism& o) {
        require(src == o.src && tgt == o.tgt, "morphism sum: endpoint mismatch");
        for (auto& [m, c] : o.terms) {
            auto [it, fresh] = terms.try_emplace(m, c);
            if (!fresh) it->second += c;
        }
        prune();
        return *this;
    }
    Morphism operator+(const Morphism& o) const {
        Morphism r = *this;
        r += o;
        return r;
    }
    Morphism operator-() const {
        Morphism r = *this;
        for (auto& [m, c] : r.terms) c = -c;
        return r;
    }
    Morphism operator-(const Morphism& o) const { return *this + (-o); }
    Morphism operator*(R s) const {
        Morphism r = *this;
        for (auto& [m, c] : r.terms) c = c * s;
        r.prune();
        return r;
    }
    bool operator==(const Morphism& o) const { return src == o.src && tgt == o.tgt && terms == o.terms; }
};

template <class R>
Morphism<R> zero_morphism(const FlatTangle& a, const FlatTangle& b) {
    return Morphism<R>{a, b, {}};
}

template <class R>
Morphism<R> basis_morphism(const FlatTangle& a, const FlatTangle& b, DotMask dots, R coeff = R(1)) {
    Morphism<R> f{a, b, {}};
    if (!ring_traits<R>::is_zero(coeff)) f.terms[dots] = coeff;
    return f;
}

// Identity of a tangle, circles included. A closed circle persists as an
// annulus, which neck-cuts to (1 x X) + (X x 1) on the (source, target)
// circle pair; arc components carry plain undotted sheets.
template <class R>
Morphism<R> identity_morphism(const FlatTangle& a) {
    WDecomp w = decompose_w(a, a);
    Morphism<R> f{a, a, {}};
    std::vector<DotMask> masks{0};
    for (int i = 0; i < a.circles; ++i) {
        std::vector<DotMask> next;
        next.reserve(masks.size() * 2);
        for (DotMask m : masks) {
            next.push_back(m | (DotMask(1) << w.of_src_circle(i)));
            next.push_back(m | (DotMask(1) << w.of_tgt_circle(i)));
        }
        masks = std::move(next);
    }
    for (DotMask m : masks) f.terms[m] = R(1);
    return f;
}

// Internal degree (c - 2|dots|) - n of a basis element of Hom(a,b).
inline int basis_internal_degree(const FlatTangle& a, const FlatTangle& b, const WDecomp& w, DotMask dots) {
    return w.count - 2 * __builtin_popcount(dots) - a.n();
}

// Internal degree of a homogeneous morphism; throws on inhomogeneous input.
template <class R>
int internal_degree(const Morphism<R>& f) {
    require(!f.terms.empty(), "internal degree of the zero morphism is undefined");
    WDecomp w = decompose_w(f.src, f.tgt);
    int d = basis_internal_degree(f.src, f.tgt, w, f.terms.begin()->first);
    for (auto& [m, c] : f.terms)
        require(basis_internal_degree(f.src, f.tgt, w, m) == d, "inhomogeneous morphism");
    return d;
}

template <class R>
bool is_homogeneous(const Morphism<R>& f) {
    if (f.terms.size() <= 1) return true;
    WDecomp w = decompose_w(f.src, f.tgt);
    int d = basis_internal_degree(f.src, f.tgt, w, f.terms.begin()->first);
    for (auto& [m, c] : f.terms)
        if (basis_internal_degree(f.src, f.tgt, w, m) != d) return false;
    return true;
}

namespace detail {

// A binary operation on morphisms glues the two cobordisms along arcs
// (chi drops by one per arc) and along closed circles (chi unchanged).
// Vertices are the disks of both operands; the result is evaluated
// component-by-component in R[X]/(X^2).
struct GluePlan {
    int nf = 0;  // f's disk count; g's disks follow
    int ng = 0;
    std::vector<std::pair<int, int>> arc_edges;
    std::vector<std::pair<int, int>> circle_edges;
    std::vector<int> boundary_vertex;  // result W-circle -> any incident vertex
};

struct GlueComponents {
    std::vector<int> comp_of_vertex;
    // per component
    std::vector<int> chi;
    std::vector<std::vector<int>> boundary;  // result circle ids
    std::vector<std::vector<int>> members;   // vertex ids
};

inline GlueComponents analyze(const GluePlan& plan) {
    const int nv = plan.nf + plan.ng;
    Dsu dsu(nv);
    for (auto [u, v] : plan.arc_edges) dsu.unite(u, v);
    for (auto [u, v] : plan.circle_edges) dsu.unite(u, v);

    GlueComponents out;
    out.comp_of_vertex.assign(nv, -1);
    std::vector<int> comp_of_root(nv, -1);
    for (int v = 0; v < nv; ++v) {
        int r = dsu.find(v);
        if (comp_of_root[r] == -1) {
            comp_of_root[r] = static_cast<int>(out.chi.size());
            out.chi.push_back(0);
            out.boundary.emplace_back();
            out.members.emplace_back();
        }
        out.comp_of_vertex[v] = comp_of_root[r];
        out.chi[comp_of_root[r]] += 1;  // each disk contributes chi = 1
        out.members[comp_of_root[r]].push_back(v);
    }
    for (auto [u, v] : plan.arc_edges) out.chi[out.comp_of_vertex[u]] -= 1;
    for (size_t c = 0; c < plan.boundary_vertex.size(); ++c)
        out.boundary[out.comp_of_vertex[plan.boundary_vertex[c]]].push_back(static_cast<int>(c));
    return out;
}

// Evaluate one pair of basis terms against an analyzed plan. Appends
// (mask, coeff) results into `acc`.
template <class R>
void evaluate_pair(const GlueComponents& gc, const GluePlan& plan, DotMask fmask, DotMask gmask, R coeff,
                   std::map<DotMask, R>& acc) {
    const size_t ncomp = gc.chi.size();
    std::vector<int> dots(ncomp, 0);
    for (int v = 0; v < plan.nf + plan.ng; ++v) {
        bool dotted = v < plan.nf ? ((fmask >> v) & 1) : ((gmask >> (v - plan.nf)) & 1);
        if (dotted) dots[gc.comp_of_vertex[v]] += 1;
    }

    // Partial results: masks over the result circles with coefficients.
    std::vector<std::pair<DotMask, R>> partial{{0, coeff}};
    for (size_t c = 0; c < ncomp; ++c) {
        int k = static_cast<int>(gc.boundary[c].size());
        int chi = gc.chi[c];
        int genus2 = 2 - k - chi;  // = 2g
        require(genus2 >= 0 && genus2 % 2 == 0, "glue: bad component genus");
        int g = genus2 / 2;
        int m = g + dots[c];
        if (m >= 2) return;  // X^2 = 0 kills the whole pair
        if (k == 0) {
            // closed component: eps((2X)^g X^d), nonzero only for m == 1
            if (m != 1) return;
            if (g == 1)
                for (auto& [mask, cf] : partial) cf = cf + cf;
            continue;
        }
        if (m == 1) {
            DotMask all = 0;
            for (int circ : gc.boundary[c]) all |= DotMask(1) << circ;
            for (auto& [mask, cf] : partial) {
                mask |= all;
                if (g == 1) cf = cf + cf;
            }
        } else {
            // m == 0: comultiplication of 1; one boundary circle stays
            // undotted, the rest get the dot.
            DotMask all = 0;
            for (int circ : gc.boundary[c]) all |= DotMask(1) << circ;
            std::vector<std::pair<DotMask, R>> next;
            next.reserve(partial.size() * gc.boundary[c].size());
            for (auto& [mask, cf] : partial)
                for (int undotted : gc.boundary[c])
                    next.push_back({mask | (all & ~(DotMask(1) << undotted)), cf});
            partial = std::move(next);
        }
    }
    for (auto& [mask, cf] : partial) {
        auto [it, fresh] = acc.try_emplace(mask, cf);
        if (!fresh) it->second += cf;
    }
}

template <class R>
Morphism<R> run_plan(const GluePlan& plan, const FlatTangle& rsrc, const FlatTangle& rtgt, const Morphism<R>& f,
                     const Morphism<R>& g) {
    GlueComponents gc = analyze(plan);
    Morphism<R> out{rsrc, rtgt, {}};
    for (auto& [fm, fc] : f.terms)
        for (auto& [gm, gc2] : g.terms) evaluate_pair(gc, plan, fm, gm, fc * gc2, out.terms);
    out.prune();
    return out;
}

}  // namespace detail

// g after f: both cobordisms stacked along the shared middle tangle.
template <class R>
Morphism<R> compose(const Morphism<R>& f, const Morphism<R>& g) {
    require(f.tgt == g.src, "compose: middle tangle mismatch");
    const FlatTangle& a = f.src;
    const FlatTangle& b = f.tgt;
    const FlatTangle& c = g.tgt;
    WDecomp wab = decompose_w(a, b);
    WDecomp wbc = decompose_w(b, c);
    WDecomp wac = decompose_w(a, c);

    detail::GluePlan plan;
    plan.nf = wab.count;
    plan.ng = wbc.count;
    for (int p = 0; p < b.points(); ++p) {
        if (b.match[p] <= p) continue;  // one edge per arc of b
        plan.arc_edges.push_back({wab.comp_of_point[p], plan.nf + wbc.comp_of_point[p]});
    }
    for (int i = 0; i < b.circles; ++i)
        plan.circle_edges.push_back({wab.of_tgt_circle(i), plan.nf + wbc.of_src_circle(i)});

    plan.boundary_vertex.resize(wac.count);
    for (int i = 0; i < wac.arc_comps; ++i)
        plan.boundary_vertex[i] = wab.comp_of_point[wac.min_point[i]];
    for (int i = 0; i < a.circles; ++i)
        plan.boundary_vertex[wac.of_src_circle(i)] = wab.of_src_circle(i);
    for (int i = 0; i < c.circles; ++i)
        plan.boundary_vertex[wac.of_tgt_circle(i)] = plan.nf + wbc.of_tgt_circle(i);

    return detail::run_plan(plan, a, c, f, g);
}

// Vertical gluing: g's tangles stacked on top of f's.
// f : A -> B, g : C -> D with A.nt == C.nb gives glue(A,C) -> glue(B,D).
template <class R>
Morphism<R> tensor_morphism(const Morphism<R>& f, const Morphism<R>& g) {
    const FlatTangle& a = f.src;
    const FlatTangle& b = f.tgt;
    const FlatTangle& c = g.src;
    const FlatTangle& d = g.tgt;
    require(a.nt == c.nb, "tensor: boundary mismatch");
    GlueResult gs = glue(a, c);
    GlueResult gt = glue(b, d);
    WDecomp wab = decompose_w(a, b);
    WDecomp wcd = decompose_w(c, d);
    WDecomp wres = decompose_w(gs.glued, gt.glued);

    detail::GluePlan plan;
    plan.nf = wab.count;
    plan.ng = wcd.count;
    for (int i = 0; i < a.nt; ++i)
        plan.arc_edges.push_back({wab.comp_of_point[a.nb + i], plan.nf + wcd.comp_of_point[i]});

    plan.boundary_vertex.resize(wres.count);
    for (int i = 0; i < wres.arc_comps; ++i) {
        int p = wres.min_point[i];
        if (p < gs.glued.nb)
            plan.boundary_vertex[i] = wab.comp_of_point[p];  // a's bottom point p
        else
            plan.boundary_vertex[i] = plan.nf + wcd.comp_of_point[c.nb + (p - gs.glued.nb)];
    }
    auto origin_vertex = [&](const CircleOrigin& o, const WDecomp& wtop, const WDecomp& wbot, const FlatTangle& top_a,
                             bool target_side) -> int {
        // top_a: the first factor of the glue (a for the source, b for the target).
        switch (o.kind) {
            case CircleOrigin::from_bottom_factor:
                return target_side ? wtop.of_tgt_circle(o.index) : wtop.of_src_circle(o.index);
            case CircleOrigin::from_top_factor:
                return plan.nf + (target_side ? wbot.of_tgt_circle(o.index) : wbot.of_src_circle(o.index));
            case CircleOrigin::new_middle:
                return wtop.comp_of_point[top_a.nb + o.index];
        }
        throw error("unreachable");
    };
    for (int i = 0; i < gs.glued.circles; ++i)
        plan.boundary_vertex[wres.of_src_circle(i)] = origin_vertex(gs.origins[i], wab, wcd, a, false);
    for (int i = 0; i < gt.glued.circles; ++i)
        plan.boundary_vertex[wres.of_tgt_circle(i)] = origin_vertex(gt.origins[i], wab, wcd, b, true);

    return detail::run_plan(plan, gs.glued, gt.glued, f, g);
}

// Horizontal disjoint union; no gluing happens, so this is a relabeling.
template <class R>
Morphism<R> hstack_morphism(const Morphism<R>& f, const Morphism<R>& g) {
    const FlatTangle& a = f.src;
    const FlatTangle& b = f.tgt;
    const FlatTangle& c = g.src;
    const FlatTangle& d = g.tgt;
    FlatTangle rs = hstack(a, c);
    FlatTangle rt = hstack(b, d);
    WDecomp wab = decompose_w(a, b);
    WDecomp wcd = decompose_w(c, d);
    WDecomp wres = decompose_w(rs, rt);

    // Old circle id -> new circle id.
    std::vector<int> fmap(wab.count), gmap(wcd.count);
    for (int i = 0; i < wab.arc_comps; ++i)
        fmap[i] = wres.comp_of_point[hstack_point_a(a, c, wab.min_point[i])];
    for (int i = 0; i < a.circles; ++i) fmap[wab.of_src_circle(i)] = wres.of_src_circle(i);
    for (int i = 0; i < b.circles; ++i) fmap[wab.of_tgt_circle(i)] = wres.of_tgt_circle(i);
    for (int i = 0; i < wcd.arc_comps; ++i)
        gmap[i] = wres.comp_of_point[hstack_point_b(a, c, wcd.min_point[i])];
    for (int i = 0; i < c.circles; ++i) gmap[wcd.of_src_circle(i)] = wres.of_src_circle(a.circles + i);
    for (int i = 0; i < d.circles; ++i) gmap[wcd.of_tgt_circle(i)] = wres.of_tgt_circle(b.circles + i);

    Morphism<R> out{rs, rt, {}};
    for (auto& [fm, fc] : f.terms)
        for (auto& [gm, gcf] : g.terms) {
            DotMask m = 0;
            for (int i = 0; i < wab.count; ++i)
                if ((fm >> i) & 1) m |= DotMask(1) << fmap[i];
            for (int i = 0; i < wcd.count; ++i)
                if ((gm >> i) & 1) m |= DotMask(1) << gmap[i];
            auto [it, fresh] = out.terms.try_emplace(m, fc * gcf);
            if (!fresh) it->second += fc * gcf;
        }
    out.prune();
    return out;
}

// Saddle between two flat tangles differing by one surgery: the unique
// undotted basis element; callers pick (src, tgt) = (1_w, e_i) or back.
template <class R>
Morphism<R> saddle_morphism(const FlatTangle& a, const FlatTangle& b) {
    return basis_morphism<R>(a, b, 0);
}

// Deloop injections/projections for a tangle whose circles are all being
// removed. label[i] = +1 places circle i at q+1 (undotted cup in, dotted cap
// out); -1 places it at q-1 (dotted cup in, undotted cap out).
template <class R>
Morphism<R> deloop_in(const FlatTangle& with_circles, const std::vector<int>& label) {
    FlatTangle bare = with_circles;
    bare.circles = 0;
    WDecomp w = decompose_w(bare, with_circles);
    DotMask m = 0;
    for (int i = 0; i < with_circles.circles; ++i)
        if (label[i] == -1) m |= DotMask(1) << w.of_tgt_circle(i);
    return basis_morphism<R>(bare, with_circles, m);
}

template <class R>
Morphism<R> deloop_out(const FlatTangle& with_circles, const std::vector<int>& label) {
    FlatTangle bare = with_circles;
    bare.circles = 0;
    WDecomp w = decompose_w(with_circles, bare);
    DotMask m = 0;
    for (int i = 0; i < with_circles.circles; ++i)
        if (label[i] == +1) m |= DotMask(1) << w.of_src_circle(i);
    return basis_morphism<R>(with_circles, bare, m);
}

}  // namespace skein
