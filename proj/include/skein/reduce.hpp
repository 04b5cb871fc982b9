#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skein/complex.hpp"

namespace skein {

template <class R>
using EntryMap = std::map<std::pair<int, int>, Morphism<R>>;

namespace detail {

template <class R>
void entry_map_add(EntryMap<R>& m, int i, int j, const Morphism<R>& f) {
    if (f.is_zero()) return;
    auto it = m.find({i, j});
    if (it == m.end()) {
        m.emplace(std::pair{i, j}, f);
    } else {
        it->second += f;
        if (it->second.is_zero()) m.erase(it);
    }
}

// A: X -> Y entries, B: Y -> Z entries; result X -> Z.
template <class R>
EntryMap<R> entry_map_compose(const EntryMap<R>& a, const EntryMap<R>& b) {
    EntryMap<R> out;
    std::map<int, std::vector<std::pair<int, const Morphism<R>*>>> b_by_src;
    for (auto& [ij, m] : b) b_by_src[ij.first].push_back({ij.second, &m});
    for (auto& [ij, m] : a) {
        auto it = b_by_src.find(ij.second);
        if (it == b_by_src.end()) continue;
        for (auto& [k, g] : it->second) entry_map_add(out, ij.first, k, compose(m, *g));
    }
    return out;
}

template <class R>
EntryMap<R> identity_entry_map(const Complex<R>& c) {
    EntryMap<R> out;
    for (int i = 0; i < c.size(); ++i) out.emplace(std::pair{i, i}, identity_morphism<R>(c.obj[i].tangle));
    return out;
}

}  // namespace detail

// Result of a homotopy-equivalence-preserving rewrite, optionally carrying
// the witnesses against the complex the reduction started from:
//   proj : original -> reduced, incl : reduced -> original (t-degree 0),
//   htpy : original -> original (t-degree -1), with
//   proj . incl = id and id - incl.proj = d htpy + htpy d.
template <class R>
struct ReductionResult {
    Complex<R> complex;
    bool with_witness = false;
    EntryMap<R> proj, incl, htpy;
    int steps = 0;
};

// ---------------------------------------------------------------------------
// Delooping: every closed circle on an object is traded for a pair of
// q-shifts via the degree-zero isomorphism (circle) ~ q (+) q^{-1}.

template <class R>
ReductionResult<R> deloop(const Complex<R>& c, bool with_witness = false) {
    ReductionResult<R> out;
    out.with_witness = with_witness;
    Complex<R>& r = out.complex;
    r.window = c.window;

    struct Expansion {
        int index;
        std::vector<int> label;
    };
    std::vector<std::vector<Expansion>> expansions(c.obj.size());
    for (int i = 0; i < c.size(); ++i) {
        const int k = c.obj[i].tangle.circles;
        out.steps += k;
        const int copies = 1 << k;
        for (int bits = 0; bits < copies; ++bits) {
            std::vector<int> label(k);
            int qshift = 0;
            for (int b = 0; b < k; ++b) {
                label[b] = (bits >> b) & 1 ? +1 : -1;
                qshift += label[b];
            }
            FlatTangle bare = c.obj[i].tangle;
            bare.circles = 0;
            expansions[i].push_back({r.size(), std::move(label)});
            r.obj.push_back({Degree{c.obj[i].deg.t2, c.obj[i].deg.q + qshift}, bare});
        }
    }
    for (auto& [ij, m] : c.diff) {
        auto [i, j] = ij;
        for (auto& ei : expansions[i])
            for (auto& ej : expansions[j]) {
                Morphism<R> e = compose(compose(deloop_in<R>(c.obj[i].tangle, ei.label), m),
                                        deloop_out<R>(c.obj[j].tangle, ej.label));
                r.add_entry(ei.index, ej.index, e);
            }
    }
    if (with_witness) {
        for (int i = 0; i < c.size(); ++i)
            for (auto& e : expansions[i]) {
                detail::entry_map_add(out.proj, i, e.index, deloop_out<R>(c.obj[i].tangle, e.label));
                detail::entry_map_add(out.incl, e.index, i, deloop_in<R>(c.obj[i].tangle, e.label));
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gaussian elimination of invertible differential entries.

enum class PivotOrder { forward, reverse };

// An endomorphism entry u.id + (dotted terms) is invertible iff u is a unit;
// the dotted part is nilpotent, so the inverse is a finite geometric series.
template <class R>
std::optional<Morphism<R>> try_invert(const Morphism<R>& f) {
    if (f.src != f.tgt || f.src.circles != 0) return std::nullopt;
    auto head = f.terms.find(DotMask(0));
    if (head == f.terms.end() || !ring_traits<R>::is_unit(head->second)) return std::nullopt;
    R u = head->second;
    R v = ring_traits<R>::unit_inverse(u);
    Morphism<R> nil = f;
    nil.terms.erase(DotMask(0));
    Morphism<R> id = identity_morphism<R>(f.src);
    Morphism<R> inv = id * v;
    Morphism<R> pow = id;
    R scale = v;
    for (int k = 1; !nil.is_zero(); ++k) {
        pow = compose(pow, nil);
        if (pow.is_zero()) break;
        scale = scale * (-v);
        inv += pow * (scale * v);
        require(k <= 64, "non-terminating inverse");
    }
    return inv;
}

namespace detail {

// One elimination of pivot (b1 -> b2); returns the smaller complex and the
// step witnesses (new-index side for proj/incl).
template <class R>
void eliminate_step(const Complex<R>& c, int b1, int b2, const Morphism<R>& phi_inv, Complex<R>& out,
                    EntryMap<R>* p2, EntryMap<R>* i2, EntryMap<R>* h2) {
    std::vector<int> remap(c.obj.size(), -1);
    for (int i = 0; i < c.size(); ++i) {
        if (i == b1 || i == b2) continue;
        remap[i] = out.size();
        out.obj.push_back(c.obj[i]);
    }
    out.window = c.window;

    std::vector<std::pair<int, const Morphism<R>*>> into_b2, out_of_b1;
    for (auto& [ij, m] : c.diff) {
        auto [i, j] = ij;
        if (j == b2 && i != b1) into_b2.push_back({i, &m});
        if (i == b1 && j != b2) out_of_b1.push_back({j, &m});
        if (i != b1 && i != b2 && j != b1 && j != b2) out.add_entry(remap[i], remap[j], m);
    }
    for (auto& [x, gamma] : into_b2)
        for (auto& [y, delta] : out_of_b1)
            out.add_entry(remap[x], remap[y], -compose(compose(*gamma, phi_inv), *delta));

    if (p2) {
        for (int i = 0; i < c.size(); ++i)
            if (remap[i] >= 0) {
                entry_map_add(*p2, i, remap[i], identity_morphism<R>(c.obj[i].tangle));
                entry_map_add(*i2, remap[i], i, identity_morphism<R>(c.obj[i].tangle));
            }
        for (auto& [y, delta] : out_of_b1)
            entry_map_add(*p2, b2, remap[y], -compose(phi_inv, *delta));
        for (auto& [x, gamma] : into_b2)
            entry_map_add(*i2, remap[x], b1, -compose(*gamma, phi_inv));
        entry_map_add(*h2, b2, b1, phi_inv);
    }
}

}  // namespace detail

template <class R>
ReductionResult<R> gaussian_eliminate(const Complex<R>& c, PivotOrder order = PivotOrder::forward,
                                      bool with_witness = false) {
    ReductionResult<R> out;
    out.with_witness = with_witness;
    out.complex = c;
    if (with_witness) {
        out.proj = detail::identity_entry_map(c);
        out.incl = detail::identity_entry_map(c);
    }
    for (;;) {
        const Complex<R>& cur = out.complex;
        int b1 = -1, b2 = -1;
        Morphism<R> phi_inv;
        auto consider = [&](const std::pair<int, int>& ij, const Morphism<R>& m) -> bool {
            if (cur.obj[ij.first].tangle != cur.obj[ij.second].tangle) return false;
            auto inv = try_invert(m);
            if (!inv) return false;
            b1 = ij.first;
            b2 = ij.second;
            phi_inv = std::move(*inv);
            return true;
        };
        bool found = false;
        if (order == PivotOrder::forward) {
            for (auto& [ij, m] : cur.diff)
                if (consider(ij, m)) {
                    found = true;
                    break;
                }
        } else {
            for (auto it = cur.diff.rbegin(); it != cur.diff.rend(); ++it)
                if (consider(it->first, it->second)) {
                    found = true;
                    break;
                }
        }
        if (!found) break;

        Complex<R> next;
        EntryMap<R> p2, i2, h2;
        detail::eliminate_step(out.complex, b1, b2, phi_inv, next, with_witness ? &p2 : nullptr,
                               with_witness ? &i2 : nullptr, with_witness ? &h2 : nullptr);
        if (with_witness) {
            out.htpy = [&] {
                EntryMap<R> acc = out.htpy;
                EntryMap<R> mid = detail::entry_map_compose(out.proj, h2);
                for (auto& [ij, m] : detail::entry_map_compose(mid, out.incl))
                    detail::entry_map_add(acc, ij.first, ij.second, m);
                return acc;
            }();
            out.proj = detail::entry_map_compose(out.proj, p2);
            out.incl = detail::entry_map_compose(i2, out.incl);
        }
        out.complex = std::move(next);
        out.steps += 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// simplify: deloop, then eliminate to a reduced complex, then canonical
// order. Over a field the result is the minimal representative.

template <class R>
void apply_permutation_to_witness(ReductionResult<R>& rr, const std::vector<int>& pos) {
    EntryMap<R> proj, incl;
    for (auto& [ij, m] : rr.proj) proj.emplace(std::pair{ij.first, pos[ij.second]}, m);
    for (auto& [ij, m] : rr.incl) incl.emplace(std::pair{pos[ij.first], ij.second}, m);
    rr.proj = std::move(proj);
    rr.incl = std::move(incl);
}

template <class R>
ReductionResult<R> simplify_with_witness(const Complex<R>& c, PivotOrder order = PivotOrder::forward,
                                         bool with_witness = false) {
    ReductionResult<R> d = deloop(c, with_witness);
    ReductionResult<R> g = gaussian_eliminate(d.complex, order, with_witness);
    ReductionResult<R> out;
    out.with_witness = with_witness;
    out.complex = std::move(g.complex);
    out.steps = d.steps + g.steps;
    if (with_witness) {
        out.proj = detail::entry_map_compose(d.proj, g.proj);
        out.incl = detail::entry_map_compose(g.incl, d.incl);
        out.htpy = d.htpy;  // deloop is a strict isomorphism, htpy = 0
        EntryMap<R> mid = detail::entry_map_compose(d.proj, g.htpy);
        for (auto& [ij, m] : detail::entry_map_compose(mid, d.incl))
            detail::entry_map_add(out.htpy, ij.first, ij.second, m);
    }
    // Canonical object order, witness indices adjusted to match.
    std::vector<int> idx(out.complex.obj.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return out.complex.obj[a] < out.complex.obj[b]; });
    std::vector<int> pos(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) pos[static_cast<size_t>(idx[i])] = static_cast<int>(i);
    canonical_sort(out.complex);
    if (with_witness) apply_permutation_to_witness(out, pos);
    return out;
}

template <class R>
Complex<R> simplify(const Complex<R>& c, PivotOrder order = PivotOrder::forward) {
    return simplify_with_witness(c, order, false).complex;
}

// True when no invertible pivot remains (nothing left for unit-pivot
// reduction to do).
template <class R>
bool is_reduced(const Complex<R>& c) {
    for (auto& [ij, m] : c.diff) {
        if (c.obj[ij.first].tangle != c.obj[ij.second].tangle) continue;
        if (try_invert(m)) return false;
    }
    return true;
}

}  // namespace skein
