#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "skein/linalg.hpp"
#include "skein/reduce.hpp"

namespace skein {

enum class Cert { yes, no, inconclusive };

namespace homdetail {

// One unknown coefficient: a basis cobordism sitting in a component (i -> j).
struct Slot {
    int i, j;
    DotMask mask;
};

// All internal-degree-zero basis elements for maps C -> D of the given
// t-degree (in half-steps).
template <class R>
std::vector<Slot> degree_zero_slots(const Complex<R>& c, const Complex<R>& d, int tdeg2) {
    std::vector<Slot> slots;
    for (int i = 0; i < c.size(); ++i)
        for (int j = 0; j < d.size(); ++j) {
            if (d.obj[j].deg.t2 != c.obj[i].deg.t2 + tdeg2) continue;
            if (c.obj[i].tangle.nb != d.obj[j].tangle.nb || c.obj[i].tangle.nt != d.obj[j].tangle.nt) continue;
            WDecomp w = decompose_w(c.obj[i].tangle, d.obj[j].tangle);
            int want = c.obj[i].deg.q - d.obj[j].deg.q;  // deg_chi + (q_j - q_i) = 0
            for (DotMask m = 0; m < (DotMask(1) << w.count); ++m)
                if (basis_internal_degree(c.obj[i].tangle, d.obj[j].tangle, w, m) == want)
                    slots.push_back({i, j, m});
        }
    return slots;
}

// Row index space: (i, k, mask) labels for morphism components of maps
// C -> D of t-degree `tdeg2`.
struct RowIndex {
    std::map<std::tuple<int, int, DotMask>, int> index;
    int next = 0;
    int get(int i, int k, DotMask m) {
        auto [it, fresh] = index.try_emplace(std::tuple{i, k, m}, next);
        if (fresh) ++next;
        return it->second;
    }
};

template <class R, class F>
void accumulate(std::vector<std::map<int, F>>& rows, RowIndex& rix, int col, int i, int k, const Morphism<R>& m,
                bool negate) {
    for (auto& [mask, coef] : m.terms) {
        int r = rix.get(i, k, mask);
        if (r >= static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(r) + 1);
        F v = field_of<R>::lift(coef);
        auto& cell = rows[static_cast<size_t>(r)][col];
        cell = negate ? cell - v : cell + v;
    }
}

}  // namespace homdetail

// Solve h with  h d + d h = f  for a t-degree-0 chain map f : C -> D (h has
// t-degree -1). Over a field the failure is definitive.
template <class R>
struct NullhomotopyResult {
    Cert cert = Cert::inconclusive;
    EntryMap<R> homotopy;
};

template <class R>
NullhomotopyResult<R> nullhomotopy(const Complex<R>& c, const Complex<R>& d, const EntryMap<R>& f) {
    using F = typename field_of<R>::type;
    auto slots = homdetail::degree_zero_slots(c, d, -2);
    homdetail::RowIndex rix;
    std::vector<std::map<int, F>> rows;
    // h d: path i --h--> j --d--> k ; d h: path i --d--> j --h--> k.
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        auto& sl = slots[static_cast<size_t>(s)];
        Morphism<R> basis = basis_morphism<R>(c.obj[sl.i].tangle, d.obj[sl.j].tangle, sl.mask);
        for (auto& [jk, dm] : d.diff)
            if (jk.first == sl.j)
                homdetail::accumulate<R, F>(rows, rix, s, sl.i, jk.second, compose(basis, dm), false);
        for (auto& [ij, dm] : c.diff)
            if (ij.second == sl.i)
                homdetail::accumulate<R, F>(rows, rix, s, ij.first, sl.j, compose(dm, basis), false);
    }
    // RHS: expand f in the same row index space.
    std::map<int, F> rhs_map;
    for (auto& [ij, m] : f)
        for (auto& [mask, coef] : m.terms) {
            int r = rix.get(ij.first, ij.second, mask);
            if (r >= static_cast<int>(rows.size())) rows.resize(static_cast<size_t>(r) + 1);
            rhs_map[r] += field_of<R>::lift(coef);
        }
    std::vector<F> rhs(rows.size(), F(0));
    for (auto& [r, v] : rhs_map) rhs[static_cast<size_t>(r)] = v;

    LinearSolution<F> sol = solve_linear<F>(static_cast<int>(slots.size()), rows, rhs);
    NullhomotopyResult<R> out;
    if (!sol.consistent) {
        out.cert = ring_traits<R>::is_field ? Cert::no : Cert::inconclusive;
        return out;
    }
    // Lower to R (integral for Z); fall back to inconclusive on failure.
    EntryMap<R> h;
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        auto low = field_of<R>::lower(sol.particular[static_cast<size_t>(s)]);
        if (!low) {
            out.cert = Cert::inconclusive;
            return out;
        }
        if (ring_traits<R>::is_zero(*low)) continue;
        auto& sl = slots[static_cast<size_t>(s)];
        detail::entry_map_add(h, sl.i, sl.j,
                              basis_morphism<R>(c.obj[sl.i].tangle, d.obj[sl.j].tangle, sl.mask, *low));
    }
    out.cert = Cert::yes;
    out.homotopy = std::move(h);
    return out;
}

// Convenience: nullhomotopy of a ChainMap.
template <class R>
NullhomotopyResult<R> nullhomotopy(const ChainMap<R>& f) {
    require(f.tdeg2 == 0, "nullhomotopy expects t-degree 0");
    return nullhomotopy(*f.src, *f.tgt, f.comp);
}

// ---------------------------------------------------------------------------
// Degree-zero chain isomorphism search between reduced complexes with equal
// graded-object multisets. Solves the chain-map equations, then samples the
// solution space for a map whose identity-headed blocks are invertible.

template <class R>
struct IsoResult {
    bool found = false;
    EntryMap<R> map;  // C -> D, a strict isomorphism of complexes
};

template <class R>
IsoResult<R> find_chain_iso(const Complex<R>& c, const Complex<R>& d, std::uint64_t seed = 1) {
    using F = typename field_of<R>::type;
    IsoResult<R> out;
    // graded multisets must match
    {
        std::vector<GradedObject> a = c.obj, b = d.obj;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return out;
    }
    if (c.obj.empty()) {
        out.found = true;
        return out;
    }

    auto slots = homdetail::degree_zero_slots(c, d, 0);
    if (slots.empty()) return out;
    homdetail::RowIndex rix;
    std::vector<std::map<int, F>> rows;
    // chain map: d^C g - g d^D ... components (g . d^D) - (d^C . g) = 0
    for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
        auto& sl = slots[static_cast<size_t>(s)];
        Morphism<R> basis = basis_morphism<R>(c.obj[sl.i].tangle, d.obj[sl.j].tangle, sl.mask);
        for (auto& [jk, dm] : d.diff)
            if (jk.first == sl.j)
                homdetail::accumulate<R, F>(rows, rix, s, sl.i, jk.second, compose(basis, dm), false);
        for (auto& [ij, dm] : c.diff)
            if (ij.second == sl.i)
                homdetail::accumulate<R, F>(rows, rix, s, ij.first, sl.j, compose(dm, basis), true);
    }
    std::vector<F> rhs(rows.size(), F(0));
    LinearSolution<F> sol = solve_linear<F>(static_cast<int>(slots.size()), rows, rhs);
    if (!sol.consistent) return out;  // cannot happen for homogeneous systems

    // Head structure: blocks of object pairs with identical (degree, tangle).
    std::map<std::pair<Degree, FlatTangle>, std::pair<std::vector<int>, std::vector<int>>> blocks;
    for (int i = 0; i < c.size(); ++i)
        blocks[{c.obj[i].deg, c.obj[i].tangle}].first.push_back(i);
    for (int j = 0; j < d.size(); ++j)
        blocks[{d.obj[j].deg, d.obj[j].tangle}].second.push_back(j);
    std::map<std::pair<int, int>, int> head_slot;  // (i,j) -> slot index with mask 0
    for (int s = 0; s < static_cast<int>(slots.size()); ++s)
        if (slots[static_cast<size_t>(s)].mask == 0 &&
            c.obj[slots[static_cast<size_t>(s)].i].tangle == d.obj[slots[static_cast<size_t>(s)].j].tangle &&
            c.obj[slots[static_cast<size_t>(s)].i].deg == d.obj[slots[static_cast<size_t>(s)].j].deg)
            head_slot[{slots[static_cast<size_t>(s)].i, slots[static_cast<size_t>(s)].j}] = s;

    auto heads_invertible = [&](const std::vector<R>& coeffs) -> bool {
        for (auto& [key, blk] : blocks) {
            auto& [ci, dj] = blk;
            if (ci.size() != dj.size()) return false;
            std::vector<std::vector<R>> m(ci.size(), std::vector<R>(dj.size(), R(0)));
            for (size_t r = 0; r < ci.size(); ++r)
                for (size_t cc = 0; cc < dj.size(); ++cc) {
                    auto it = head_slot.find({ci[r], dj[cc]});
                    if (it != head_slot.end()) m[r][cc] = coeffs[static_cast<size_t>(it->second)];
                }
            if (!ring_traits<R>::is_unit(small_determinant(m))) return false;
        }
        return true;
    };

    auto satisfies_equations = [&](const std::vector<F>& cand) -> bool {
        for (auto& row : rows) {
            F acc(0);
            for (auto& [col, v] : row) acc += v * cand[static_cast<size_t>(col)];
            if (!ring_traits<F>::is_zero(acc)) return false;
        }
        return true;
    };
    auto try_candidate = [&](const std::vector<F>& cand) -> bool {
        if (!satisfies_equations(cand)) return false;
        std::vector<R> low(cand.size());
        for (size_t s = 0; s < cand.size(); ++s) {
            auto v = field_of<R>::lower(cand[s]);
            if (!v) return false;
            low[s] = *v;
        }
        if (!heads_invertible(low)) return false;
        EntryMap<R> g;
        for (size_t s = 0; s < low.size(); ++s) {
            if (ring_traits<R>::is_zero(low[s])) continue;
            auto& sl = slots[s];
            detail::entry_map_add(g, sl.i, sl.j,
                                  basis_morphism<R>(c.obj[sl.i].tangle, d.obj[sl.j].tangle, sl.mask, low[s]));
        }
        out.found = true;
        out.map = std::move(g);
        return true;
    };

    const int nv = static_cast<int>(slots.size());
    std::vector<F> ident;

    // Greedy first: match equal objects in canonical order with identity
    // heads (covers identical reduced complexes immediately).
    {
        std::vector<int> order_c(static_cast<size_t>(c.size())), order_d(static_cast<size_t>(d.size()));
        std::iota(order_c.begin(), order_c.end(), 0);
        std::iota(order_d.begin(), order_d.end(), 0);
        std::stable_sort(order_c.begin(), order_c.end(), [&](int x, int y) { return c.obj[x] < c.obj[y]; });
        std::stable_sort(order_d.begin(), order_d.end(), [&](int x, int y) { return d.obj[x] < d.obj[y]; });
        std::map<std::pair<int, int>, int> slot_at;
        for (int s = 0; s < nv; ++s)
            if (slots[static_cast<size_t>(s)].mask == 0)
                slot_at[{slots[static_cast<size_t>(s)].i, slots[static_cast<size_t>(s)].j}] = s;
        ident.assign(static_cast<size_t>(nv), F(0));
        bool complete = true;
        for (size_t k = 0; k < order_c.size(); ++k) {
            auto it = slot_at.find({order_c[k], order_d[k]});
            if (it == slot_at.end()) {
                complete = false;
                break;
            }
            ident[static_cast<size_t>(it->second)] = F(1);
        }
        if (!complete) ident.assign(static_cast<size_t>(nv), F(0));
        if (complete && try_candidate(ident)) return out;
    }
    // integralized nullspace basis (clear denominators when over Q-lift)
    std::vector<std::vector<F>> basis = sol.nullspace;
    for (auto& vec : basis) {
        if constexpr (std::is_same_v<F, Qc>) {
            long long l = 1;
            for (auto& x : vec) l = std::lcm(l, x.den);
            for (auto& x : vec) x = x * Qc(l);
        }
    }
    // single basis vectors and their negatives first (covers sign flips)
    for (auto& vec : basis) {
        if (try_candidate(vec)) return out;
        std::vector<F> neg(vec.size());
        for (size_t s = 0; s < vec.size(); ++s) neg[s] = -vec[s];
        if (try_candidate(neg)) return out;
    }
    // seeded random small integer combinations, with and without the
    // greedy-identity offset
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<F> cand(static_cast<size_t>(nv), F(0));
        for (auto& vec : basis) {
            int k = coef(rng);
            if (k == 0) continue;
            for (int s = 0; s < nv; ++s) cand[static_cast<size_t>(s)] += vec[static_cast<size_t>(s)] * F(k);
        }
        if (try_candidate(cand)) return out;
        for (int s = 0; s < nv; ++s) cand[static_cast<size_t>(s)] += ident[static_cast<size_t>(s)];
        if (try_candidate(cand)) return out;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homotopy equivalence of complexes.

template <class R>
struct EquivalenceResult {
    Cert cert = Cert::inconclusive;
    EntryMap<R> witness;  // reduced(C) -> reduced(D) chain iso when cert == yes
    Complex<R> reduced_a, reduced_b;
};

// Graded Euler characteristic is a homotopy invariant (the class in the
// Grothendieck group of the additive category), so a mismatch is a
// definitive "no" over any ring.
template <class R>
EquivalenceResult<R> equivalent(const Complex<R>& a, const Complex<R>& b, std::uint64_t seed = 1) {
    EquivalenceResult<R> out;
    out.reduced_a = simplify(a);
    out.reduced_b = simplify(b);
    if (out.reduced_a.empty() && out.reduced_b.empty()) {
        out.cert = Cert::yes;
        return out;
    }
    IsoResult<R> iso = find_chain_iso(out.reduced_a, out.reduced_b, seed);
    if (iso.found) {
        out.cert = Cert::yes;
        out.witness = std::move(iso.map);
        return out;
    }
    std::vector<GradedObject> oa = out.reduced_a.obj, ob = out.reduced_b.obj;
    std::sort(oa.begin(), oa.end());
    std::sort(ob.begin(), ob.end());
    if (oa != ob) {
        if (ring_traits<R>::is_field || !(euler_char(out.reduced_a) == euler_char(out.reduced_b)))
            out.cert = Cert::no;
        else
            out.cert = Cert::inconclusive;
        return out;
    }
    out.cert = Cert::inconclusive;
    return out;
}

template <class R>
Cert is_contractible(const Complex<R>& c) {
    Complex<R> r = simplify(c);
    if (r.empty()) return Cert::yes;
    if (ring_traits<R>::is_field) return Cert::no;
    EulerChar e = euler_char(r);
    if (!e.terms.empty()) return Cert::no;
    return Cert::inconclusive;
}

// ---------------------------------------------------------------------------
// Equivalence up to powers of a fixed degree shift.

template <class R>
struct ShiftEquivalence {
    bool found = false;
    int j = 0;
    EquivalenceResult<R> detail;
};

// Search for the unique j with C ~ shift(D, j * gen); candidates come from
// aligning the minimal graded objects.
template <class R>
ShiftEquivalence<R> equivalent_up_to_shift(const Complex<R>& c, const Complex<R>& d, Degree gen,
                                           std::uint64_t seed = 1) {
    require(!(gen == Degree{0, 0}), "shift generator must be nonzero");
    ShiftEquivalence<R> out;
    Complex<R> rc = simplify(c);
    Complex<R> rd = simplify(d);
    if (rc.empty() || rd.empty()) {
        if (rc.empty() && rd.empty()) {
            out.found = true;
            out.j = 0;
            out.detail.cert = Cert::yes;
        }
        return out;
    }
    GradedObject mc = *std::min_element(rc.obj.begin(), rc.obj.end());
    GradedObject md = *std::min_element(rd.obj.begin(), rd.obj.end());
    std::vector<int> candidates;
    if (gen.t2 != 0) {
        int delta = mc.deg.t2 - md.deg.t2;
        if (delta % gen.t2 == 0) candidates.push_back(delta / gen.t2);
    } else {
        int delta = mc.deg.q - md.deg.q;
        if (delta % gen.q == 0) candidates.push_back(delta / gen.q);
    }
    for (int j : candidates) {
        EquivalenceResult<R> eq = equivalent(rc, shift(rd, gen * j), seed);
        if (eq.cert == Cert::yes) {
            require(!out.found || out.j == j, "ambiguous shift equivalence");
            out.found = true;
            out.j = j;
            out.detail = std::move(eq);
        }
    }
    return out;
}

}  // namespace skein
