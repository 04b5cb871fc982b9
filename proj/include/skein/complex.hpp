#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/degree.hpp"
#include "skein/morphism.hpp"

namespace skein {

struct GradedObject {
    Degree deg;
    FlatTangle tangle;

    bool operator==(const GradedObject&) const = default;
    auto operator<=>(const GradedObject&) const = default;
};

// Half-graded chain complex over the cobordism category. The differential
// raises t by one and every entry has internal degree zero:
// deg_chi(entry) + (q_to - q_from) = 0. Objects are normally circle-free;
// circles appear transiently (after tensor) until deloop removes them.
template <class R>
struct Complex {
    std::vector<GradedObject> obj;
    std::map<std::pair<int, int>, Morphism<R>> diff;
    Window window;

    int size() const { return static_cast<int>(obj.size()); }
    bool empty() const { return obj.empty(); }

    const Morphism<R>* entry(int i, int j) const {
        auto it = diff.find({i, j});
        return it == diff.end() ? nullptr : &it->second;
    }

    void add_entry(int i, int j, const Morphism<R>& m) {
        if (m.is_zero()) return;
        auto it = diff.find({i, j});
        if (it == diff.end()) {
            diff.emplace(std::pair{i, j}, m);
        } else {
            it->second += m;
            if (it->second.is_zero()) diff.erase(it);
        }
    }

    // Smallest t-degree that actually occurs (half-steps); used for window
    // accounting of exact complexes.
    long long t_base2() const {
        long long b = Window::pos_inf;
        for (auto& o : obj) b = std::min<long long>(b, o.deg.t2);
        return std::max<long long>(b, window.lo2);
    }
};

template <class R>
Complex<R> one_object_complex(const FlatTangle& t, Degree d = {}) {
    Complex<R> c;
    c.obj.push_back({d, t});
    return c;
}

template <class R>
Complex<R> identity_complex(int n) {
    return one_object_complex<R>(identity_tangle(n));
}

// ---------------------------------------------------------------------------
// Validation

struct Diagnostic {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

template <class R>
Diagnostic check_complex(const Complex<R>& c) {
    Diagnostic d;
    for (int i = 0; i < c.size(); ++i) {
        if (!is_planar(c.obj[i].tangle)) d.fail("object " + std::to_string(i) + ": non-planar tangle");
        if (c.obj[i].tangle.circles != 0)
            d.fail("object " + std::to_string(i) + ": undelooped circle");
        if (!c.window.contains(c.obj[i].deg.t2))
            d.fail("object " + std::to_string(i) + ": outside window");
    }
    for (auto& [ij, m] : c.diff) {
        auto [i, j] = ij;
        std::string where = "entry " + std::to_string(i) + "->" + std::to_string(j);
        if (i < 0 || i >= c.size() || j < 0 || j >= c.size()) {
            d.fail(where + ": index out of range");
            continue;
        }
        if (m.src != c.obj[i].tangle || m.tgt != c.obj[j].tangle) d.fail(where + ": endpoint tangle mismatch");
        if (m.is_zero()) d.fail(where + ": stored zero entry");
        if (c.obj[j].deg.t2 != c.obj[i].deg.t2 + 2) d.fail(where + ": differential must raise t by 1");
        if (!m.is_zero() && is_homogeneous(m)) {
            int dchi = internal_degree(m);
            if (dchi + (c.obj[j].deg.q - c.obj[i].deg.q) != 0) d.fail(where + ": internal degree not zero");
        } else if (!m.is_zero()) {
            d.fail(where + ": inhomogeneous entry");
        }
    }
    // d^2 = 0, within the window.
    std::map<std::pair<int, int>, Morphism<R>> sq;
    for (auto& [ij, m] : c.diff) {
        auto [i, j] = ij;
        for (auto& [jk, m2] : c.diff) {
            auto [j2, k] = jk;
            if (j2 != j) continue;
            Morphism<R> comp = compose(m, m2);
            if (comp.is_zero()) continue;
            auto [it, fresh] = sq.try_emplace(std::pair{i, k}, comp);
            if (!fresh) {
                it->second += comp;
                if (it->second.is_zero()) sq.erase(it);
            }
        }
    }
    for (auto& [ik, m] : sq)
        d.fail("d^2 != 0 at " + std::to_string(ik.first) + "->" + std::to_string(ik.second));
    return d;
}

template <class R>
void debug_validate(const Complex<R>& c) {
#ifndef NDEBUG
    Diagnostic d = check_complex(c);
    if (!d.ok) throw error(("complex invariant broken: " + d.violations.front()).c_str());
#else
    (void)c;
#endif
}

// ---------------------------------------------------------------------------
// Structural operations

template <class R>
Complex<R> shift(const Complex<R>& c, Degree d) {
    Complex<R> r = c;
    for (auto& o : r.obj) o.deg = o.deg + d;
    r.window = r.window.shifted(d.t2);
    return r;
}

template <class R>
Complex<R> truncate(const Complex<R>& c, Window w) {
    Complex<R> r;
    r.window = c.window.intersect(w);
    std::vector<int> remap(c.obj.size(), -1);
    for (int i = 0; i < c.size(); ++i) {
        if (!w.contains(c.obj[i].deg.t2)) continue;
        remap[i] = r.size();
        r.obj.push_back(c.obj[i]);
    }
    for (auto& [ij, m] : c.diff) {
        auto [i, j] = ij;
        if (remap[i] >= 0 && remap[j] >= 0) r.diff.emplace(std::pair{remap[i], remap[j]}, m);
    }
    return r;
}

// Deterministic object order: by degree, then tangle.
template <class R>
void canonical_sort(Complex<R>& c) {
    std::vector<int> idx(c.obj.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return c.obj[a] < c.obj[b]; });
    std::vector<int> pos(c.obj.size());
    for (int i = 0; i < c.size(); ++i) pos[idx[i]] = i;
    std::vector<GradedObject> obj2(c.obj.size());
    for (int i = 0; i < c.size(); ++i) obj2[pos[i]] = std::move(c.obj[i]);
    std::map<std::pair<int, int>, Morphism<R>> diff2;
    for (auto& [ij, m] : c.diff) diff2.emplace(std::pair{pos[ij.first], pos[ij.second]}, std::move(m));
    c.obj = std::move(obj2);
    c.diff = std::move(diff2);
}

template <class R>
Complex<R> direct_sum(const Complex<R>& a, const Complex<R>& b) {
    Complex<R> r = a;
    int off = a.size();
    r.obj.insert(r.obj.end(), b.obj.begin(), b.obj.end());
    for (auto& [ij, m] : b.diff) r.diff.emplace(std::pair{ij.first + off, ij.second + off}, m);
    r.window = a.window.intersect(b.window);
    return r;
}

// ---------------------------------------------------------------------------
// Chain maps

template <class R>
struct ChainMap {
    const Complex<R>* src = nullptr;
    const Complex<R>* tgt = nullptr;
    int tdeg2 = 0;  // t-degree in half-steps
    std::map<std::pair<int, int>, Morphism<R>> comp;

    void add(int i, int j, const Morphism<R>& m) {
        if (m.is_zero()) return;
        auto it = comp.find({i, j});
        if (it == comp.end()) {
            comp.emplace(std::pair{i, j}, m);
        } else {
            it->second += m;
            if (it->second.is_zero()) comp.erase(it);
        }
    }
};

// Components of (dg) for g of t-degree l: (dg) = g.d + (-1)^{l+1} d.g.
template <class R>
std::map<std::pair<int, int>, Morphism<R>> hom_differential(const ChainMap<R>& g) {
    std::map<std::pair<int, int>, Morphism<R>> out;
    auto add = [&](int i, int j, Morphism<R> m) {
        if (m.is_zero()) return;
        auto it = out.find({i, j});
        if (it == out.end())
            out.emplace(std::pair{i, j}, std::move(m));
        else {
            it->second += m;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    require(g.tdeg2 % 2 == 0, "chain map with fractional t-degree");
    int l = g.tdeg2 / 2;
    bool flip = ((l + 1) % 2 + 2) % 2 == 1;
    for (auto& [ij, d] : g.src->diff)
        for (auto& [jk, gm] : g.comp)
            if (jk.first == ij.second) add(ij.first, jk.second, compose(d, gm));
    for (auto& [ij, gm] : g.comp)
        for (auto& [jk, d] : g.tgt->diff)
            if (jk.first == ij.second) {
                Morphism<R> m = compose(gm, d);
                add(ij.first, jk.second, flip ? -m : m);
            }
    return out;
}

template <class R>
bool is_chain_map(const ChainMap<R>& g) {
    return hom_differential(g).empty();
}

// Standard mapping cone of a t-degree-0 chain map f : C -> D: the source is
// shifted down one t-step into the total complex and f becomes the
// connecting differential. cone(f) is t^{-1} C (+) D with d = (-d_C, f, d_D).
template <class R>
Complex<R> cone(const ChainMap<R>& f) {
    require(f.tdeg2 == 0, "cone expects a t-degree-0 chain map");
    require(is_chain_map(f), "cone of a non-chain-map");
    const Complex<R>& c = *f.src;
    const Complex<R>& d = *f.tgt;
    Complex<R> r;
    r.window = c.window.shifted(-2).intersect(d.window);
    for (auto& o : c.obj) r.obj.push_back({o.deg + Degree{-2, 0}, o.tangle});
    int off = c.size();
    for (auto& o : d.obj) r.obj.push_back(o);
    for (auto& [ij, m] : c.diff) r.diff.emplace(ij, -m);
    for (auto& [ij, m] : d.diff) r.diff.emplace(std::pair{ij.first + off, ij.second + off}, m);
    for (auto& [ij, m] : f.comp) r.diff.emplace(std::pair{ij.first, ij.second + off}, m);
    return r;
}

// ---------------------------------------------------------------------------
// Tensor (vertical) and hstack (horizontal) of complexes

namespace detail {

// Koszul sign for the second factor's differential: parity of the first
// factor object's t-degree counted in whole steps from the complex's lowest
// t-coset representative.
template <class R>
std::vector<int> koszul_parity(const Complex<R>& c) {
    std::vector<int> par(c.obj.size(), 0);
    if (c.obj.empty()) return par;
    int ref = c.obj.front().deg.t2;
    for (auto& o : c.obj) ref = std::min(ref, o.deg.t2);
    for (size_t i = 0; i < c.obj.size(); ++i) {
        int steps = c.obj[i].deg.t2 - ref;
        require(steps % 2 == 0, "tensor factor is not t-coherent");
        par[i] = (steps / 2) % 2;
    }
    return par;
}

template <class R, class ObjOp, class MorOp>
Complex<R> bicomplex(const Complex<R>& a, const Complex<R>& b, ObjOp&& obj_op, MorOp&& mor_op) {
    Complex<R> r;
    std::vector<int> par = koszul_parity(a);
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            index[{i, j}] = r.size();
            r.obj.push_back(obj_op(a.obj[i], b.obj[j]));
        }
    for (auto& [ij, m] : a.diff) {
        auto [i, i2] = ij;
        for (int j = 0; j < b.size(); ++j) {
            Morphism<R> e = mor_op(m, identity_morphism<R>(b.obj[j].tangle));
            r.add_entry(index[{i, j}], index[{i2, j}], e);
        }
    }
    for (auto& [ij, m] : b.diff) {
        auto [j, j2] = ij;
        for (int i = 0; i < a.size(); ++i) {
            Morphism<R> e = mor_op(identity_morphism<R>(a.obj[i].tangle), m);
            r.add_entry(index[{i, j}], index[{i, j2}], par[i] ? -e : e);
        }
    }
    return r;
}

}  // namespace detail

// Tensor of complexes: b stacked on top of a. Circles created by gluing
// remain on the objects; callers deloop immediately afterwards.
template <class R>
Complex<R> tensor(const Complex<R>& a, const Complex<R>& b) {
    Complex<R> r = detail::bicomplex(
        a, b,
        [](const GradedObject& x, const GradedObject& y) {
            return GradedObject{x.deg + y.deg, glue(x.tangle, y.tangle).glued};
        },
        [](const Morphism<R>& f, const Morphism<R>& g) { return tensor_morphism(f, g); });
    long long hi = std::min(checked_add(a.t_base2(), b.window.hi2 >= Window::pos_inf ? Window::pos_inf : b.window.hi2),
                            checked_add(b.t_base2(), a.window.hi2 >= Window::pos_inf ? Window::pos_inf : a.window.hi2));
    long long lo = (a.window.lo2 <= Window::neg_inf || b.window.lo2 <= Window::neg_inf)
                       ? Window::neg_inf
                       : a.window.lo2 + b.window.lo2;
    r.window = Window{lo, std::min<long long>(hi, Window::pos_inf)};
    if (r.window.bounded_above() || r.window.lo2 > Window::neg_inf) r = truncate(r, r.window);
    return r;
}

// Horizontal composition of complexes (side by side).
template <class R>
Complex<R> hstack_complex(const Complex<R>& a, const Complex<R>& b) {
    Complex<R> r = detail::bicomplex(
        a, b,
        [](const GradedObject& x, const GradedObject& y) {
            return GradedObject{x.deg + y.deg, hstack(x.tangle, y.tangle)};
        },
        [](const Morphism<R>& f, const Morphism<R>& g) { return hstack_morphism(f, g); });
    long long hi = std::min(checked_add(a.t_base2(), b.window.hi2 >= Window::pos_inf ? Window::pos_inf : b.window.hi2),
                            checked_add(b.t_base2(), a.window.hi2 >= Window::pos_inf ? Window::pos_inf : a.window.hi2));
    long long lo = (a.window.lo2 <= Window::neg_inf || b.window.lo2 <= Window::neg_inf)
                       ? Window::neg_inf
                       : a.window.lo2 + b.window.lo2;
    r.window = Window{lo, std::min<long long>(hi, Window::pos_inf)};
    if (r.window.bounded_above() || r.window.lo2 > Window::neg_inf) r = truncate(r, r.window);
    return r;
}

// ---------------------------------------------------------------------------
// Graded Euler characteristic
//
// Tangle-valued: sum over objects of (-1)^{floor(t)} q^{deg_q} times the
// tangle, with circles contributing a factor (q + q^{-1}). Returned as a map
// tangle -> Laurent polynomial in q (exponent -> coefficient), plus the
// t-parity marker of the complex.

struct EulerChar {
    int t_parity = 0;  // 0: integral t; 1: t in Z + 1/2
    std::map<FlatTangle, std::map<int, long long>> terms;

    void add(const FlatTangle& t, int qexp, long long coef) {
        auto& poly = terms[t];
        poly[qexp] = checked_add(poly.count(qexp) ? poly[qexp] : 0, coef);
        if (poly[qexp] == 0) poly.erase(qexp);
        if (poly.empty()) terms.erase(t);
    }

    bool operator==(const EulerChar&) const = default;
};

template <class R>
EulerChar euler_char(const Complex<R>& c) {
    EulerChar e;
    if (c.obj.empty()) return e;
    e.t_parity = c.obj.front().deg.t_parity();
    for (auto& o : c.obj) {
        require(o.deg.t_parity() == e.t_parity, "euler_char: complex is not t-coherent");
        // floor(t) = (t2 - parity) / 2
        int fl = (o.deg.t2 - e.t_parity) / 2;
        long long sign = (fl % 2 + 2) % 2 == 0 ? 1 : -1;
        FlatTangle bare = o.tangle;
        bare.circles = 0;
        // Each circle contributes q + q^{-1}.
        std::vector<std::pair<int, long long>> poly{{0, sign}};
        for (int i = 0; i < o.tangle.circles; ++i) {
            std::vector<std::pair<int, long long>> next;
            for (auto& [ex, cf] : poly) {
                next.push_back({ex + 1, cf});
                next.push_back({ex - 1, cf});
            }
            poly = std::move(next);
        }
        for (auto& [ex, cf] : poly) e.add(bare, o.deg.q + ex, cf);
    }
    return e;
}

}  // namespace skein
