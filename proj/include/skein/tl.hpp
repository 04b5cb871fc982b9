#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skein/braid.hpp"
#include "skein/complex.hpp"
#include "skein/laurent.hpp"
#include "skein/tangle.hpp"

namespace skein {

// Value of a closed circle. The Kauffman-variable oracle uses
// delta = -A^2 - A^{-2}; the Euler-characteristic shadow over Laurent
// polynomials in q uses q + q^{-1}.
template <class Coef>
Coef circle_value();

template <>
inline RatFn circle_value<RatFn>() {
    LaurentZZ d;
    d.c[2] = mpz_class(-1);
    d.c[-2] = mpz_class(-1);
    return RatFn(d);
}

template <>
inline LaurentZ circle_value<LaurentZ>() {
    LaurentZ d;
    d.c[1] = Zc(1);
    d.c[-1] = Zc(1);
    return d;
}

// Exact Temperley-Lieb element: a linear combination of crossingless
// matchings of a (nb, nt)-boundary.
template <class Coef>
struct TLElement {
    int nb = 0, nt = 0;
    std::map<FlatTangle, Coef> terms;

    bool is_zero() const { return terms.empty(); }

    void prune() {
        for (auto it = terms.begin(); it != terms.end();)
            it = ring_traits<Coef>::is_zero(it->second) ? terms.erase(it) : std::next(it);
    }

    void add(const FlatTangle& t, const Coef& c) {
        auto [it, fresh] = terms.try_emplace(t, c);
        if (!fresh) it->second += c;
        if (ring_traits<Coef>::is_zero(it->second)) terms.erase(it);
    }

    TLElement operator+(const TLElement& o) const {
        require(nb == o.nb && nt == o.nt, "TL sum: boundary mismatch");
        TLElement r = *this;
        for (auto& [t, c] : o.terms) r.add(t, c);
        return r;
    }
    TLElement operator-() const {
        TLElement r = *this;
        for (auto& [t, c] : r.terms) c = -c;
        return r;
    }
    TLElement operator-(const TLElement& o) const { return *this + (-o); }
    TLElement operator*(const Coef& s) const {
        TLElement r = *this;
        for (auto& [t, c] : r.terms) c = c * s;
        r.prune();
        return r;
    }
    bool operator==(const TLElement&) const = default;
};

template <class Coef>
TLElement<Coef> tl_identity(int n) {
    TLElement<Coef> x;
    x.nb = x.nt = n;
    x.terms[identity_tangle(n)] = Coef(1);
    return x;
}

template <class Coef>
TLElement<Coef> tl_diagram(const FlatTangle& t) {
    TLElement<Coef> x;
    x.nb = t.nb;
    x.nt = t.nt;
    x.terms[t] = Coef(1);
    return x;
}

// Bilinear extension of gluing; each closed circle contributes delta.
template <class Coef>
TLElement<Coef> tl_multiply(const TLElement<Coef>& x, const TLElement<Coef>& y) {
    require(x.nt == y.nb, "TL product: boundary mismatch");
    TLElement<Coef> r;
    r.nb = x.nb;
    r.nt = y.nt;
    Coef delta = circle_value<Coef>();
    for (auto& [t1, c1] : x.terms)
        for (auto& [t2, c2] : y.terms) {
            auto [glued, circles] = glue_flat(t1, t2);
            Coef c = c1 * c2;
            for (int k = 0; k < circles; ++k) c = c * delta;
            r.add(glued, c);
        }
    r.prune();
    return r;
}

template <class Coef>
TLElement<Coef> tl_hstack(const TLElement<Coef>& x, const TLElement<Coef>& y) {
    TLElement<Coef> r;
    r.nb = x.nb + y.nb;
    r.nt = x.nt + y.nt;
    for (auto& [t1, c1] : x.terms)
        for (auto& [t2, c2] : y.terms) r.add(hstack(t1, t2), c1 * c2);
    r.prune();
    return r;
}

// ---------------------------------------------------------------------------
// Kauffman bracket state sum: a positive crossing resolves to
// A * (identity) + A^{-1} * (cup-cap).

inline TLElement<RatFn> kauffman_bracket(const SlicedTangle& t) {
    validate_sliced(t);
    TLElement<RatFn> x = tl_identity<RatFn>(t.bottom);
    int w = t.bottom;
    for (auto& s : t.slices) {
        switch (s.kind) {
            case Slice::crossing: {
                TLElement<RatFn> cr;
                cr.nb = cr.nt = w;
                cr.add(identity_tangle(w), RatFn::monomial(1, s.sign > 0 ? 1 : -1));
                cr.add(cupcap_tangle(w, s.i), RatFn::monomial(1, s.sign > 0 ? -1 : 1));
                x = tl_multiply(x, cr);
                break;
            }
            case Slice::cap:
                x = tl_multiply(x, tl_diagram<RatFn>(cap_tangle(w, s.i)));
                w -= 2;
                break;
            case Slice::cup:
                x = tl_multiply(x, tl_diagram<RatFn>(cup_tangle(w, s.i)));
                w += 2;
                break;
        }
    }
    return x;
}

inline TLElement<RatFn> kauffman_bracket(const BraidWord& w) { return kauffman_bracket(from_braid(w)); }

// ---------------------------------------------------------------------------
// Jones-Wenzl projectors via the Wenzl recursion with Chebyshev coefficients:
// p_{k+1} = (p_k (+) 1) - (S_{k-1}/S_k) (p_k (+) 1) e_k (p_k (+) 1),
// S_0 = 1, S_1 = delta, S_{k+1} = delta S_k - S_{k-1}.

inline const TLElement<RatFn>& jones_wenzl(int n) {
    static std::map<int, TLElement<RatFn>> cache;
    require(n >= 1, "jones_wenzl needs n >= 1");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n == 1) return cache.emplace(1, tl_identity<RatFn>(1)).first->second;

    const TLElement<RatFn>& prev = jones_wenzl(n - 1);
    RatFn delta = circle_value<RatFn>();
    std::vector<RatFn> cheb{RatFn(1), delta};
    for (int k = 2; k < n; ++k) cheb.push_back(delta * cheb[static_cast<size_t>(k - 1)] - cheb[static_cast<size_t>(k - 2)]);
    TLElement<RatFn> padded = tl_hstack(prev, tl_identity<RatFn>(1));
    TLElement<RatFn> ek = tl_diagram<RatFn>(cupcap_tangle(n, n - 2));
    RatFn mu = cheb[static_cast<size_t>(n - 2)] / cheb[static_cast<size_t>(n - 1)];
    TLElement<RatFn> p = padded - tl_multiply(tl_multiply(padded, ek), padded) * mu;
    p.prune();
    return cache.emplace(n, std::move(p)).first->second;
}

// ---------------------------------------------------------------------------
// Through-degree idempotents as full-twist eigenprojections.

inline std::vector<int> through_degrees(int n) {
    std::vector<int> ks;
    for (int k = n % 2; k <= n; k += 2) ks.push_back(k);
    return ks;
}

// Reference diagram of through-degree k: k strands then (n-k)/2 cup-caps.
inline FlatTangle through_reference_diagram(int n, int k) {
    FlatTangle t = identity_tangle(k);
    for (int j = 0; j < (n - k) / 2; ++j) t = hstack(t, cupcap_tangle(2, 0));
    return t;
}

// Full-twist eigenvalue on the through-degree-k block, extracted via the
// d0-coefficient trick: lower through-degree components of T * d0 expand in
// diagrams of smaller through-degree, which cannot contribute to d0 itself.
inline RatFn full_twist_block_eigenvalue(int n, int k) {
    require(k >= 0 && k <= n && (n - k) % 2 == 0, "bad through-degree");
    TLElement<RatFn> tw = kauffman_bracket(from_braid(full_twist(n)));
    FlatTangle d0 = through_reference_diagram(n, k);
    TLElement<RatFn> tx = tl_multiply(tl_diagram<RatFn>(d0), tw);
    auto num = tx.terms.find(d0);
    if (num == tx.terms.end()) return RatFn(0);
    return num->second;
}

struct ThroughProjectors {
    int n = 1;
    std::vector<int> k;                  // through-degrees, ascending
    std::vector<RatFn> eigenvalue;       // full-twist eigenvalue per block
    std::vector<TLElement<RatFn>> proj;  // pi_{n,k}
};

inline ThroughProjectors through_projectors(int n) {
    ThroughProjectors out;
    out.n = n;
    out.k = through_degrees(n);
    for (int k : out.k) out.eigenvalue.push_back(full_twist_block_eigenvalue(n, k));
    for (size_t a = 0; a < out.k.size(); ++a)
        for (size_t b = a + 1; b < out.k.size(); ++b)
            require(!(out.eigenvalue[a] == out.eigenvalue[b]), "full-twist eigenvalue collision");
    TLElement<RatFn> tw = kauffman_bracket(from_braid(full_twist(n)));
    for (size_t a = 0; a < out.k.size(); ++a) {
        TLElement<RatFn> p = tl_identity<RatFn>(n);
        for (size_t b = 0; b < out.k.size(); ++b) {
            if (a == b) continue;
            TLElement<RatFn> factor = tw - tl_identity<RatFn>(n) * out.eigenvalue[b];
            factor = factor * (out.eigenvalue[a] - out.eigenvalue[b]).inverse();
            p = tl_multiply(p, factor);
        }
        out.proj.push_back(std::move(p));
    }
    return out;
}

// Eigenvalue of the full twist on pi_{n,k}; must be a monomial +/-A^c.
inline RatFn full_twist_eigenvalue(int n, int k) {
    if (n == 1) {
        // one strand: the framed twist is the kink
        require(k == 1, "n=1 has only k=1");
        TLElement<RatFn> kk = kauffman_bracket(kink(+1));
        return kk.terms.at(identity_tangle(1));
    }
    RatFn lambda = full_twist_block_eigenvalue(n, k);
    require(lambda.is_monomial(), "full-twist eigenvalue is not a monomial");
    return lambda;
}

// ---------------------------------------------------------------------------
// Euler-characteristic bridge: q -> -A^{-2}, one global monomial allowed per
// comparison.

inline TLElement<LaurentQQ> bridge_to_kauffman_variable(const EulerChar& e) {
    TLElement<LaurentQQ> out;
    out.nb = -1;  // boundary inferred from terms
    for (auto& [t, poly] : e.terms) {
        out.nb = t.nb;
        out.nt = t.nt;
        LaurentQQ p;
        for (auto& [qexp, coef] : poly) {
            mpq_class sign = (qexp % 2 + 2) % 2 == 0 ? 1 : -1;
            p += LaurentQQ::monomial(sign * mpq_class(static_cast<long>(coef)), -2 * qexp);
        }
        if (!p.is_zero()) out.terms[t] = p;
    }
    return out;
}

struct BridgeReport {
    bool matched = false;
    bool monomial_found = false;
    int monomial_exp = 0;
    mpq_class monomial_coef{1};
    std::string detail;
};

// Compare diagram by diagram after expanding the oracle side as a Laurent
// series; only exponents >= min_exp participate (window truncation).
inline BridgeReport compare_bridged(const TLElement<LaurentQQ>& bridged, const TLElement<RatFn>& oracle,
                                    int min_exp, bool truncated) {
    BridgeReport rep;
    // find the normalization monomial on the first shared diagram
    for (auto& [t, p] : bridged.terms) {
        auto it = oracle.terms.find(t);
        if (it == oracle.terms.end()) continue;
        LaurentQQ series = it->second.series_descending(min_exp);
        if (series.is_zero() || p.is_zero()) continue;
        int e_b = p.highest();
        int e_o = series.highest();
        mpq_class c_b = p.c.rbegin()->second;
        mpq_class c_o = series.c.rbegin()->second;
        rep.monomial_found = true;
        rep.monomial_exp = e_o - e_b;
        rep.monomial_coef = c_o / c_b;
        break;
    }
    if (!rep.monomial_found) {
        rep.matched = bridged.terms.empty() && oracle.terms.empty();
        rep.detail = rep.matched ? "both sides empty" : "no shared diagram";
        return rep;
    }
    // check every diagram: oracle == monomial * bridged on the window
    std::map<FlatTangle, char> keys;
    for (auto& [t, p] : bridged.terms) keys[t] = 1;
    for (auto& [t, p] : oracle.terms) keys[t] = 1;
    for (auto& [t, ignored] : keys) {
        LaurentQQ lhs;
        if (auto it = oracle.terms.find(t); it != oracle.terms.end()) lhs = it->second.series_descending(min_exp);
        LaurentQQ rhs;
        if (auto it = bridged.terms.find(t); it != bridged.terms.end())
            rhs = (it->second * LaurentQQ::monomial(rep.monomial_coef, rep.monomial_exp));
        if (truncated) {
            // drop exponents below the window on both sides
            auto cut = [&](LaurentQQ& p) {
                for (auto it = p.c.begin(); it != p.c.end();)
                    it = it->first < min_exp ? p.c.erase(it) : std::next(it);
            };
            cut(lhs);
            cut(rhs);
        }
        if (!(lhs == rhs)) {
            rep.matched = false;
            rep.detail = "mismatch on " + t.str() + ": oracle " + lhs.str() + " vs bridged " + rhs.str();
            return rep;
        }
    }
    rep.matched = true;
    return rep;
}

// Full-precision comparison for finite complexes (no truncation).
inline BridgeReport compare_bridged_exact(const TLElement<LaurentQQ>& bridged, const TLElement<RatFn>& oracle) {
    int lo = 0;
    bool any = false;
    for (auto& [t, p] : oracle.terms) {
        require(p.den.is_one(), "exact bridge comparison needs polynomial oracle values");
        if (!p.num.is_zero()) {
            lo = any ? std::min(lo, p.num.lowest()) : p.num.lowest();
            any = true;
        }
    }
    for (auto& [t, p] : bridged.terms)
        if (!p.is_zero()) {
            lo = any ? std::min(lo, p.lowest()) : p.lowest();
            any = true;
        }
    return compare_bridged(bridged, oracle, lo - 64, false);
}

}  // namespace skein
