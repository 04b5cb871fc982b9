#pragma once

#include <gmpxx.h>

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

// Arbitrary-precision coefficients for the decategorified oracle;
// intermediate cross-products of rational functions outgrow fixed width.
template <>
struct ring_traits<mpz_class> {
    static constexpr bool is_field = false;
    static const char* name() { return "ZZ"; }
    static bool is_zero(const mpz_class& x) { return x == 0; }
    static bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
    static mpz_class unit_inverse(const mpz_class& x) {
        require(is_unit(x), "not a unit integer");
        return x;
    }
    static std::string str(const mpz_class& x) { return x.get_str(); }
};

template <>
struct ring_traits<mpq_class> {
    static constexpr bool is_field = true;
    static const char* name() { return "QQ"; }
    static bool is_zero(const mpq_class& x) { return x == 0; }
    static bool is_unit(const mpq_class& x) { return x != 0; }
    static mpq_class unit_inverse(const mpq_class& x) {
        require(x != 0, "inverse of zero");
        return 1 / x;
    }
    static std::string str(const mpq_class& x) { return x.get_str(); }
};

// Sparse Laurent polynomial in one variable.
template <class C>
struct Laurent {
    std::map<int, C> c;  // exponent -> coefficient

    Laurent() = default;
    Laurent(C constant) {
        if (!ring_traits<C>::is_zero(constant)) c[0] = constant;
    }
    static Laurent monomial(C coef, int exp) {
        Laurent p;
        if (!ring_traits<C>::is_zero(coef)) p.c[exp] = coef;
        return p;
    }

    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c.begin()->first == 0 && c.begin()->second == C(1); }
    int lowest() const {
        require(!is_zero(), "lowest exponent of zero");
        return c.begin()->first;
    }
    int highest() const {
        require(!is_zero(), "highest exponent of zero");
        return c.rbegin()->first;
    }
    bool is_monomial() const { return c.size() == 1; }

    void prune() {
        for (auto it = c.begin(); it != c.end();)
            it = ring_traits<C>::is_zero(it->second) ? c.erase(it) : std::next(it);
    }

    Laurent operator+(const Laurent& o) const {
        Laurent r = *this;
        for (auto& [e, v] : o.c) {
            auto [it, fresh] = r.c.try_emplace(e, v);
            if (!fresh) it->second += v;
        }
        r.prune();
        return r;
    }
    Laurent operator-() const {
        Laurent r = *this;
        for (auto& [e, v] : r.c) v = -v;
        return r;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }
    Laurent operator*(const Laurent& o) const {
        Laurent r;
        for (auto& [e1, v1] : c)
            for (auto& [e2, v2] : o.c) {
                auto [it, fresh] = r.c.try_emplace(e1 + e2, v1 * v2);
                if (!fresh) it->second += v1 * v2;
            }
        r.prune();
        return r;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent shifted(int exp) const {
        Laurent r;
        for (auto& [e, v] : c) r.c[e + exp] = v;
        return r;
    }
    bool operator==(const Laurent&) const = default;

    // Canonical "c_k*A^k + ..." form, ascending exponents.
    std::string str(const std::string& var = "A") const {
        if (c.empty()) return "0";
        std::string out;
        for (auto& [e, v] : c) {
            if (!out.empty()) out += " + ";
            out += ring_traits<C>::str(v);
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }
};

using LaurentZ = Laurent<Zc>;
using LaurentQ = Laurent<Qc>;
using LaurentZZ = Laurent<mpz_class>;
using LaurentQQ = Laurent<mpq_class>;

// Dense integer polynomial helpers; the primitive remainder sequence with
// per-step content division keeps gcd intermediates manageable.
namespace prs {

using ZPoly = std::vector<mpz_class>;  // index = exponent

inline void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline mpz_class content(const ZPoly& p) {
    mpz_class g = 0;
    for (const mpz_class& x : p) g = gcd(g, x);
    return g == 0 ? mpz_class(1) : abs(g);
}

inline ZPoly from_laurentzz(const LaurentZZ& p) {
    require(!p.is_zero(), "prs on zero polynomial");
    int lo = p.lowest();
    ZPoly z(static_cast<size_t>(p.highest() - lo + 1), mpz_class(0));
    for (auto& [e, v] : p.c) z[static_cast<size_t>(e - lo)] = v;
    return z;
}

inline LaurentZZ to_laurentzz(const ZPoly& p) {
    LaurentZZ out;
    for (size_t e = 0; e < p.size(); ++e)
        if (p[e] != 0) out.c[static_cast<int>(e)] = p[e];
    return out;
}

// Remainder of a by b up to content.
inline ZPoly reduce_mod(ZPoly a, const ZPoly& b) {
    trim(a);
    require(!b.empty(), "reduction by zero polynomial");
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        mpz_class la = a.back();
        mpz_class g = gcd(la, lb);
        mpz_class fa = lb / g, fb = la / g;
        size_t shift = a.size() - b.size();
        for (auto& x : a) x *= fa;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= fb * b[i];
        trim(a);
        if (a.empty()) break;
        mpz_class c = content(a);
        if (c > 1)
            for (auto& x : a) x /= c;
    }
    return a;
}

inline ZPoly gcd_primitive(ZPoly a, ZPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZPoly r = reduce_mod(a, b);
        mpz_class c = content(r);
        for (auto& x : r) x /= c;
        a = std::move(b);
        b = std::move(r);
    }
    mpz_class c = content(a);
    for (auto& x : a) x /= c;
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

// Certificate that two integer polynomials share no factor: if their values
// at a point have integer gcd 1, any common divisor evaluates to a unit
// there; checking a second point makes that combination not worth a full
// gcd. This only skips reductions, never changes results.
inline bool likely_coprime(const ZPoly& a, const ZPoly& b) {
    auto eval = [](const ZPoly& p, long x) {
        mpz_class acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (long x : {3L, 5L}) {
        mpz_class va = eval(a, x), vb = eval(b, x);
        if (va == 0 || vb == 0) return false;
        if (gcd(va, vb) == 1) return true;
    }
    return false;
}

// Exact division a / b (b must divide a).
inline ZPoly divide_exact(ZPoly a, const ZPoly& b) {
    trim(a);
    require(!b.empty(), "divide by zero polynomial");
    if (a.empty()) return {};
    require(a.size() >= b.size(), "inexact polynomial division");
    ZPoly q(a.size() - b.size() + 1, mpz_class(0));
    while (!a.empty() && a.size() >= b.size()) {
        mpz_class la = a.back();
        require(la % b.back() == 0, "inexact polynomial division");
        mpz_class f = la / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    require(a.empty(), "inexact polynomial division");
    return q;
}

}  // namespace prs

// Rational function num/den over integer Laurent polynomials, kept in the
// canonical form: den has lowest exponent 0 and positive leading
// coefficient; num and den are coprime with coprime contents.
struct RatFn {
    LaurentZZ num;
    LaurentZZ den = LaurentZZ(mpz_class(1));

    RatFn() = default;
    RatFn(long long k) : num(LaurentZZ(mpz_class(static_cast<long>(k)))) {}
    RatFn(LaurentZZ n) : num(std::move(n)) {}
    RatFn(LaurentZZ n, LaurentZZ d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    static RatFn monomial(long long coef, int exp) {
        return RatFn(LaurentZZ::monomial(mpz_class(static_cast<long>(coef)), exp));
    }

    void normalize() {
        require(!den.is_zero(), "rational function with zero denominator");
        if (num.is_zero()) {
            den = LaurentZZ(mpz_class(1));
            return;
        }
        int shift = den.lowest();
        den = den.shifted(-shift);
        num = num.shifted(-shift);
        if (!den.is_one()) {
            int num_lo = num.lowest();
            prs::ZPoly zn = prs::from_laurentzz(num);
            prs::ZPoly zd = prs::from_laurentzz(den);
            mpz_class cn = prs::content(zn), cd = prs::content(zd);
            mpz_class cg = gcd(cn, cd);
            for (auto& x : zn) x /= cg;
            for (auto& x : zd) x /= cg;
            prs::ZPoly pn = zn;
            for (auto& x : pn) x /= cn / cg;  // primitive part for the gcd
            prs::ZPoly pd = zd;
            for (auto& x : pd) x /= cd / cg;
            if (!prs::likely_coprime(pn, pd)) {
                prs::ZPoly g = prs::gcd_primitive(pn, pd);
                if (g.size() > 1) {
                    zn = prs::divide_exact(zn, g);
                    zd = prs::divide_exact(zd, g);
                }
            }
            if (!zd.empty() && zd.back() < 0) {
                for (auto& x : zn) x = -x;
                for (auto& x : zd) x = -x;
            }
            num = prs::to_laurentzz(zn).shifted(num_lo);
            den = prs::to_laurentzz(zd);
            int s2 = den.lowest();
            if (s2 != 0) {
                den = den.shifted(-s2);
                num = num.shifted(-s2);
            }
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_monomial() const { return den.is_one() && num.is_monomial(); }

    RatFn operator+(const RatFn& o) const {
        if (den == o.den) return RatFn(num + o.num, den);
        return RatFn(num * o.den + o.num * den, den * o.den);
    }
    RatFn operator-() const {
        RatFn r = *this;
        r.num = -r.num;
        return r;
    }
    RatFn operator-(const RatFn& o) const { return *this + (-o); }
    RatFn operator*(const RatFn& o) const {
        if (den.is_one() && o.den.is_one()) {
            RatFn r;
            r.num = num * o.num;
            return r;
        }
        return RatFn(num * o.num, den * o.den);
    }
    RatFn inverse() const {
        require(!is_zero(), "inverse of zero rational function");
        return RatFn(den, num);
    }
    RatFn operator/(const RatFn& o) const { return *this * o.inverse(); }
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    // exact equality via cross-multiplication (robust to any skipped
    // reduction)
    bool operator==(const RatFn& o) const { return num * o.den == o.num * den; }

    std::string str(const std::string& var = "A") const {
        if (den.is_one()) return num.str(var);
        return "(" + num.str(var) + ") / (" + den.str(var) + ")";
    }

    // Laurent series in descending exponents down to (and including) min_exp.
    LaurentQQ series_descending(int min_exp) const {
        if (num.is_zero()) return {};
        LaurentQQ rest;
        for (auto& [e, v] : num.c) rest.c[e] = mpq_class(v);
        LaurentQQ d;
        for (auto& [e, v] : den.c) d.c[e] = mpq_class(v);
        LaurentQQ out;
        int dh = d.highest();
        mpq_class dlead = d.c.rbegin()->second;
        while (!rest.is_zero() && rest.highest() - dh >= min_exp) {
            int e = rest.highest() - dh;
            mpq_class f = rest.c.rbegin()->second / dlead;
            out.c[e] = f;
            rest -= d.shifted(e) * LaurentQQ(f);
        }
        out.prune();
        return out;
    }
};

template <>
struct ring_traits<RatFn> {
    static constexpr bool is_field = true;
    static const char* name() { return "Q(A)"; }
    static bool is_zero(const RatFn& x) { return x.is_zero(); }
    static bool is_unit(const RatFn& x) { return !x.is_zero(); }
    static RatFn unit_inverse(const RatFn& x) { return x.inverse(); }
    static std::string str(const RatFn& x) { return x.str(); }
};

template <class C>
struct ring_traits<Laurent<C>> {
    static constexpr bool is_field = false;
    static const char* name() { return "Laurent"; }
    static bool is_zero(const Laurent<C>& x) { return x.is_zero(); }
    static bool is_unit(const Laurent<C>& x) {
        return x.is_monomial() && ring_traits<C>::is_unit(x.c.begin()->second);
    }
    static Laurent<C> unit_inverse(const Laurent<C>& x) {
        require(is_unit(x), "not a unit Laurent polynomial");
        return Laurent<C>::monomial(ring_traits<C>::unit_inverse(x.c.begin()->second), -x.c.begin()->first);
    }
    static std::string str(const Laurent<C>& x) { return x.str(); }
};

}  // namespace skein
