#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <string>

#include "skein/base.hpp"

namespace skein {

// Bigrading (t, q) with t in (1/2)Z. t is stored doubled so that all
// arithmetic stays integral; q is an ordinary integer.
struct Degree {
    int t2 = 0;
    int q = 0;

    Degree() = default;
    Degree(int t_doubled, int q_) : t2(t_doubled), q(q_) {}

    Degree operator+(Degree o) const { return {t2 + o.t2, q + o.q}; }
    Degree operator-(Degree o) const { return {t2 - o.t2, q - o.q}; }
    Degree operator-() const { return {-t2, -q}; }
    Degree operator*(int k) const { return {t2 * k, q * k}; }
    bool operator==(const Degree&) const = default;
    auto operator<=>(const Degree&) const = default;

    // 0 for integral t, 1 for t in Z + 1/2.
    int t_parity() const { return ((t2 % 2) + 2) % 2; }

    std::string str() const {
        std::string t = (t2 % 2 == 0) ? std::to_string(t2 / 2) : std::to_string(t2) + "/2";
        return "(t=" + t + ", q=" + std::to_string(q) + ")";
    }
};

// Validity interval in t for truncated complexes, stored in half-steps.
// Sentinel values encode an unbounded side.
struct Window {
    static constexpr long long neg_inf = std::numeric_limits<long long>::min() / 4;
    static constexpr long long pos_inf = std::numeric_limits<long long>::max() / 4;

    long long lo2 = neg_inf;
    long long hi2 = pos_inf;

    static Window entire() { return {}; }
    static Window band(long long lo_doubled, long long hi_doubled) { return {lo_doubled, hi_doubled}; }

    bool is_entire() const { return lo2 <= neg_inf && hi2 >= pos_inf; }
    bool bounded_above() const { return hi2 < pos_inf; }
    bool contains(int t2) const { return t2 >= lo2 && t2 <= hi2; }
    bool empty() const { return lo2 > hi2; }

    Window shifted(int t2) const {
        Window w = *this;
        if (w.lo2 > neg_inf) w.lo2 += t2;
        if (w.hi2 < pos_inf) w.hi2 += t2;
        return w;
    }

    Window intersect(Window o) const { return {std::max(lo2, o.lo2), std::min(hi2, o.hi2)}; }

    bool operator==(const Window&) const = default;
};

}  // namespace skein
