#pragma once

#include <array>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skein/base.hpp"

namespace skein {

// A braid word on `strands` strands; letters are +/-i for sigma_i^{+/-1},
// 1 <= i < strands.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    bool operator==(const BraidWord&) const = default;

    BraidWord operator*(const BraidWord& o) const {
        require(strands == o.strands, "braid product: strand mismatch");
        BraidWord r = *this;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }
    BraidWord inverse() const {
        BraidWord r{strands, {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
        return r;
    }
    BraidWord pow(int k) const {
        BraidWord base = k >= 0 ? *this : inverse();
        BraidWord r{strands, {}};
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = r * base;
        return r;
    }
    int writhe() const {
        int w = 0;
        for (int l : letters) w += l > 0 ? 1 : -1;
        return w;
    }
};

inline void validate_braid(const BraidWord& w) {
    require(w.strands >= 1, "braid needs at least one strand");
    for (int l : w.letters) {
        int i = l > 0 ? l : -l;
        require(l != 0 && i >= 1 && i < w.strands, "braid letter index out of range");
    }
}

// "s1 s2^-1 s1" style words.
inline BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord w{strands, {}};
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        require(tok.size() >= 2 && (tok[0] == 's' || tok[0] == 'S'), "bad braid token: " + tok);
        size_t caret = tok.find('^');
        int idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        int exp = 1;
        if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
        require(exp == 1 || exp == -1, "braid letter exponent must be +/-1");
        w.letters.push_back(exp * idx);
    }
    validate_braid(w);
    return w;
}

inline std::string braid_to_string(const BraidWord& w) {
    std::string s;
    for (int l : w.letters) {
        if (!s.empty()) s += " ";
        s += "s" + std::to_string(l > 0 ? l : -l) + (l < 0 ? "^-1" : "");
    }
    return s;
}

// Underlying permutation, mapping bottom position -> top position (0-based).
inline std::vector<int> braid_permutation(const BraidWord& w) {
    std::vector<int> pos(static_cast<size_t>(w.strands));
    for (int i = 0; i < w.strands; ++i) pos[static_cast<size_t>(i)] = i;
    // pos[strand] = current position; crossings swap occupants of (i-1, i).
    std::vector<int> at(static_cast<size_t>(w.strands));
    for (int i = 0; i < w.strands; ++i) at[static_cast<size_t>(i)] = i;
    for (int l : w.letters) {
        int i = (l > 0 ? l : -l) - 1;
        std::swap(at[static_cast<size_t>(i)], at[static_cast<size_t>(i + 1)]);
    }
    std::vector<int> perm(static_cast<size_t>(w.strands));
    for (int p = 0; p < w.strands; ++p) perm[static_cast<size_t>(at[static_cast<size_t>(p)])] = p;
    return perm;
}

inline BraidWord q_braid(int n) {
    BraidWord w{n, {}};
    for (int i = n - 1; i >= 1; --i) w.letters.push_back(i);
    return w;
}

inline BraidWord full_twist(int n) { return q_braid(n).pow(n); }

// Blackboard-framed cabling: every letter becomes the c^2-crossing block
// braid transposing two adjacent width-c cables.
inline BraidWord cable(const BraidWord& w, int c) {
    require(c >= 1, "cable width must be positive");
    BraidWord r{w.strands * c, {}};
    for (int l : w.letters) {
        int i = (l > 0 ? l : -l);
        int base = (i - 1) * c;  // 0-based leftmost strand of the left cable
        std::vector<int> block;
        for (int a = 1; a <= c; ++a)
            for (int s = base + c + a - 1; s >= base + a; --s) block.push_back(s);
        if (l > 0) {
            r.letters.insert(r.letters.end(), block.begin(), block.end());
        } else {
            for (auto it = block.rbegin(); it != block.rend(); ++it) r.letters.push_back(-*it);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Sliced tangle diagrams

struct Slice {
    enum Kind { crossing, cap, cup } kind;
    int i = 0;     // 0-based position
    int sign = 1;  // crossings only
};

struct SlicedTangle {
    int bottom = 0;  // boundary points at the bottom
    std::vector<Slice> slices;

    int top() const {
        int w = bottom;
        for (auto& s : slices) {
            if (s.kind == Slice::cap) w -= 2;
            if (s.kind == Slice::cup) w += 2;
        }
        return w;
    }
    int crossing_count() const {
        int c = 0;
        for (auto& s : slices) c += s.kind == Slice::crossing ? 1 : 0;
        return c;
    }
};

inline void validate_sliced(const SlicedTangle& t) {
    int w = t.bottom;
    require(w >= 0, "negative boundary");
    for (auto& s : t.slices) {
        switch (s.kind) {
            case Slice::crossing:
                require(s.i >= 0 && s.i + 1 < w, "crossing out of range");
                require(s.sign == 1 || s.sign == -1, "crossing sign");
                break;
            case Slice::cap:
                require(s.i >= 0 && s.i + 1 < w, "cap out of range");
                w -= 2;
                break;
            case Slice::cup:
                require(s.i >= 0 && s.i <= w, "cup out of range");
                w += 2;
                break;
        }
    }
}

inline SlicedTangle from_braid(const BraidWord& w) {
    SlicedTangle t;
    t.bottom = w.strands;
    for (int l : w.letters) t.slices.push_back({Slice::crossing, (l > 0 ? l : -l) - 1, l > 0 ? 1 : -1});
    return t;
}

// One kink (Reidemeister-1 curl) on a single strand.
inline SlicedTangle kink(int sign) {
    SlicedTangle t;
    t.bottom = 1;
    t.slices.push_back({Slice::cup, 1, 0});
    t.slices.push_back({Slice::crossing, 0, sign});
    t.slices.push_back({Slice::cap, 1, 0});
    return t;
}

// Kink of a width-c cable (c^2 crossings between nested cups/caps); the
// blackboard cabling of kink(sign).
inline SlicedTangle fat_kink(int c, int sign) {
    SlicedTangle t;
    t.bottom = c;
    for (int k = 0; k < c; ++k) t.slices.push_back({Slice::cup, c + k, 0});
    BraidWord one{2, {sign > 0 ? 1 : -1}};
    BraidWord blocks = cable(one, c);
    for (int l : blocks.letters) t.slices.push_back({Slice::crossing, (l > 0 ? l : -l) - 1, l > 0 ? 1 : -1});
    for (int k = 2 * c - 1; k >= c; --k) t.slices.push_back({Slice::cap, k, 0});
    validate_sliced(t);
    return t;
}

// Trace closure of a braid: rainbow of nested cups on the left, the braid
// acting on the right half, then nested caps.
inline SlicedTangle trace_closure(const BraidWord& w) {
    SlicedTangle t;
    t.bottom = 0;
    int n = w.strands;
    for (int k = 0; k < n; ++k) t.slices.push_back({Slice::cup, k, 0});
    for (int l : w.letters) t.slices.push_back({Slice::crossing, n + (l > 0 ? l : -l) - 1, l > 0 ? 1 : -1});
    for (int k = 0; k < n; ++k) t.slices.push_back({Slice::cap, n - 1 - k, 0});
    validate_sliced(t);
    return t;
}

// ---------------------------------------------------------------------------
// Integer 2x2 matrices and the B_3 -> PSL(2,Z) witness homomorphism.

struct IntMatrix2 {
    std::array<std::array<long long, 2>, 2> a{{{1, 0}, {0, 1}}};

    static IntMatrix2 identity() { return {}; }
    IntMatrix2 operator*(const IntMatrix2& o) const {
        IntMatrix2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.a[i][j] = checked_add(checked_mul(a[i][0], o.a[0][j]), checked_mul(a[i][1], o.a[1][j]));
        return r;
    }
    IntMatrix2 operator-() const {
        IntMatrix2 r = *this;
        for (auto& row : r.a)
            for (auto& x : row) x = -x;
        return r;
    }
    long long det() const { return checked_add(checked_mul(a[0][0], a[1][1]), -checked_mul(a[0][1], a[1][0])); }
    bool operator==(const IntMatrix2&) const = default;
};

inline IntMatrix2 braid_to_psl2z(const BraidWord& w) {
    require(w.strands == 3, "matrix shadow is defined on 3 strands");
    IntMatrix2 s1{{{{1, 1}, {0, 1}}}};
    IntMatrix2 s2{{{{1, 0}, {-1, 1}}}};
    IntMatrix2 s1i{{{{1, -1}, {0, 1}}}};
    IntMatrix2 s2i{{{{1, 0}, {1, 1}}}};
    IntMatrix2 m = IntMatrix2::identity();
    for (int l : w.letters) {
        switch (l) {
            case 1: m = m * s1; break;
            case -1: m = m * s1i; break;
            case 2: m = m * s2; break;
            case -2: m = m * s2i; break;
            default: throw error("bad letter");
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Bounded rewriting search on braid words: free cancellation, far
// commutation and the braid relation, breadth-first with a state budget.

struct RewriteOutcome {
    bool equal = false;
    bool exhausted = false;  // budget ran out before meeting
    long long states = 0;
};

namespace detail {
inline std::vector<std::vector<int>> braid_neighbors(const std::vector<int>& w, int strands) {
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(w.size());
    // free cancellation
    for (int i = 0; i + 1 < n; ++i)
        if (w[i] == -w[i + 1]) {
            std::vector<int> v;
            v.reserve(w.size() - 2);
            v.insert(v.end(), w.begin(), w.begin() + i);
            v.insert(v.end(), w.begin() + i + 2, w.end());
            out.push_back(std::move(v));
        }
    // far commutation
    for (int i = 0; i + 1 < n; ++i) {
        int a = std::abs(w[i]), b = std::abs(w[i + 1]);
        if (std::abs(a - b) >= 2) {
            std::vector<int> v = w;
            std::swap(v[i], v[i + 1]);
            out.push_back(std::move(v));
        }
    }
    // braid relation aba -> bab (both orientations, matching signs)
    for (int i = 0; i + 2 < n; ++i) {
        int a = w[i], b = w[i + 1], c = w[i + 2];
        if (a == c && a != b && std::abs(std::abs(a) - std::abs(b)) == 1 && (a > 0) == (b > 0)) {
            std::vector<int> v = w;
            v[i] = b;
            v[i + 1] = a;
            v[i + 2] = b;
            out.push_back(std::move(v));
        }
    }
    (void)strands;
    return out;
}
}  // namespace detail

inline RewriteOutcome braid_words_equal_bounded(const BraidWord& u, const BraidWord& v, long long budget = 100000) {
    require(u.strands == v.strands, "strand mismatch");
    RewriteOutcome out;
    if (u.letters == v.letters) {
        out.equal = true;
        return out;
    }
    std::set<std::vector<int>> seen_u{u.letters}, seen_v{v.letters};
    std::queue<std::vector<int>> qu, qv;
    qu.push(u.letters);
    qv.push(v.letters);
    auto meets = [&](const std::vector<int>& w, const std::set<std::vector<int>>& other) {
        return other.count(w) > 0;
    };
    while ((!qu.empty() || !qv.empty()) && out.states < budget) {
        for (auto* side : {&qu, &qv}) {
            if (side->empty()) continue;
            auto cur = side->front();
            side->pop();
            auto& mine = side == &qu ? seen_u : seen_v;
            auto& theirs = side == &qu ? seen_v : seen_u;
            for (auto& nb : detail::braid_neighbors(cur, u.strands)) {
                if (mine.count(nb)) continue;
                ++out.states;
                if (meets(nb, theirs)) {
                    out.equal = true;
                    return out;
                }
                mine.insert(nb);
                side->push(nb);
            }
        }
    }
    out.exhausted = out.states >= budget;
    return out;
}

}  // namespace skein
