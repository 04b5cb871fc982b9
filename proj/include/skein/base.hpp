#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exceeded : error {
    using error::error;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw error(what);
}

// Exact arithmetic only: overflow is an error, never a silent wrap.
struct arithmetic_overflow : error {
    arithmetic_overflow() : error("exact integer overflow") {}
};

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw arithmetic_overflow{};
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow{};
    return r;
}

// Union-find over a fixed index range.
class Dsu {
  public:
    explicit Dsu(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

  private:
    std::vector<int> parent_;
};

// FNV-1a, used for config-manifest and cache-key hashing.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace skein
