#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "skein/base.hpp"

namespace skein {

// Coefficient rings. All arithmetic is exact; Z and Q detect overflow.

struct Zc {
    long long v = 0;

    Zc() = default;
    Zc(long long x) : v(x) {}

    Zc operator+(Zc o) const { return Zc{checked_add(v, o.v)}; }
    Zc operator-(Zc o) const { return Zc{checked_add(v, -o.v)}; }
    Zc operator*(Zc o) const { return Zc{checked_mul(v, o.v)}; }
    Zc operator-() const { return Zc{-v}; }
    Zc& operator+=(Zc o) { return *this = *this + o; }
    Zc& operator-=(Zc o) { return *this = *this - o; }
    Zc& operator*=(Zc o) { return *this = *this * o; }
    bool operator==(const Zc&) const = default;
    auto operator<=>(const Zc&) const = default;
};

struct Qc {
    long long num = 0;
    long long den = 1;

    Qc() = default;
    Qc(long long n) : num(n), den(1) {}
    Qc(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        require(den != 0, "rational with zero denominator");
        if (num == 0) {
            den = 1;
            return;
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        num /= g;
        den /= g;
    }

    Qc operator+(Qc o) const {
        long long g = std::gcd(den, o.den);
        long long l = checked_mul(den / g, o.den);
        return Qc{checked_add(checked_mul(num, l / den), checked_mul(o.num, l / o.den)), l};
    }
    Qc operator-(Qc o) const { return *this + (-o); }
    Qc operator*(Qc o) const {
        Qc a{num, o.den};
        Qc b{o.num, den};
        return Qc{checked_mul(a.num, b.num), checked_mul(a.den, b.den)};
    }
    Qc operator-() const {
        Qc r = *this;
        r.num = -r.num;
        return r;
    }
    Qc inverse() const {
        require(num != 0, "inverse of zero");
        return Qc{den, num};
    }
    Qc operator/(Qc o) const { return *this * o.inverse(); }
    Qc& operator+=(Qc o) { return *this = *this + o; }
    Qc& operator-=(Qc o) { return *this = *this - o; }
    Qc& operator*=(Qc o) { return *this = *this * o; }
    bool operator==(const Qc&) const = default;
    auto operator<=>(const Qc&) const = default;
};

struct F2c {
    unsigned char v = 0;

    F2c() = default;
    F2c(long long x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}

    F2c operator+(F2c o) const { return F2c{v ^ o.v}; }
    F2c operator-(F2c o) const { return F2c{v ^ o.v}; }
    F2c operator*(F2c o) const { return F2c{v & o.v}; }
    F2c operator-() const { return *this; }
    F2c& operator+=(F2c o) { return *this = *this + o; }
    F2c& operator-=(F2c o) { return *this = *this - o; }
    F2c& operator*=(F2c o) { return *this = *this * o; }
    bool operator==(const F2c&) const = default;
    auto operator<=>(const F2c&) const = default;
};

template <class R>
struct ring_traits;

template <>
struct ring_traits<Zc> {
    static constexpr bool is_field = false;
    static const char* name() { return "Z"; }
    static bool is_zero(Zc x) { return x.v == 0; }
    static bool is_unit(Zc x) { return x.v == 1 || x.v == -1; }
    static Zc unit_inverse(Zc x) {
        require(is_unit(x), "not a unit in Z");
        return x;
    }
    static std::string str(Zc x) { return std::to_string(x.v); }
};

template <>
struct ring_traits<Qc> {
    static constexpr bool is_field = true;
    static const char* name() { return "Q"; }
    static bool is_zero(Qc x) { return x.num == 0; }
    static bool is_unit(Qc x) { return x.num != 0; }
    static Qc unit_inverse(Qc x) { return x.inverse(); }
    static std::string str(Qc x) { return std::to_string(x.num) + "/" + std::to_string(x.den); }
};

template <>
struct ring_traits<F2c> {
    static constexpr bool is_field = true;
    static const char* name() { return "F2"; }
    static bool is_zero(F2c x) { return x.v == 0; }
    static bool is_unit(F2c x) { return x.v == 1; }
    static F2c unit_inverse(F2c x) {
        require(x.v == 1, "not a unit in F2");
        return x;
    }
    static std::string str(F2c x) { return std::to_string(int(x.v)); }
};

template <class R>
bool is_zero(R x) {
    return ring_traits<R>::is_zero(x);
}

}  // namespace skein
