#pragma once

#include <map>
#include <optional>
#include <vector>

#include "skein/ring.hpp"

namespace skein {

// Exact Gaussian elimination over a field, small dense systems.
template <class F>
struct LinearSolution {
    bool consistent = false;
    std::vector<F> particular;
    std::vector<std::vector<F>> nullspace;
};

template <class F>
LinearSolution<F> solve_linear(int nvars, const std::vector<std::map<int, F>>& rows, const std::vector<F>& rhs) {
    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<F>> a(static_cast<size_t>(m), std::vector<F>(static_cast<size_t>(nvars + 1), F(0)));
    for (int r = 0; r < m; ++r) {
        for (auto& [c, v] : rows[static_cast<size_t>(r)]) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        a[static_cast<size_t>(r)][static_cast<size_t>(nvars)] = rhs[static_cast<size_t>(r)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < nvars && row < m; ++col) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (!ring_traits<F>::is_zero(a[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pr)]);
        F inv = ring_traits<F>::unit_inverse(a[static_cast<size_t>(row)][static_cast<size_t>(col)]);
        for (int c = col; c <= nvars; ++c)
            a[static_cast<size_t>(row)][static_cast<size_t>(c)] =
                a[static_cast<size_t>(row)][static_cast<size_t>(c)] * inv;
        for (int r = 0; r < m; ++r) {
            if (r == row) continue;
            F factor = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (ring_traits<F>::is_zero(factor)) continue;
            for (int c = col; c <= nvars; ++c)
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * a[static_cast<size_t>(row)][static_cast<size_t>(c)];
        }
        pivot_col.push_back(col);
        ++row;
    }
    LinearSolution<F> out;
    for (int r = row; r < m; ++r)
        if (!ring_traits<F>::is_zero(a[static_cast<size_t>(r)][static_cast<size_t>(nvars)])) return out;
    out.consistent = true;
    out.particular.assign(static_cast<size_t>(nvars), F(0));
    std::vector<char> is_pivot(static_cast<size_t>(nvars), 0);
    for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r) {
        out.particular[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
            a[static_cast<size_t>(r)][static_cast<size_t>(nvars)];
        is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = 1;
    }
    for (int c = 0; c < nvars; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<F> vec(static_cast<size_t>(nvars), F(0));
        vec[static_cast<size_t>(c)] = F(1);
        for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
            vec[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
                -a[static_cast<size_t>(r)][static_cast<size_t>(c)];
        out.nullspace.push_back(std::move(vec));
    }
    return out;
}

// Determinant over a commutative ring, for tiny matrices (Laplace expansion).
template <class R>
R small_determinant(const std::vector<std::vector<R>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return R(1);
    if (n == 1) return m[0][0];
    R det(0);
    for (int j = 0; j < n; ++j) {
        if (ring_traits<R>::is_zero(m[0][static_cast<size_t>(j)])) continue;
        std::vector<std::vector<R>> minor;
        for (int r = 1; r < n; ++r) {
            std::vector<R> row;
            for (int c = 0; c < n; ++c)
                if (c != j) row.push_back(m[static_cast<size_t>(r)][static_cast<size_t>(c)]);
            minor.push_back(std::move(row));
        }
        R term = m[0][static_cast<size_t>(j)] * small_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// Field used to solve linear problems for each coefficient ring.
template <class R>
struct field_of {
    using type = Qc;
    static Qc lift(Zc x) { return Qc(x.v); }
    static std::optional<Zc> lower(Qc x) {
        if (x.den != 1) return std::nullopt;
        return Zc(x.num);
    }
};

template <>
struct field_of<Qc> {
    using type = Qc;
    static Qc lift(Qc x) { return x; }
    static std::optional<Qc> lower(Qc x) { return x; }
};

template <>
struct field_of<F2c> {
    using type = F2c;
    static F2c lift(F2c x) { return x; }
    static std::optional<F2c> lower(F2c x) { return x; }
};

}  // namespace skein
