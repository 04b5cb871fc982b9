#pragma once

#include <random>
#include <vector>

#include "skein/complex.hpp"
#include "skein/tangle.hpp"

namespace skein::test {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

inline const FlatTangle& random_tangle(Rng& rng, const std::vector<FlatTangle>& pool) {
    return pool[static_cast<size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
}

// Independent circle counter for glued diagrams, used as the brute-force
// oracle against glue(): union-find over the 2m points of both tangles with
// interface identifications.
inline int oracle_glue_circles(const FlatTangle& a, const FlatTangle& b) {
    int na = a.points(), nb_p = b.points();
    Dsu dsu(na + nb_p);
    for (int p = 0; p < na; ++p) dsu.unite(p, a.match[p]);
    for (int p = 0; p < nb_p; ++p) dsu.unite(na + p, na + b.match[p]);
    for (int i = 0; i < a.nt; ++i) dsu.unite(a.nb + i, na + i);
    // Circles: components containing no outer boundary point.
    std::vector<char> touches(na + nb_p, 0);
    for (int p = 0; p < a.nb; ++p) touches[static_cast<size_t>(dsu.find(p))] = 1;
    for (int i = 0; i < b.nt; ++i) touches[static_cast<size_t>(dsu.find(na + b.nb + i))] = 1;
    int circles = a.circles + b.circles;
    for (int p = 0; p < na + nb_p; ++p)
        if (dsu.find(p) == p && !touches[static_cast<size_t>(p)]) ++circles;
    return circles;
}

}  // namespace skein::test
