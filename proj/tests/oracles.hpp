#pragma once

// Brute-force oracles, kept independent of the library's algorithm paths:
// nonsingularity by full permutation search, independence by row-subset
// search over the permutation oracle, superanticliques by subset scan.

#include <algorithm>
#include <numeric>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/gamma.hpp"
#include "brsc/vertex_set.hpp"

namespace oracles {

// Some row/column permutation makes the square matrix lower unitriangular.
inline bool nonsingular_by_permutations(const std::vector<std::vector<int>>& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return true;
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    do {
        std::sort(cols.begin(), cols.end());
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                if (m[static_cast<size_t>(rows[static_cast<size_t>(i)])]
                     [static_cast<size_t>(cols[static_cast<size_t>(i)])] != 1)
                    ok = false;
                for (int j = i + 1; j < k && ok; ++j)
                    if (m[static_cast<size_t>(rows[static_cast<size_t>(i)])]
                         [static_cast<size_t>(cols[static_cast<size_t>(j)])] != 0)
                        ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
}

inline std::vector<std::vector<int>> dense_of(const brsc::BoolMatrix& m) {
    std::vector<std::vector<int>> out(static_cast<size_t>(m.row_count()),
                                      std::vector<int>(static_cast<size_t>(m.col_count()), 0));
    for (int r = 0; r < m.row_count(); ++r)
        for (int c = 0; c < m.col_count(); ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
    return out;
}

// Independence by searching all row subsets of the right size.
inline bool independent_by_brute_force(const brsc::BoolMatrix& m, const std::vector<int>& cols) {
    const int k = static_cast<int>(cols.size());
    if (k == 0) return true;
    if (k > m.row_count()) return false;
    std::vector<int> rows(static_cast<size_t>(m.row_count()));
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> chosen(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> bool {
        if (depth == k) {
            std::vector<std::vector<int>> sub(static_cast<size_t>(k),
                                              std::vector<int>(static_cast<size_t>(k)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        m.at(chosen[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
            return nonsingular_by_permutations(sub);
        }
        for (int r = start; r < m.row_count(); ++r) {
            chosen[static_cast<size_t>(depth)] = r;
            if (self(self, r + 1, depth + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

// All superanticliques by scanning every vertex subset.
inline std::vector<brsc::VertexSet> superanticliques_by_scan(const brsc::LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<brsc::VertexSet> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
        brsc::VertexSet a(n);
        for (int v = 0; v < n; ++v)
            if ((bits >> v) & 1) a.set(v);
        if (a.count() < 2) continue;
        brsc::VertexSet outside = a.complement();
        bool good = true;
        for (int p = a.first(); p >= 0 && good; p = a.next(p))
            for (int q = a.next(p); q >= 0 && good; q = a.next(q))
                if (!((g.adjacency[static_cast<size_t>(p)] | g.adjacency[static_cast<size_t>(q)]) ==
                      outside))
                    good = false;
        if (good) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), brsc::VertexSet::size_lex_less);
    return out;
}

}  // namespace oracles
