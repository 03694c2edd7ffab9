#include "brsc/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "brsc/errors.hpp"

namespace brsc {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& o) const {
    if (cols != o.rows) throw DomainError("matrix product shape mismatch");
    IntMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
        }
    return out;
}

bool HomologyReport::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

ChainComplex boundary_matrices(const SimplicialComplex& c) {
    ChainComplex cc;
    const int d = c.dim();
    cc.basis.resize(static_cast<size_t>(std::max(0, d + 1)));
    for (int k = 0; k <= d; ++k) cc.basis[static_cast<size_t>(k)] = c.faces_of_size(k + 1);

    std::vector<std::unordered_map<VertexSet, int, VertexSetHash>> index(cc.basis.size());
    for (size_t k = 0; k < cc.basis.size(); ++k)
        for (size_t i = 0; i < cc.basis[k].size(); ++i) index[k].emplace(cc.basis[k][i], static_cast<int>(i));

    cc.boundary.resize(cc.basis.size());
    if (d >= 0) cc.boundary[0] = IntMatrix(0, static_cast<int>(cc.basis[0].size()));
    for (int k = 1; k <= d; ++k) {
        const auto& high = cc.basis[static_cast<size_t>(k)];
        const auto& low_index = index[static_cast<size_t>(k - 1)];
        IntMatrix b(static_cast<int>(cc.basis[static_cast<size_t>(k - 1)].size()),
                    static_cast<int>(high.size()));
        for (size_t j = 0; j < high.size(); ++j) {
            std::vector<int> vs = high[j].elements();  // ascending vertex order
            int sign = 1;
            for (size_t i = 0; i < vs.size(); ++i) {
                VertexSet sub = high[j].without(vs[i]);
                b.at(low_index.at(sub), static_cast<int>(j)) = sign;
                sign = -sign;
            }
        }
        cc.boundary[static_cast<size_t>(k)] = std::move(b);
    }
    return cc;
}

namespace {

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(IntMatrix& m, int a, int b) {
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMatrix& m, int a, int b) {
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}
// row[b] += f * row[a]
void add_row(IntMatrix& m, int b, int a, const BigInt& f) {
    for (int j = 0; j < m.cols; ++j) m.at(b, j) += f * m.at(a, j);
}
void add_col(IntMatrix& m, int b, int a, const BigInt& f) {
    for (int i = 0; i < m.rows; ++i) m.at(i, b) += f * m.at(i, a);
}
void negate_row(IntMatrix& m, int r) {
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& input, bool with_transforms) {
    IntMatrix d = input;
    SmithResult res;
    res.u = IntMatrix::identity(d.rows);
    res.v = IntMatrix::identity(d.cols);

    int t = 0;
    const int limit = std::min(d.rows, d.cols);
    while (t < limit) {
        // Smallest nonzero |entry| in the remaining block as pivot.
        int pr = -1, pc = -1;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j)
                if (d.at(i, j) != 0 &&
                    (pr < 0 || abs_val(d.at(i, j)) < abs_val(d.at(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        if (pr != t) {
            swap_rows(d, pr, t);
            if (with_transforms) swap_rows(res.u, pr, t);
        }
        if (pc != t) {
            swap_cols(d, pc, t);
            if (with_transforms) swap_cols(res.v, pc, t);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < d.rows; ++i) {
                if (d.at(i, t) == 0) continue;
                BigInt q = d.at(i, t) / d.at(t, t);
                add_row(d, i, t, -q);
                if (with_transforms) add_row(res.u, i, t, -q);
                if (d.at(i, t) != 0) {
                    // Remainder became the smaller pivot.
                    swap_rows(d, i, t);
                    if (with_transforms) swap_rows(res.u, i, t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < d.cols; ++j) {
                if (d.at(t, j) == 0) continue;
                BigInt q = d.at(t, j) / d.at(t, t);
                add_col(d, j, t, -q);
                if (with_transforms) add_col(res.v, j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, j, t);
                    if (with_transforms) swap_cols(res.v, j, t);
                    clean = false;
                }
            }
        }

        // Divisibility: the pivot must divide every later entry; otherwise
        // fold the offending row in and redo this position.
        bool redo = false;
        for (int i = t + 1; i < d.rows && !redo; ++i)
            for (int j = t + 1; j < d.cols && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    add_row(d, t, i, 1);
                    if (with_transforms) add_row(res.u, t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (d.at(t, t) < 0) {
            negate_row(d, t);
            if (with_transforms) negate_row(res.u, t);
        }
        ++t;
    }
    for (int i = 0; i < std::min(d.rows, d.cols); ++i)
        if (d.at(i, i) != 0) res.invariant_factors.push_back(d.at(i, i));
    return res;
}

HomologyReport reduced_homology(const SimplicialComplex& c) {
    HomologyReport rep;
    const int d = c.dim();
    if (d < 0) return rep;  // empty complex

    ChainComplex cc = boundary_matrices(c);
    std::vector<SmithResult> snf(static_cast<size_t>(d + 1));
    for (int k = 1; k <= d; ++k)
        snf[static_cast<size_t>(k)] = smith_normal_form(cc.boundary[static_cast<size_t>(k)], false);
    auto rank = [&](int k) { return k >= 1 && k <= d ? snf[static_cast<size_t>(k)].rank() : 0; };

    rep.betti.resize(static_cast<size_t>(d + 1));
    rep.torsion.resize(static_cast<size_t>(d + 1));
    rep.betti[0] = static_cast<long long>(c.graph_components().size()) - 1;
    for (int k = 1; k <= d; ++k) {
        long long faces_k = static_cast<long long>(cc.basis[static_cast<size_t>(k)].size());
        rep.betti[static_cast<size_t>(k)] = faces_k - rank(k) - rank(k + 1);
    }
    for (int k = 0; k < d; ++k) {
        for (const BigInt& f : snf[static_cast<size_t>(k + 1)].invariant_factors)
            if (f > 1) rep.torsion[static_cast<size_t>(k)].push_back(f);
    }
    return rep;
}

std::optional<ScmWitness> scm_violation(const SimplicialComplex& c) {
    for (const VertexSet& x : c.all_faces()) {
        if (x.count() == c.vertex_count()) continue;
        SimplicialComplex lk = c.link(x);
        for (int m = 1; m <= lk.dim(); ++m) {
            SimplicialComplex pp = lk.pure_part(m);
            HomologyReport h = reduced_homology(pp);
            for (int k = 0; k < m; ++k) {
                bool zero = h.betti[static_cast<size_t>(k)] == 0 &&
                            h.torsion[static_cast<size_t>(k)].empty();
                if (!zero) return ScmWitness{x, m, k};
            }
        }
    }
    return std::nullopt;
}

bool is_sequentially_cohen_macaulay(const SimplicialComplex& c) {
    return !scm_violation(c).has_value();
}

}  // namespace brsc
