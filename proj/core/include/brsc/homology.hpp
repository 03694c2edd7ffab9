#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "brsc/simplicial_complex.hpp"

namespace brsc {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}
    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const BigInt& at(int r, int c) const {
        return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)];
    }
    static IntMatrix identity(int n);
    IntMatrix multiply(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;
};

/// Ordered bases of k-faces and the boundary maps between them.
/// boundary[k] maps C_k -> C_{k-1}; boundary[0] is the zero map (0 rows).
struct ChainComplex {
    std::vector<std::vector<VertexSet>> basis;  // basis[k] = faces of size k+1, sorted
    std::vector<IntMatrix> boundary;
};

/// D = U * M * V with U, V unimodular and the diagonal of D the invariant
/// factors d_1 | d_2 | ... (nonzero entries only in `invariant_factors`).
struct SmithResult {
    std::vector<BigInt> invariant_factors;
    IntMatrix u, v;
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

struct HomologyReport {
    std::vector<long long> betti;              // betti[0] is reduced: components - 1
    std::vector<std::vector<BigInt>> torsion;  // torsion coefficients per dimension

    bool torsion_free() const;
};

/// Witness of a sequential Cohen-Macaulay failure:
/// H~_k(pure_m(lk(face))) != 0 with k < m.
struct ScmWitness {
    VertexSet face;
    int m = 0;
    int k = 0;
};

ChainComplex boundary_matrices(const SimplicialComplex& c);

SmithResult smith_normal_form(const IntMatrix& m, bool with_transforms = true);

HomologyReport reduced_homology(const SimplicialComplex& c);

/// Exhaustive Duval-style check over all faces and pure parts of their links.
std::optional<ScmWitness> scm_violation(const SimplicialComplex& c);
bool is_sequentially_cohen_macaulay(const SimplicialComplex& c);

}  // namespace brsc
