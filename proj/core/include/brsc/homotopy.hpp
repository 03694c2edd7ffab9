#pragma once

#include <array>
#include <string>
#include <vector>

#include "brsc/gamma.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Edge-path presentation of the fundamental group over a spanning tree:
/// one generator per edge of the complex (oriented low-to-high vertex, with
/// a_qp identified with the inverse of a_pq), one relator per 2-face, one
/// relator per tree edge.
struct Presentation {
    std::vector<std::pair<int, int>> generators;     // edges p < q
    std::vector<std::pair<int, int>> spanning_tree;  // subset of generators' edges
    std::vector<int> tree_relators;                  // generator indices
    // Triangle relator a_pq a_qr a_pr^-1 stored as signed generator refs
    // (+i = generator i, -i-1 = its inverse).
    std::vector<std::array<int, 3>> triangle_relators;

    std::string generator_name(const SimplicialComplex& c, int g) const;
    std::string to_text(const SimplicialComplex& c) const;
};

struct Pi1Report {
    long long rank = 0;
    ComponentReport components;     // populated for dim >= 2
    int s = 0;                      // H-nontrivial component count
    std::vector<int> trivial_sizes; // f_1..f_r
};

/// Presentation over the star spanning tree of the rank-formula proof
/// (BFS tree for dimension < 2). Requires a connected complex of dim >= 1.
Presentation edge_path_presentation(const SimplicialComplex& c);

/// Free rank of the fundamental group. Requires a connected boolean
/// representable complex; any dimension.
Pi1Report pi1_rank(const SimplicialComplex& c);

/// Rank formula from component data, both closed forms (asserted equal):
/// C(s-1,2) + (s-1)·Σf + Σ_{i<j} f_i f_j.
long long pi1_rank_from_components(int s, const std::vector<int>& trivial_sizes);

/// True iff the simplification has the same fundamental group, i.e. every
/// H-trivial component of the graph of flats has size 1. Requires boolean
/// representable, dim >= 2.
bool simplification_preserves_pi1(const SimplicialComplex& c);

}  // namespace brsc
