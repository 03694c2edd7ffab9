#pragma once

#include <string>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/flats.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Simple undirected graph over named vertices.
struct LabeledGraph {
    std::vector<std::string> vertex_names;
    std::vector<VertexSet> adjacency;  // one bitset per vertex

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    bool has_edge(int a, int b) const { return adjacency[static_cast<size_t>(a)].test(b); }
    void add_edge(int a, int b);
    std::vector<std::pair<int, int>> edges() const;
    std::vector<VertexSet> components() const;  // every vertex covered
    bool is_connected() const;
};

/// Connected components of the graph of flats with H-triviality tags.
/// A component C is H-nontrivial iff some 2-subset of C is a face.
struct ComponentReport {
    std::vector<VertexSet> components;
    std::vector<bool> nontrivial;

    int component_count() const { return static_cast<int>(components.size()); }
    int nontrivial_count() const;            // s
    std::vector<int> trivial_sizes() const;  // f_1..f_r, ascending
};

/// Graph of flats: edge p -- q whenever the closure of {p,q} is proper.
/// Requires a connected (boolean representable) complex.
LabeledGraph graph_of_flats(const SimplicialComplex& c);

ComponentReport component_report(const SimplicialComplex& c, const LabeledGraph& g);

/// Every edge {u,v} with u, v in distinct components of the graph of flats
/// is a face; exhaustive check of that statement over all cross pairs.
bool cross_component_edges_are_faces(const SimplicialComplex& c, const LabeledGraph& g);

/// Gamma M: union of cliques over the lines of a reduced matrix.
LabeledGraph gamma_m(const BoolMatrix& m);

/// All superanticliques of g: sets A with |A| > 1 and
/// nbh(a) ∪ nbh(b) = V \ A for all distinct a, b in A.
std::vector<VertexSet> superanticliques(const LabeledGraph& g);

/// Fast prediction of the graph of flats from a matrix representing a simple
/// dimension-2 complex: either a "connected" verdict (Gamma M connected or in
/// Omega_1 ∪ Omega_2) or Gamma M itself as the exact graph of flats.
struct GammaPrediction {
    bool connected_verdict = false;
    LabeledGraph gamma_m;  // always the computed Gamma M
};
GammaPrediction predict_gamma_fl(const BoolMatrix& m);

/// Membership of a graph in Omega_1 ∪ Omega_2 (the two-component shapes whose
/// superanticliques bridge the components).
bool in_omega_classes(const LabeledGraph& g);

/// Number of connected components of the Hasse graph of the proper part
/// L \ {0, 1} of a flat lattice.
int proper_part_components(const FlatLattice& l);

}  // namespace brsc
