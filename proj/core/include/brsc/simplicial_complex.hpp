#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "brsc/vertex_set.hpp"

namespace brsc {

struct ComplexProfile {
    int dimension = -1;  // max face size - 1
    bool simple = false;
    bool pure = false;
    bool connected = false;
    int facet_count = 0;
};

/// Witness for a failed exchange-property check: |larger| = |smaller| + 1 and
/// no element of larger \ smaller extends smaller to a face.
struct ExchangeWitness {
    VertexSet larger;
    VertexSet smaller;
};

/// Finite simplicial complex: ordered vertex list plus a downward-closed face
/// family containing the empty set and every singleton. A complex with an
/// empty vertex set (arising from links of facets) is allowed and has
/// dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex();  // empty-vertex complex, faces = {Ø}

    /// Builds the complex generated by `generators`: all their subsets plus
    /// every singleton of the declared vertex set.
    static SimplicialComplex from_generators(std::vector<std::string> vertex_names,
                                             const std::vector<VertexSet>& generators);

    /// Same, with faces given as lists of vertex indices.
    static SimplicialComplex from_generator_lists(std::vector<std::string> vertex_names,
                                                  const std::vector<std::vector<int>>& generators);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    int vertex_index(const std::string& name) const;  // -1 when unknown

    bool is_face(const VertexSet& x) const { return faces_.count(x) > 0; }
    int dim() const { return dim_; }
    size_t face_count() const { return faces_.size(); }

    /// Faces of cardinality k, sorted; empty for k beyond dim+1.
    const std::vector<VertexSet>& faces_of_size(int k) const {
        static const std::vector<VertexSet> none;
        if (k < 0 || k >= static_cast<int>(by_card_.size())) return none;
        return by_card_[static_cast<size_t>(k)];
    }
    std::vector<VertexSet> all_faces() const;

    const std::vector<VertexSet>& facets() const { return facets_; }

    ComplexProfile classify() const;
    bool is_connected() const;

    /// Connected components of the 1-truncation (every vertex belongs to one).
    std::vector<VertexSet> graph_components() const;

    /// Link lk(Q) = (V/Q, H/Q). Requires q in H, q != V.
    SimplicialComplex link(const VertexSet& q) const;

    /// Largest pure subcomplex of dimension m: generated by all m-faces.
    /// Its vertex set is the union of those faces. Requires 0 <= m <= dim.
    SimplicialComplex pure_part(int m) const;

    /// Exchange-property test; nullopt means the complex is a matroid.
    std::optional<ExchangeWitness> matroid_violation() const;
    bool is_matroid() const { return !matroid_violation().has_value(); }

    /// Every vertex pair at geodesic distance <= 2 in the 1-truncation.
    /// Requires dim >= 2 (holds for every boolean representable complex there).
    bool graph_diameter_within_two() const;

    /// Human-readable face label: vertex names joined ("123", "a1 b2").
    std::string face_label(const VertexSet& x) const;

    VertexSet full_set() const { return VertexSet::full(vertex_count()); }

private:
    void rebuild_indexes();

    std::vector<std::string> vertex_names_;
    std::unordered_set<VertexSet, VertexSetHash> faces_;
    std::vector<std::vector<VertexSet>> by_card_;
    std::vector<VertexSet> facets_;
    int dim_ = -1;
};

}  // namespace brsc
