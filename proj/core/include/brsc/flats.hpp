#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/simplicial_complex.hpp"
#include "brsc/vertex_set.hpp"

namespace brsc {

/// The set Fl H ordered by inclusion. Closed under intersection; contains
/// the empty set and V. Meet is intersection, join is the smallest flat
/// containing the union.
struct FlatLattice {
    std::vector<std::string> vertex_names;
    std::vector<VertexSet> flats;               // sorted by size, then lex
    std::vector<std::pair<int, int>> covers;    // (lower, upper) flat indices

    int size() const { return static_cast<int>(flats.size()); }
    int universe() const { return static_cast<int>(vertex_names.size()); }
    int index_of(const VertexSet& f) const;     // -1 when absent
    int bottom() const;                         // index of the empty flat
    int top() const;                            // index of V
    bool leq(int a, int b) const { return flats[static_cast<size_t>(b)].contains(flats[static_cast<size_t>(a)]); }
    int meet(int a, int b) const;
    int join(int a, int b) const;
    std::vector<int> covers_above(int a) const;
    std::vector<int> covers_below(int b) const;
    std::string flat_label(int i) const;        // "{}", "123", "V"
};

/// Partition of the vertex set of a complex.
struct Partition {
    std::vector<int> block_of;                  // vertex -> block id
    std::vector<std::vector<int>> blocks;       // block id -> sorted members

    static Partition identity(int n);
    static Partition from_block_of(std::vector<int> block_of);
    bool refines(const Partition& coarser) const;
    bool is_identity() const;
};

struct QuotientResult {
    SimplicialComplex complex;
    std::vector<int> projection;  // vertex of c -> vertex of quotient
};

/// Incremental closure computation for one complex; builds the per-face
/// obstruction sets once and then answers closure queries by saturation.
class ClosureEngine {
public:
    explicit ClosureEngine(const SimplicialComplex& c);
    VertexSet closure(const VertexSet& x) const;
    const SimplicialComplex& complex() const { return *c_; }

private:
    const SimplicialComplex* c_;
    // For face index i: vertices p outside the face with face_i ∪ {p} not a face.
    std::vector<VertexSet> face_sets_;
    std::vector<VertexSet> blocked_;
};

/// Smallest flat containing x.
VertexSet closure(const SimplicialComplex& c, const VertexSet& x);

/// All flats, via closures of faces plus V.
std::vector<VertexSet> all_flats(const SimplicialComplex& c);

/// Flat enumeration straight from the definition (scan of all vertex
/// subsets); the slow trustworthy oracle, for small vertex counts.
std::vector<VertexSet> all_flats_by_definition(const SimplicialComplex& c);

FlatLattice flat_lattice(const SimplicialComplex& c);
FlatLattice lattice_from_flats(std::vector<std::string> vertex_names, std::vector<VertexSet> flats);

/// True iff every face admits an enumeration with strictly increasing prefix
/// closures; on failure the certificate is a face with no such enumeration.
struct RepresentabilityResult {
    bool representable = false;
    std::optional<VertexSet> failing_face;
};
RepresentabilityResult is_boolean_representable(const SimplicialComplex& c);

/// Vertex partition by equality of singleton closures. Requires a boolean
/// representable complex; cross-checked against the pair-nonface criterion.
Partition eta_partition(const SimplicialComplex& c);

/// Quotient complex H/tau for tau refining eta, with the projection map.
QuotientResult quotient(const SimplicialComplex& c, const Partition& tau);

/// H/eta: the unique simple complex with an isomorphic lattice of flats.
QuotientResult simplify(const SimplicialComplex& c);

/// Flats-indicator matrix: one row per flat F != V, entry 0 at (F, v) iff
/// v in F. Reduced, and represents c exactly. Requires c boolean representable.
BoolMatrix canonical_matrix(const SimplicialComplex& c);

/// Removes repeated columns of a reduced representation; the result
/// represents the simplification of the represented complex.
BoolMatrix simplify_matrix(const BoolMatrix& m);

}  // namespace brsc
