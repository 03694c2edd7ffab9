#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/flats.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Ordered facet list B_1..B_t with per-step certificates. For every k >= 2
/// with |B_k| >= 2, step_boundaries[k] lists the maximal intersections
/// B_i ∩ B_k (i < k), all of size |B_k| - 1 in a valid shelling.
/// B_k is a homology facet iff its whole proper boundary lies in the union
/// of the earlier facets.
struct Shelling {
    std::vector<VertexSet> order;
    std::vector<std::vector<VertexSet>> step_boundaries;
    std::vector<int> homology_facets;
};

struct ShellingFailure {
    int step = 0;  // index into the order (0-based) where the condition fails
    std::string reason;
};

/// Checks the non-pure shelling condition for an ordering of all facets.
/// Errors when `order` is not a permutation of the facets.
std::optional<ShellingFailure> validate_shelling(const SimplicialComplex& c,
                                                 const std::vector<VertexSet>& order);

/// Builds the Shelling record (certificates + homology facets) for a valid
/// order; errors when the order is invalid.
Shelling certify_shelling(const SimplicialComplex& c, const std::vector<VertexSet>& order);

struct ShellabilityDecision {
    bool shellable = false;
    bool search_based = false;  // true when decided by exhaustive search (dim >= 3)
};

/// Budget for the search-based paths; zero fields mean unlimited. A search
/// that runs out of budget raises a DomainError rather than guessing.
struct SearchLimits {
    uint64_t node_budget = 0;
    double timeout_ms = 0;
};

/// Shellability decision. Dimension <= 2 uses the component criterion on the
/// graph of flats of the simplification; dimension >= 3 falls back to
/// exhaustive search (flagged). Requires a boolean representable complex.
ShellabilityDecision decide_shellability(const SimplicialComplex& c, SearchLimits limits = {});
bool is_shellable(const SimplicialComplex& c);

/// Matrix-level decision for dimension-2 complexes: removes repeated columns,
/// computes Gamma M of the simplification and applies the component criterion
/// through the connectivity fast path. The caller promises the matrix is
/// reduced and represents a dimension-2 complex.
bool is_shellable_matrix(const BoolMatrix& m);

/// Constructs a validated shelling when one exists (decision runs first):
/// dimension <= 1 directly, dimension 2 by shelling the simplification and
/// lifting through eta, dimension >= 3 by search.
std::optional<Shelling> find_shelling(const SimplicialComplex& c, SearchLimits limits = {});

/// Lifts a shelling of c/tau to c, one two-element merge at a time
/// (larger blocks are processed as successive merges). Requires tau ⊆ eta
/// and a valid input shelling of the quotient.
Shelling lift_shelling(const SimplicialComplex& c, const Partition& tau,
                       const Shelling& quotient_shelling);

/// Betti numbers as homology-facet counts per dimension; must equal the
/// Smith-normal-form reduced homology ranks. Requires dim <= 2 and a valid
/// shelling.
std::vector<long long> betti_from_shelling(const SimplicialComplex& c, const Shelling& s);

/// Backtracking search over facet orders with memoized dead prefixes.
/// Returns nullopt when no shelling exists (or the budget ran out;
/// `exhausted` is true only for a genuinely exhausted search space).
std::optional<std::vector<VertexSet>> exhaustive_shelling_search(const SimplicialComplex& c,
                                                                 SearchLimits limits = {},
                                                                 bool* exhausted = nullptr);

}  // namespace brsc
