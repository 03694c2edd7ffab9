#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brsc/flats.hpp"
#include "brsc/shelling.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Ord(L): vertices are the proper part L \ {0,1}, faces are its chains.
/// flat_of_vertex maps an order-complex vertex to its lattice index.
struct OrderComplexResult {
    SimplicialComplex complex;
    std::vector<int> flat_of_vertex;
};

OrderComplexResult order_complex(const FlatLattice& l);

/// Transfers a shelling of Ord(Fl H) to H: walks the maximal chains in the
/// given order, enumerates each chain's transversals lexicographically under
/// a level-compatible vertex order, concatenates and drops repeats.
/// Requires c boolean representable and ord_order a valid shelling of Ord(l).
Shelling transfer_shelling(const SimplicialComplex& c, const FlatLattice& l,
                           const OrderComplexResult& ord, const std::vector<VertexSet>& ord_order);

/// Cover-edge labelling of a lattice, by (lower, upper) flat indices.
struct ELLabeling {
    std::map<std::pair<int, int>, long long> label;
};

struct ELFailure {
    int a = 0, b = 0;  // interval ends (flat indices)
    std::string reason;
};

/// EL-labeling verification: every interval has a unique increasing maximal
/// chain and that chain is lexicographically least (words compared with the
/// shorter-prefix-first rule). Errors when xi misses a cover pair.
std::optional<ELFailure> verify_el_labeling(const FlatLattice& l, const ELLabeling& xi);

/// Desk-scale brute-force search for an EL-labeling with labels in
/// {1..alphabet}; only for lattices with few cover edges. Test utility.
std::optional<ELLabeling> search_el_labeling(const FlatLattice& l, int alphabet,
                                             uint64_t budget = 50'000'000);

}  // namespace brsc
