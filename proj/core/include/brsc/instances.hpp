#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/order_complex.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Catalog of worked examples:
///   "occur"  (parameter t >= 3): 2t vertices a_i, b_i; faces of size 3 are
///            exactly the triples containing some pair {a_i, b_i};
///   "chhs":  V = 1..5, H = (P_{<=2} minus {4,5}) plus 123, 124, 125;
///   "noel":  triples with an adjacent pair along the graph 1-2-3-4, 5-6;
///   "yesel": same recipe over the path 1-2-3-4-5-6-7.
SimplicialComplex example_complex(const std::string& name, int t = 0);

/// The published EL-labeling of the lattice of flats of "yesel".
ELLabeling yesel_el_labeling(const FlatLattice& l);

struct RandomBrsc {
    SimplicialComplex complex;
    BoolMatrix matrix;
};

/// Random boolean representable complex of dimension d on n vertices:
/// entries drawn fair-coin, reduced, rejection-sampled to the requested
/// dimension and connectivity. Deterministic per seed; nullopt when the
/// draw budget is exhausted.
std::optional<RandomBrsc> random_brsc(uint64_t seed, int n, int d, int budget = 10000);

/// Reduced matrix representing a simple dimension-2 complex on n vertices,
/// built from a random family of pairwise almost-disjoint lines plus all
/// singleton flats. Scales to large n; used by the benchmark harness.
BoolMatrix random_simple_dim2_matrix(uint64_t seed, int n);

}  // namespace brsc
