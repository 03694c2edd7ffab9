#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brsc/bool_matrix.hpp"
#include "brsc/flats.hpp"
#include "brsc/gamma.hpp"
#include "brsc/homology.hpp"
#include "brsc/homotopy.hpp"
#include "brsc/order_complex.hpp"
#include "brsc/shelling.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Parsed input file: a `matrix` section or a `faces` section.
struct ParsedInput {
    std::optional<BoolMatrix> matrix;
    SimplicialComplex complex;
    bool from_matrix = false;
};

ParsedInput parse_input_text(const std::string& text);
ParsedInput load_input_file(const std::string& path);

std::string write_face_list(const SimplicialComplex& c);
std::string write_matrix(const BoolMatrix& m);

/// Labeling file: one cover pair per line, `F -> G : k`, flats written as
/// vertex lists (or `{}` / `V`).
ELLabeling parse_labeling_text(const std::string& text, const FlatLattice& l);
ELLabeling load_labeling_file(const std::string& path, const FlatLattice& l);

// JSON exports (schema 1). Strings hold serialized JSON objects.
std::string lattice_to_json(const FlatLattice& l);
std::string graph_to_json(const LabeledGraph& g, const ComponentReport* report = nullptr);
std::string homology_to_json(const HomologyReport& h);
std::string shelling_to_json(const SimplicialComplex& c, const Shelling& s);
std::string order_complex_to_json(const FlatLattice& l, const OrderComplexResult& ord);

}  // namespace brsc
