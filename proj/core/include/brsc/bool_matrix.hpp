#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brsc/simplicial_complex.hpp"
#include "brsc/vertex_set.hpp"

namespace brsc {

/// 0/1 matrix with labelled rows and columns. Columns name the vertices of
/// the represented complex; a column subset is a face iff it is independent.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
               std::vector<VertexSet> rows);

    /// Rows given as strings of '0'/'1'; default labels r1.., v1..
    static BoolMatrix from_bit_rows(const std::vector<std::string>& bit_rows,
                                    std::vector<std::string> col_labels = {});

    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return static_cast<int>(col_labels_.size()); }
    bool at(int r, int c) const { return rows_[static_cast<size_t>(r)].test(c); }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    const VertexSet& row_bits(int r) const { return rows_[static_cast<size_t>(r)]; }

    /// Z_r = zero set of row r, as a column subset.
    VertexSet zero_set(int r) const { return rows_[static_cast<size_t>(r)].complement(); }

    bool has_zero_column() const;
    /// Pairwise-distinct nonzero rows and no zero column.
    bool is_reduced() const;

    /// Drops duplicate and zero rows; errors on a zero column (the represented
    /// structure would miss a singleton face).
    BoolMatrix make_reduced() const;

    /// Lines: zero sets Z_r with 2 <= |Z_r| < number of columns.
    std::vector<VertexSet> lines() const;

    /// Marker-recursion independence test for a column subset, memoized on the
    /// remaining-column set.
    bool is_independent(const VertexSet& cols) const;
    bool is_independent(const std::vector<int>& cols) const;

    /// Complex of all independent column subsets, facets marked. When
    /// expected_dim is given, the row-count bound |R| <= (d+1) n^d is checked
    /// first and a dimension mismatch is an error. Requires a reduced matrix.
    SimplicialComplex to_complex(std::optional<int> expected_dim = std::nullopt) const;

    /// Removes repeated columns (keeps the first of each group); represents
    /// the simplification of the represented complex. col_map, when given,
    /// receives old column -> new column indices.
    BoolMatrix without_duplicate_columns(std::vector<int>* col_map = nullptr) const;

private:
    std::vector<std::string> row_labels_;
    std::vector<std::string> col_labels_;
    std::vector<VertexSet> rows_;  // bitsets over columns
};

/// Congruent to a lower unitriangular matrix. Errors on non-square input.
bool is_nonsingular(const BoolMatrix& m);

}  // namespace brsc
