#include "brsc/bool_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "brsc/errors.hpp"

namespace brsc {

BoolMatrix::BoolMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels,
                       std::vector<VertexSet> rows)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), rows_(std::move(rows)) {
    if (row_labels_.size() != rows_.size()) throw DomainError("row label count mismatch");
    for (const VertexSet& r : rows_)
        if (r.universe() != col_count()) throw DomainError("row width mismatch");
    for (size_t i = 0; i < row_labels_.size(); ++i)
        for (size_t j = i + 1; j < row_labels_.size(); ++j)
            if (row_labels_[i] == row_labels_[j]) throw DomainError("duplicate row label");
    for (size_t i = 0; i < col_labels_.size(); ++i)
        for (size_t j = i + 1; j < col_labels_.size(); ++j)
            if (col_labels_[i] == col_labels_[j]) throw DomainError("duplicate column label");
}

BoolMatrix BoolMatrix::from_bit_rows(const std::vector<std::string>& bit_rows,
                                     std::vector<std::string> col_labels) {
    if (bit_rows.empty()) throw ParseError("matrix needs at least one row");
    const int n = static_cast<int>(bit_rows.front().size());
    if (col_labels.empty()) {
        for (int j = 0; j < n; ++j) col_labels.push_back("v" + std::to_string(j + 1));
    }
    if (static_cast<int>(col_labels.size()) != n) throw ParseError("column label count mismatch");
    std::vector<VertexSet> rows;
    std::vector<std::string> row_labels;
    for (size_t i = 0; i < bit_rows.size(); ++i) {
        const std::string& line = bit_rows[i];
        if (static_cast<int>(line.size()) != n) throw ParseError("matrix rows have unequal widths");
        VertexSet r(n);
        for (int j = 0; j < n; ++j) {
            if (line[static_cast<size_t>(j)] == '1')
                r.set(j);
            else if (line[static_cast<size_t>(j)] != '0')
                throw ParseError("matrix entries must be 0 or 1");
        }
        rows.push_back(r);
        row_labels.push_back("r" + std::to_string(i + 1));
    }
    return BoolMatrix(std::move(row_labels), std::move(col_labels), std::move(rows));
}

bool BoolMatrix::has_zero_column() const {
    VertexSet seen(col_count());
    for (const VertexSet& r : rows_) seen |= r;
    return seen.count() != col_count();
}

bool BoolMatrix::is_reduced() const {
    if (has_zero_column()) return false;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) return false;
        for (size_t j = i + 1; j < rows_.size(); ++j)
            if (rows_[i] == rows_[j]) return false;
    }
    return true;
}

BoolMatrix BoolMatrix::make_reduced() const {
    if (has_zero_column())
        throw DomainError("matrix has a zero column: singletons would not all be faces");
    std::vector<VertexSet> rows;
    std::vector<std::string> labels;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) continue;
        bool dup = false;
        for (const VertexSet& kept : rows)
            if (kept == rows_[i]) dup = true;
        if (!dup) {
            rows.push_back(rows_[i]);
            labels.push_back(row_labels_[i]);
        }
    }
    return BoolMatrix(std::move(labels), col_labels_, std::move(rows));
}

std::vector<VertexSet> BoolMatrix::lines() const {
    std::vector<VertexSet> out;
    const int n = col_count();
    for (int r = 0; r < row_count(); ++r) {
        VertexSet z = zero_set(r);
        int c = z.count();
        if (c >= 2 && c < n) {
            if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
}

namespace {

// Independence of a column set by the marker recursion: a column j admitting
// a row whose support within the current columns is exactly {j} can be peeled
// off with that row. A row consumed this way is zero on the remaining columns
// and never matters again, so the state is the column set alone.
bool independent_rec(const std::vector<VertexSet>& rows, const VertexSet& cols,
                     std::unordered_map<VertexSet, bool, VertexSetHash>& memo) {
    if (cols.empty()) return true;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;

    VertexSet marker_types(cols.universe());
    for (const VertexSet& r : rows) {
        VertexSet support = r & cols;
        int a = support.first();
        if (a >= 0 && support.next(a) < 0) marker_types.set(a);
    }
    bool ok = false;
    for (int j = marker_types.first(); j >= 0 && !ok; j = marker_types.next(j)) {
        if (independent_rec(rows, cols.without(j), memo)) ok = true;
    }
    memo.emplace(cols, ok);
    return ok;
}

}  // namespace

bool BoolMatrix::is_independent(const VertexSet& cols) const {
    if (cols.universe() != col_count()) throw DomainError("column subset over wrong universe");
    std::unordered_map<VertexSet, bool, VertexSetHash> memo;
    return independent_rec(rows_, cols, memo);
}

bool BoolMatrix::is_independent(const std::vector<int>& cols) const {
    for (int c : cols)
        if (c < 0 || c >= col_count()) throw DomainError("unknown column");
    return is_independent(VertexSet::of(col_count(), cols));
}

bool is_nonsingular(const BoolMatrix& m) {
    if (m.row_count() != m.col_count()) throw DomainError("is_nonsingular: matrix not square");
    // For a square matrix the witness row set must be every row, so
    // nonsingularity coincides with independence of the full column set.
    return m.is_independent(VertexSet::full(m.col_count()));
}

SimplicialComplex BoolMatrix::to_complex(std::optional<int> expected_dim) const {
    if (!is_reduced()) throw DomainError("to_complex: matrix not reduced");
    const int n = col_count();
    if (expected_dim) {
        int d = *expected_dim;
        if (d < 0) throw DomainError("to_complex: negative dimension");
        double bound = (d + 1) * std::pow(static_cast<double>(n), static_cast<double>(d));
        if (static_cast<double>(row_count()) > bound)
            throw DomainError("to_complex: row count exceeds the (d+1)n^d bound for dimension " +
                              std::to_string(d));
    }

    std::unordered_map<VertexSet, bool, VertexSetHash> memo;
    std::vector<VertexSet> frontier{VertexSet(n)};
    std::vector<VertexSet> generators;
    int reached_dim = -1;

    while (!frontier.empty()) {
        reached_dim = frontier.front().count() - 1;
        if (expected_dim && reached_dim > *expected_dim)
            throw DomainError("to_complex: dimension exceeds expected " +
                              std::to_string(*expected_dim));
        std::vector<VertexSet> next;
        for (const VertexSet& f : frontier) {
            int start = (f.first() < 0) ? -1 : f.elements().back();
            bool extended = false;
            for (int v = start + 1; v < n; ++v) {
                VertexSet cand = f.with(v);
                if (independent_rec(rows_, cand, memo)) {
                    next.push_back(cand);
                    extended = true;
                }
            }
            if (!extended) generators.push_back(f);
        }
        frontier = std::move(next);
    }
    if (expected_dim && reached_dim != *expected_dim)
        throw DomainError("to_complex: dimension is " + std::to_string(reached_dim) +
                          ", expected " + std::to_string(*expected_dim));
    return SimplicialComplex::from_generators(col_labels_, generators);
}

BoolMatrix BoolMatrix::without_duplicate_columns(std::vector<int>* col_map) const {
    const int n = col_count();
    std::vector<int> keep;
    std::vector<int> map_to(static_cast<size_t>(n), -1);
    for (int c = 0; c < n; ++c) {
        int found = -1;
        for (size_t k = 0; k < keep.size() && found < 0; ++k) {
            bool equal = true;
            for (const VertexSet& r : rows_) {
                if (r.test(c) != r.test(keep[k])) {
                    equal = false;
                    break;
                }
            }
            if (equal) found = static_cast<int>(k);
        }
        if (found < 0) {
            map_to[static_cast<size_t>(c)] = static_cast<int>(keep.size());
            keep.push_back(c);
        } else {
            map_to[static_cast<size_t>(c)] = found;
        }
    }
    if (col_map) *col_map = map_to;

    std::vector<std::string> cols;
    for (int c : keep) cols.push_back(col_labels_[static_cast<size_t>(c)]);
    std::vector<VertexSet> rows;
    for (const VertexSet& r : rows_) {
        VertexSet nr(static_cast<int>(keep.size()));
        for (size_t k = 0; k < keep.size(); ++k)
            if (r.test(keep[k])) nr.set(static_cast<int>(k));
        rows.push_back(nr);
    }
    return BoolMatrix(row_labels_, std::move(cols), std::move(rows));
}

}  // namespace brsc
