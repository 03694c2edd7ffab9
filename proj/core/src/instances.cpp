#include "brsc/instances.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"

namespace brsc {

namespace {

// Path-graph family: faces of size 3 are the triples containing a pair
// adjacent along the path; used by both "noel" and "yesel".
SimplicialComplex path_triple_complex(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    for (int v = 1; v <= n; ++v) names.push_back(std::to_string(v));
    std::vector<VertexSet> gens;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) gens.push_back(VertexSet::of(n, {a, b}));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                bool adj = false;
                for (auto [x, y] : edges) {
                    VertexSet e = VertexSet::of(n, {x, y});
                    if (VertexSet::of(n, {a, b}) == e || VertexSet::of(n, {a, c}) == e ||
                        VertexSet::of(n, {b, c}) == e)
                        adj = true;
                }
                if (adj) gens.push_back(VertexSet::of(n, {a, b, c}));
            }
        }
    }
    return SimplicialComplex::from_generators(std::move(names), gens);
}

}  // namespace

SimplicialComplex example_complex(const std::string& name, int t) {
    if (name == "occur") {
        if (t < 3) throw DomainError("example occur: requires t >= 3");
        const int n = 2 * t;
        std::vector<std::string> names;
        for (int i = 1; i <= t; ++i) {
            names.push_back("a" + std::to_string(i));
            names.push_back("b" + std::to_string(i));
        }
        std::vector<VertexSet> gens;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) gens.push_back(VertexSet::of(n, {a, b}));
        for (int i = 0; i < t; ++i) {
            VertexSet pair = VertexSet::of(n, {2 * i, 2 * i + 1});
            for (int x = 0; x < n; ++x) {
                if (pair.test(x)) continue;
                gens.push_back(pair.with(x));
            }
        }
        return SimplicialComplex::from_generators(std::move(names), gens);
    }
    if (name == "chhs") {
        const int n = 5;
        std::vector<std::string> names{"1", "2", "3", "4", "5"};
        std::vector<VertexSet> gens;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!(a == 3 && b == 4)) gens.push_back(VertexSet::of(n, {a, b}));
        gens.push_back(VertexSet::of(n, {0, 1, 2}));
        gens.push_back(VertexSet::of(n, {0, 1, 3}));
        gens.push_back(VertexSet::of(n, {0, 1, 4}));
        return SimplicialComplex::from_generators(std::move(names), gens);
    }
    if (name == "noel") return path_triple_complex(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
    if (name == "yesel")
        return path_triple_complex(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    throw DomainError("unknown example: " + name);
}

ELLabeling yesel_el_labeling(const FlatLattice& l) {
    const int n = 7;
    if (l.universe() != n) throw DomainError("yesel labeling: wrong lattice");
    auto flat = [&](std::initializer_list<int> vs) {
        int i = l.index_of(VertexSet::of(n, vs));
        if (i < 0) throw DomainError("yesel labeling: flat not found");
        return i;
    };
    ELLabeling xi;
    int bottom = flat({});
    int top = l.top();
    // Bottom-to-singleton edges carry the vertex number.
    for (int v = 0; v < n; ++v) xi.label[{bottom, flat({v})}] = v + 1;
    // Singleton-to-line edges: rising edge i -> {i, i+1} labelled i+2,
    // falling edge i+1 -> {i, i+1} labelled 0.
    for (int i = 0; i + 1 < n; ++i) {
        int line = flat({i, i + 1});
        xi.label[{flat({i}), line}] = i + 2;
        xi.label[{flat({i + 1}), line}] = 0;
    }
    // Line-to-top edges: 12 carries 3, the rest carry 1.
    for (int i = 0; i + 1 < n; ++i) {
        int line = flat({i, i + 1});
        xi.label[{line, top}] = (i == 0) ? 3 : 1;
    }
    return xi;
}

std::optional<RandomBrsc> random_brsc(uint64_t seed, int n, int d, int budget) {
    if (n < 1 || n > 16) throw DomainError("random_brsc: n out of range");
    if (d < 1 || d > 3) throw DomainError("random_brsc: d out of range");
    std::mt19937_64 rng(seed);
    double bound = (d + 1) * std::pow(static_cast<double>(n), static_cast<double>(d));
    int max_rows = static_cast<int>(std::min(bound, 3.0 * n));

    for (int attempt = 0; attempt < budget; ++attempt) {
        int rows = std::uniform_int_distribution<int>(d + 1, std::max(d + 1, max_rows))(rng);
        std::vector<std::string> bit_rows;
        for (int r = 0; r < rows; ++r) {
            std::string line;
            for (int cidx = 0; cidx < n; ++cidx)
                line += (rng() & 1) ? '1' : '0';
            bit_rows.push_back(line);
        }
        BoolMatrix m = BoolMatrix::from_bit_rows(bit_rows);
        if (m.has_zero_column()) continue;
        BoolMatrix red = m.make_reduced();
        SimplicialComplex c = red.to_complex();
        if (c.dim() != d) continue;
        if (!c.is_connected()) continue;
        return RandomBrsc{std::move(c), std::move(red)};
    }
    return std::nullopt;
}

BoolMatrix random_simple_dim2_matrix(uint64_t seed, int n) {
    if (n < 4) throw DomainError("random_simple_dim2_matrix: n too small");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);

    // Flats besides the trivial ones: a family of lines of size 2..4 meeting
    // each other in at most one vertex, so that all maximal chains have the
    // shape Ø ⊂ {v} ⊂ L ⊂ V and the complex has dimension exactly 2.
    std::vector<VertexSet> lines;
    int wanted = std::max(2, n / 2);
    for (int tries = 0; tries < 40 * wanted && static_cast<int>(lines.size()) < wanted; ++tries) {
        int len = 2 + static_cast<int>(rng() % 3);
        VertexSet cand(n);
        while (cand.count() < len) cand.set(pick(rng));
        bool ok = true;
        for (const VertexSet& l : lines)
            if ((l & cand).count() > 1) ok = false;
        if (ok) lines.push_back(cand);
    }

    std::vector<std::string> cols;
    for (int v = 1; v <= n; ++v) cols.push_back("v" + std::to_string(v));
    std::vector<std::string> row_labels;
    std::vector<VertexSet> rows;
    rows.push_back(VertexSet::full(n));  // the empty flat: all ones
    row_labels.push_back("e");
    for (int v = 0; v < n; ++v) {
        rows.push_back(VertexSet::full(n).without(v));
        row_labels.push_back("s" + std::to_string(v + 1));
    }
    for (size_t i = 0; i < lines.size(); ++i) {
        rows.push_back(lines[i].complement());
        row_labels.push_back("l" + std::to_string(i + 1));
    }
    return BoolMatrix(std::move(row_labels), std::move(cols), std::move(rows));
}

}  // namespace brsc
