#include <doctest.h>

#include <random>

#include "brsc/bool_matrix.hpp"
#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/instances.hpp"
#include "oracles.hpp"

using namespace brsc;

TEST_SUITE_BEGIN("boolmat");

TEST_CASE("nonsingular base cases") {
    CHECK(is_nonsingular(BoolMatrix::from_bit_rows({"1"})));
    CHECK_FALSE(is_nonsingular(BoolMatrix::from_bit_rows({"00", "00"})));
    CHECK(is_nonsingular(BoolMatrix::from_bit_rows({"100", "110", "111"})));
    CHECK_THROWS_AS(is_nonsingular(BoolMatrix::from_bit_rows({"10", "11", "01"})), DomainError);
}

TEST_CASE("nonsingular agrees with permutation search up to 3x3") {
    for (int k = 1; k <= 3; ++k) {
        const int cells = k * k;
        for (uint64_t bits = 0; bits < (uint64_t{1} << cells); ++bits) {
            std::vector<std::string> rows;
            std::vector<std::vector<int>> dense(static_cast<size_t>(k),
                                                std::vector<int>(static_cast<size_t>(k)));
            for (int i = 0; i < k; ++i) {
                std::string line;
                for (int j = 0; j < k; ++j) {
                    int bit = static_cast<int>((bits >> (i * k + j)) & 1);
                    dense[static_cast<size_t>(i)][static_cast<size_t>(j)] = bit;
                    line += bit ? '1' : '0';
                }
                rows.push_back(line);
            }
            CHECK(is_nonsingular(BoolMatrix::from_bit_rows(rows)) ==
                  oracles::nonsingular_by_permutations(dense));
        }
    }
}

TEST_CASE("independence basics") {
    BoolMatrix m = BoolMatrix::from_bit_rows({"101", "011"});
    CHECK(m.is_independent(std::vector<int>{}));           // empty set
    CHECK(m.is_independent(std::vector<int>{0}));          // nonzero column
    CHECK_THROWS_AS(m.is_independent(std::vector<int>{7}), DomainError);
}

TEST_CASE("independence on the chhs canonical matrix matches brute force") {
    SimplicialComplex chhs = example_complex("chhs");
    BoolMatrix m = canonical_matrix(chhs);
    // 45 is not a face, so columns {4,5} are dependent.
    CHECK_FALSE(m.is_independent(std::vector<int>{3, 4}));
    CHECK_FALSE(oracles::independent_by_brute_force(m, {3, 4}));
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) {
            CHECK(m.is_independent(std::vector<int>{a, b}) ==
                  oracles::independent_by_brute_force(m, {a, b}));
        }
}

TEST_CASE("independence agrees with brute force on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 2 + static_cast<int>(rng() % 5);
        int cols = 2 + static_cast<int>(rng() % 5);
        std::vector<std::string> lines;
        for (int r = 0; r < rows; ++r) {
            std::string line;
            for (int c = 0; c < cols; ++c) line += (rng() & 1) ? '1' : '0';
            lines.push_back(line);
        }
        BoolMatrix m = BoolMatrix::from_bit_rows(lines);
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<int> subset;
            for (int c = 0; c < cols; ++c)
                if (rng() & 1) subset.push_back(c);
            if (static_cast<int>(subset.size()) > 4) subset.resize(4);
            CHECK(m.is_independent(subset) == oracles::independent_by_brute_force(m, subset));
        }
    }
}

TEST_CASE("make_reduced") {
    SUBCASE("duplicate rows dropped, independence unchanged") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"101", "101", "011"});
        BoolMatrix r = m.make_reduced();
        CHECK(r.row_count() == 2);
        for (uint64_t bits = 0; bits < 8; ++bits) {
            std::vector<int> subset;
            for (int c = 0; c < 3; ++c)
                if ((bits >> c) & 1) subset.push_back(c);
            CHECK(m.is_independent(subset) == r.is_independent(subset));
        }
    }
    SUBCASE("already reduced is identity") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"101", "011"});
        BoolMatrix r = m.make_reduced();
        CHECK(r.row_count() == 2);
        CHECK(r.row_bits(0) == m.row_bits(0));
        CHECK(r.row_bits(1) == m.row_bits(1));
    }
    SUBCASE("zero column is an error") {
        CHECK_THROWS_AS(BoolMatrix::from_bit_rows({"10", "10"}).make_reduced(), DomainError);
    }
}

TEST_CASE("lines") {
    SUBCASE("canonical matrix of noel") {
        BoolMatrix m = canonical_matrix(example_complex("noel"));
        std::vector<VertexSet> lines = m.lines();
        REQUIRE(lines.size() == 4);
        CHECK(lines[0] == VertexSet::of(6, {0, 1}));
        CHECK(lines[1] == VertexSet::of(6, {1, 2}));
        CHECK(lines[2] == VertexSet::of(6, {2, 3}));
        CHECK(lines[3] == VertexSet::of(6, {4, 5}));
    }
    SUBCASE("identity matrix lines are the co-singletons") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"1000", "0100", "0010", "0001"});
        CHECK(m.lines().size() == 4);
        for (const VertexSet& l : m.lines()) CHECK(l.count() == 3);
    }
    SUBCASE("rows with at most one zero give no lines") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"111", "011", "101"});
        CHECK(m.lines().empty());
    }
}

TEST_CASE("to_complex") {
    SUBCASE("chhs canonical matrix reproduces chhs") {
        SimplicialComplex chhs = example_complex("chhs");
        BoolMatrix m = canonical_matrix(chhs);
        SimplicialComplex back = m.to_complex();
        CHECK(back.face_count() == chhs.face_count());
        for (const VertexSet& f : chhs.all_faces()) CHECK(back.is_face(f));
    }
    SUBCASE("1x1 matrix gives the point") {
        SimplicialComplex c = BoolMatrix::from_bit_rows({"1"}).to_complex();
        CHECK(c.dim() == 0);
        CHECK(c.vertex_count() == 1);
        CHECK(c.face_count() == 2);
    }
    SUBCASE("identity 3x3 gives the full simplex, by brute force over all subsets") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"100", "010", "001"});
        SimplicialComplex c = m.to_complex();
        for (uint64_t bits = 0; bits < 8; ++bits) {
            std::vector<int> subset;
            for (int v = 0; v < 3; ++v)
                if ((bits >> v) & 1) subset.push_back(v);
            CHECK(c.is_face(VertexSet::of(3, subset)) ==
                  oracles::independent_by_brute_force(m, subset));
            CHECK(c.is_face(VertexSet::of(3, subset)));  // all of them
        }
        CHECK(c.dim() == 2);
    }
    SUBCASE("expected dimension is checked") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"100", "010", "001"});
        CHECK_THROWS_AS(m.to_complex(1), DomainError);
        CHECK(m.to_complex(2).dim() == 2);
    }
    SUBCASE("faces are downward closed with all singletons") {
        BoolMatrix m = random_simple_dim2_matrix(7, 6);
        SimplicialComplex c = m.to_complex();
        for (const VertexSet& f : c.all_faces())
            for (int v = f.first(); v >= 0; v = f.next(v)) CHECK(c.is_face(f.without(v)));
        for (int v = 0; v < c.vertex_count(); ++v)
            CHECK(c.is_face(VertexSet::of(c.vertex_count(), {v})));
    }
}

TEST_CASE("row bound for reduced representations") {
    // |R| <= (d+1) n^d for any reduced representation of a dim-d complex.
    for (uint64_t seed : {1u, 2u, 3u}) {
        auto inst = random_brsc(seed, 6, 2);
        REQUIRE(inst.has_value());
        double bound = 3.0 * 6 * 6;
        CHECK(static_cast<double>(inst->matrix.row_count()) <= bound);
    }
}

TEST_SUITE_END();
