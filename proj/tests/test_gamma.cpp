#include <doctest.h>

#include <random>
#include <set>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/gamma.hpp"
#include "brsc/instances.hpp"
#include "oracles.hpp"

using namespace brsc;

namespace {

LabeledGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.vertex_names.push_back("g" + std::to_string(i));
    g.adjacency.assign(static_cast<size_t>(n), VertexSet(n));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

std::set<std::pair<std::string, std::string>> edge_labels(const LabeledGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : g.edges())
        out.insert({g.vertex_names[static_cast<size_t>(a)], g.vertex_names[static_cast<size_t>(b)]});
    return out;
}

SimplicialComplex uniform(int k, int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
    std::vector<VertexSet> gens;
    std::vector<int> idx(static_cast<size_t>(k));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            gens.push_back(VertexSet::of(n, idx));
            return;
        }
        for (int v = start; v < n; ++v) {
            idx[static_cast<size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return SimplicialComplex::from_generators(names, gens);
}

}  // namespace

TEST_SUITE_BEGIN("gamma");

TEST_CASE("graph of flats") {
    SUBCASE("chhs: edges 12 and 45, vertex 3 isolated") {
        LabeledGraph g = graph_of_flats(example_complex("chhs"));
        CHECK(edge_labels(g) == std::set<std::pair<std::string, std::string>>{{"1", "2"}, {"4", "5"}});
    }
    SUBCASE("noel: the defining graph is the graph of flats") {
        LabeledGraph g = graph_of_flats(example_complex("noel"));
        CHECK(edge_labels(g) == std::set<std::pair<std::string, std::string>>{
                                    {"1", "2"}, {"2", "3"}, {"3", "4"}, {"5", "6"}});
    }
    SUBCASE("matroids of dimension >= 2 give the complete graph") {
        LabeledGraph g = graph_of_flats(uniform(3, 5));
        CHECK(g.edges().size() == 10);
    }
}

TEST_CASE("component report") {
    SUBCASE("chhs: one nontrivial component, trivial sizes 1 and 2") {
        SimplicialComplex c = example_complex("chhs");
        ComponentReport r = component_report(c, graph_of_flats(c));
        CHECK(r.component_count() == 3);
        CHECK(r.nontrivial_count() == 1);
        CHECK(r.trivial_sizes() == std::vector<int>{1, 2});
    }
    SUBCASE("occur(t): t nontrivial components, no trivial ones") {
        for (int t : {3, 4}) {
            SimplicialComplex c = example_complex("occur", t);
            ComponentReport r = component_report(c, graph_of_flats(c));
            CHECK(r.nontrivial_count() == t);
            CHECK(r.trivial_sizes().empty());
        }
    }
    SUBCASE("complete graph of flats: s = 1, r = 0") {
        SimplicialComplex c = uniform(3, 5);
        ComponentReport r = component_report(c, graph_of_flats(c));
        CHECK(r.nontrivial_count() == 1);
        CHECK(r.trivial_sizes().empty());
    }
}

TEST_CASE("cross-component edges are faces") {
    int checked = 0;
    for (uint64_t seed = 1; seed < 40 && checked < 3; ++seed) {
        auto inst = random_brsc(seed, 7, 2);
        if (!inst) continue;
        CHECK(cross_component_edges_are_faces(inst->complex, graph_of_flats(inst->complex)));
        ++checked;
    }
    REQUIRE(checked == 3);
}

TEST_CASE("gamma_m") {
    SUBCASE("occur(3) canonical matrix: three disjoint edges") {
        BoolMatrix m = canonical_matrix(example_complex("occur", 3));
        LabeledGraph g = gamma_m(m);
        CHECK(g.edges().size() == 3);
        CHECK(g.components().size() == 3);
    }
    SUBCASE("one line spanning all but one vertex gives a clique") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"00001", "11111", "01111", "10111", "11011",
                                                  "11101", "11110"});
        LabeledGraph g = gamma_m(m);
        CHECK(g.edges().size() == 6);  // K4 on the zero set of the first row
    }
    SUBCASE("no lines, no edges") {
        BoolMatrix m = BoolMatrix::from_bit_rows({"011", "101", "110"});
        CHECK(gamma_m(m).edges().empty());
    }
}

TEST_CASE("superanticliques") {
    SUBCASE("(K2bar + K2) joined, plus K1: frozen against the subset scan") {
        // Vertices 0,1 = independent pair; 2,3 = the joined edge; 4 = isolated.
        LabeledGraph g = make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        auto expect = oracles::superanticliques_by_scan(g);
        CHECK(superanticliques(g) == expect);
        // The bridging set {0,1,4} is among them.
        CHECK(std::find(expect.begin(), expect.end(), VertexSet::of(5, {0, 1, 4})) != expect.end());
    }
    SUBCASE("complete graph has none") {
        LabeledGraph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(superanticliques(g).empty());
        CHECK(oracles::superanticliques_by_scan(g).empty());
    }
    SUBCASE("two disjoint edges: the cross pairs") {
        LabeledGraph g = make_graph(4, {{0, 1}, {2, 3}});
        auto expect = oracles::superanticliques_by_scan(g);
        CHECK(superanticliques(g) == expect);
        CHECK(expect.size() == 4);
        CHECK(std::find(expect.begin(), expect.end(), VertexSet::of(4, {0, 2})) != expect.end());
    }
    SUBCASE("random graphs agree with the scan") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 3 + static_cast<int>(rng() % 5);
            std::vector<std::pair<int, int>> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (rng() & 1) edges.emplace_back(a, b);
            LabeledGraph g = make_graph(n, edges);
            CHECK(superanticliques(g) == oracles::superanticliques_by_scan(g));
        }
    }
}

TEST_CASE("predict_gamma_fl") {
    SUBCASE("occur(3): three components, not an omega shape, prediction is Gamma M") {
        BoolMatrix m = canonical_matrix(example_complex("occur", 3));
        GammaPrediction p = predict_gamma_fl(m);
        CHECK_FALSE(p.connected_verdict);
        // Gamma M equals the true graph of flats.
        LabeledGraph direct = graph_of_flats(example_complex("occur", 3));
        CHECK(edge_labels(p.gamma_m) == edge_labels(direct));
    }
    SUBCASE("connected Gamma M gives the connected verdict") {
        BoolMatrix m = canonical_matrix(uniform(3, 5));
        CHECK(predict_gamma_fl(m).connected_verdict);
    }
    SUBCASE("omega shapes give the connected verdict") {
        LabeledGraph two_edges = make_graph(4, {{0, 1}, {2, 3}});  // (K1+K1) ⊔ (K1+K1)
        CHECK(in_omega_classes(two_edges));
        LabeledGraph omega1 = make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        CHECK(in_omega_classes(omega1));
        LabeledGraph three_comps = make_graph(6, {{0, 1}, {2, 3}, {4, 5}});
        CHECK_FALSE(in_omega_classes(three_comps));
    }
}

TEST_CASE("proper part components") {
    SUBCASE("occur(t) has t components") {
        for (int t : {3, 4}) {
            FlatLattice l = flat_lattice(example_complex("occur", t));
            CHECK(proper_part_components(l) == t);
        }
    }
    SUBCASE("chain lattice 0 < a < 1 has one component") {
        FlatLattice l = lattice_from_flats(
            {"x", "y"}, {VertexSet(2), VertexSet::of(2, {0}), VertexSet::full(2)});
        CHECK(proper_part_components(l) == 1);
    }
    SUBCASE("noel: both counts are two, matching the component criterion") {
        SimplicialComplex c = example_complex("noel");
        FlatLattice l = flat_lattice(c);
        CHECK(proper_part_components(l) == 2);
        CHECK(component_report(c, graph_of_flats(c)).component_count() == 2);
    }
    SUBCASE("equality with the graph of flats on simple fixtures") {
        for (int t : {3, 4, 5}) {
            SimplicialComplex c = example_complex("occur", t);
            CHECK(proper_part_components(flat_lattice(c)) ==
                  component_report(c, graph_of_flats(c)).component_count());
        }
    }
}


TEST_CASE("line-derived edges always lie in the graph of flats") {
    int checked = 0;
    for (uint64_t seed = 60; seed < 120 && checked < 6; ++seed) {
        auto inst = random_brsc(seed, 7, 2);
        if (!inst) continue;
        LabeledGraph gm = gamma_m(inst->matrix);
        LabeledGraph gf = graph_of_flats(inst->complex);
        for (auto [a, b] : gm.edges()) CHECK(gf.has_edge(a, b));
        ++checked;
    }
    CHECK(checked >= 4);
}

TEST_SUITE_END();
