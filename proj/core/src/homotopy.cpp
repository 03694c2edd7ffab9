#include "brsc/homotopy.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"

namespace brsc {

namespace {

long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Spanning tree from the rank-formula proof: pick a 2-face with a pair whose
// closure is proper and one vertex outside the other's closure, star the
// z-neighbours on z and the rest on y.
std::optional<std::vector<std::pair<int, int>>> star_tree(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    if (c.dim() < 2) return std::nullopt;
    ClosureEngine eng(c);
    VertexSet full = VertexSet::full(n);
    for (const VertexSet& tri : c.faces_of_size(3)) {
        std::vector<int> vs = tri.elements();
        for (int zi = 0; zi < 3; ++zi) {
            for (int yi = 0; yi < 3; ++yi) {
                if (zi == yi) continue;
                int z = vs[static_cast<size_t>(zi)], y = vs[static_cast<size_t>(yi)];
                if (eng.closure(VertexSet::of(n, {y, z})) == full) continue;
                if (eng.closure(VertexSet::of(n, {z})).test(y)) continue;
                std::vector<std::pair<int, int>> tree;
                for (int p = 0; p < n; ++p) {
                    if (p == z) continue;
                    if (c.is_face(VertexSet::of(n, {p, z})))
                        tree.emplace_back(std::min(p, z), std::max(p, z));
                    else if (p != y)
                        tree.emplace_back(std::min(p, y), std::max(p, y));
                }
                return tree;
            }
        }
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> bfs_tree(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    std::vector<VertexSet> adj(static_cast<size_t>(n), VertexSet(n));
    for (const VertexSet& e : c.faces_of_size(2)) {
        int a = e.first(), b = e.next(a);
        adj[static_cast<size_t>(a)].set(b);
        adj[static_cast<size_t>(b)].set(a);
    }
    std::vector<std::pair<int, int>> tree;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        const VertexSet& nb = adj[static_cast<size_t>(v)];
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                tree.emplace_back(std::min(v, w), std::max(v, w));
                q.push(w);
            }
        }
    }
    return tree;
}

}  // namespace

std::string Presentation::generator_name(const SimplicialComplex& c, int g) const {
    const auto& [p, q] = generators[static_cast<size_t>(g)];
    return "a_" + c.vertex_names()[static_cast<size_t>(p)] + "_" +
           c.vertex_names()[static_cast<size_t>(q)];
}

std::string Presentation::to_text(const SimplicialComplex& c) const {
    std::string out = "<";
    for (size_t g = 0; g < generators.size(); ++g) {
        if (g) out += " ";
        out += generator_name(c, static_cast<int>(g));
    }
    out += " |\n";
    auto signed_name = [&](int ref) {
        return ref >= 0 ? generator_name(c, ref) : generator_name(c, -ref - 1) + "^-1";
    };
    for (const auto& tri : triangle_relators) {
        out += "  " + signed_name(tri[0]) + " " + signed_name(tri[1]) + " " + signed_name(tri[2]) + "\n";
    }
    for (int g : tree_relators) out += "  " + generator_name(c, g) + "\n";
    out += ">";
    return out;
}

Presentation edge_path_presentation(const SimplicialComplex& c) {
    if (!c.is_connected()) throw DomainError("edge_path_presentation: complex is disconnected");
    if (c.dim() < 1) throw DomainError("edge_path_presentation: dimension < 1");

    Presentation pres;
    std::map<std::pair<int, int>, int> gen_index;
    for (const VertexSet& e : c.faces_of_size(2)) {
        int p = e.first(), q = e.next(p);
        gen_index[{p, q}] = static_cast<int>(pres.generators.size());
        pres.generators.emplace_back(p, q);
    }

    auto tree = star_tree(c);
    pres.spanning_tree = tree ? *tree : bfs_tree(c);
    if (static_cast<int>(pres.spanning_tree.size()) != c.vertex_count() - 1)
        throw DomainError("edge_path_presentation: spanning tree construction failed");
    for (const auto& e : pres.spanning_tree) {
        auto it = gen_index.find(e);
        if (it == gen_index.end())
            throw DomainError("edge_path_presentation: tree edge is not a face");
        pres.tree_relators.push_back(it->second);
    }
    std::sort(pres.tree_relators.begin(), pres.tree_relators.end());

    for (const VertexSet& t : c.faces_of_size(3)) {
        int p = t.first(), q = t.next(p), r = t.next(q);
        int pq = gen_index.at({p, q});
        int qr = gen_index.at({q, r});
        int pr = gen_index.at({p, r});
        pres.triangle_relators.push_back({pq, qr, -pr - 1});
    }
    return pres;
}

long long pi1_rank_from_components(int s, const std::vector<int>& trivial_sizes) {
    long long fsum = 0;
    for (int f : trivial_sizes) fsum += f;
    long long cross = 0;
    for (size_t i = 0; i < trivial_sizes.size(); ++i)
        for (size_t j = i + 1; j < trivial_sizes.size(); ++j)
            cross += static_cast<long long>(trivial_sizes[i]) * trivial_sizes[j];
    long long rank = binom2(s - 1) + static_cast<long long>(s - 1) * fsum + cross;

    // Second closed form; both must agree.
    long long alt = binom2(s + fsum - 1);
    for (int f : trivial_sizes) alt -= binom2(f);
    if (alt != rank) throw DomainError("pi1 rank closed forms disagree");
    return rank;
}

Pi1Report pi1_rank(const SimplicialComplex& c) {
    if (!c.is_connected()) throw DomainError("pi1_rank: complex is disconnected");
    RepresentabilityResult br = is_boolean_representable(c);
    if (!br.representable) throw DomainError("pi1_rank: complex is not boolean representable");

    Pi1Report rep;
    if (c.dim() <= 1) {
        long long edges = static_cast<long long>(c.faces_of_size(2).size());
        rep.rank = edges - (c.vertex_count() - 1);
        rep.s = 0;
        return rep;
    }
    LabeledGraph g = graph_of_flats(c);
    rep.components = component_report(c, g);
    rep.s = rep.components.nontrivial_count();
    rep.trivial_sizes = rep.components.trivial_sizes();
    rep.rank = pi1_rank_from_components(rep.s, rep.trivial_sizes);
    return rep;
}

bool simplification_preserves_pi1(const SimplicialComplex& c) {
    if (c.dim() < 2) throw DomainError("simplification_preserves_pi1: requires dimension >= 2");
    RepresentabilityResult br = is_boolean_representable(c);
    if (!br.representable)
        throw DomainError("simplification_preserves_pi1: not boolean representable");
    LabeledGraph g = graph_of_flats(c);
    ComponentReport rep = component_report(c, g);
    for (int f : rep.trivial_sizes())
        if (f != 1) return false;
    return true;
}

}  // namespace brsc
