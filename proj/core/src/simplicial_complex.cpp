#include "brsc/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "brsc/errors.hpp"

namespace brsc {

namespace {

// Union-find over 0..n-1.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

SimplicialComplex::SimplicialComplex() {
    faces_.insert(VertexSet(0));
    rebuild_indexes();
}

SimplicialComplex SimplicialComplex::from_generators(std::vector<std::string> vertex_names,
                                                     const std::vector<VertexSet>& generators) {
    SimplicialComplex c;
    c.vertex_names_ = std::move(vertex_names);
    c.faces_.clear();
    const int n = c.vertex_count();
    c.faces_.insert(VertexSet(n));
    for (int v = 0; v < n; ++v) c.faces_.insert(VertexSet::of(n, {v}));

    // Downward closure by peeling one vertex at a time.
    std::vector<VertexSet> stack;
    for (const VertexSet& g : generators) {
        if (g.universe() != n) throw DomainError("generator over wrong vertex universe");
        if (c.faces_.insert(g).second) stack.push_back(g);
    }
    while (!stack.empty()) {
        VertexSet f = stack.back();
        stack.pop_back();
        for (int v = f.first(); v >= 0; v = f.next(v)) {
            VertexSet sub = f.without(v);
            if (c.faces_.insert(sub).second) stack.push_back(sub);
        }
    }
    c.rebuild_indexes();
    return c;
}

SimplicialComplex SimplicialComplex::from_generator_lists(
    std::vector<std::string> vertex_names, const std::vector<std::vector<int>>& generators) {
    const int n = static_cast<int>(vertex_names.size());
    std::vector<VertexSet> gens;
    gens.reserve(generators.size());
    for (const auto& g : generators) gens.push_back(VertexSet::of(n, g));
    return from_generators(std::move(vertex_names), gens);
}

int SimplicialComplex::vertex_index(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertex_names_[static_cast<size_t>(i)] == name) return i;
    return -1;
}

void SimplicialComplex::rebuild_indexes() {
    dim_ = -1;
    for (const VertexSet& f : faces_) dim_ = std::max(dim_, f.count() - 1);

    by_card_.assign(static_cast<size_t>(dim_ + 2), {});
    for (const VertexSet& f : faces_) by_card_[static_cast<size_t>(f.count())].push_back(f);
    for (auto& level : by_card_) std::sort(level.begin(), level.end(), VertexSet::size_lex_less);

    facets_.clear();
    for (const VertexSet& f : faces_) {
        bool maximal = true;
        for (int v = 0; v < vertex_count() && maximal; ++v) {
            if (!f.test(v) && faces_.count(f.with(v))) maximal = false;
        }
        if (maximal) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), VertexSet::size_lex_less);
}

std::vector<VertexSet> SimplicialComplex::all_faces() const {
    std::vector<VertexSet> out;
    out.reserve(faces_.size());
    for (const auto& level : by_card_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<VertexSet> SimplicialComplex::graph_components() const {
    const int n = vertex_count();
    Dsu dsu(n);
    if (dim_ >= 1) {
        for (const VertexSet& e : by_card_[2]) {
            int a = e.first();
            dsu.unite(a, e.next(a));
        }
    }
    std::vector<VertexSet> comps;
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        int r = dsu.find(v);
        if (comp_of[static_cast<size_t>(r)] < 0) {
            comp_of[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.push_back(VertexSet(n));
        }
        comps[static_cast<size_t>(comp_of[static_cast<size_t>(r)])].set(v);
    }
    return comps;
}

bool SimplicialComplex::is_connected() const { return graph_components().size() <= 1; }

ComplexProfile SimplicialComplex::classify() const {
    ComplexProfile p;
    p.dimension = dim_;
    p.facet_count = static_cast<int>(facets_.size());
    p.connected = is_connected();

    const int n = vertex_count();
    p.simple = true;
    for (int a = 0; a < n && p.simple; ++a)
        for (int b = a + 1; b < n && p.simple; ++b)
            if (!is_face(VertexSet::of(n, {a, b}))) p.simple = false;

    p.pure = true;
    for (const VertexSet& f : facets_)
        if (f.count() - 1 != dim_) p.pure = false;
    return p;
}

SimplicialComplex SimplicialComplex::link(const VertexSet& q) const {
    if (!is_face(q)) throw DomainError("link: not a face");
    const int n = vertex_count();
    if (q.count() == n) throw DomainError("link: face equals the whole vertex set");

    // H/Q over the old universe, then rename to the vertices that occur.
    std::vector<VertexSet> link_faces;
    VertexSet occupied(n);
    for (const VertexSet& f : faces_) {
        if (!f.intersects(q)) {
            VertexSet u = f | q;
            if (is_face(u)) {
                link_faces.push_back(f);
                occupied |= f;
            }
        }
    }
    std::vector<int> old_of_new = occupied.elements();
    std::vector<int> new_of_old(static_cast<size_t>(n), -1);
    std::vector<std::string> names;
    for (size_t i = 0; i < old_of_new.size(); ++i) {
        new_of_old[static_cast<size_t>(old_of_new[i])] = static_cast<int>(i);
        names.push_back(vertex_names_[static_cast<size_t>(old_of_new[i])]);
    }
    const int m = static_cast<int>(old_of_new.size());
    std::vector<VertexSet> gens;
    gens.reserve(link_faces.size());
    for (const VertexSet& f : link_faces) {
        VertexSet g(m);
        for (int v = f.first(); v >= 0; v = f.next(v)) g.set(new_of_old[static_cast<size_t>(v)]);
        gens.push_back(g);
    }
    if (m == 0) return SimplicialComplex();
    return from_generators(std::move(names), gens);
}

SimplicialComplex SimplicialComplex::pure_part(int m) const {
    if (m < 0 || m > dim_) throw DomainError("pure_part: m out of range");
    const auto& top = by_card_[static_cast<size_t>(m + 1)];
    const int n = vertex_count();
    VertexSet occupied(n);
    for (const VertexSet& f : top) occupied |= f;

    std::vector<int> old_of_new = occupied.elements();
    std::vector<int> new_of_old(static_cast<size_t>(n), -1);
    std::vector<std::string> names;
    for (size_t i = 0; i < old_of_new.size(); ++i) {
        new_of_old[static_cast<size_t>(old_of_new[i])] = static_cast<int>(i);
        names.push_back(vertex_names_[static_cast<size_t>(old_of_new[i])]);
    }
    const int nn = static_cast<int>(old_of_new.size());
    std::vector<VertexSet> gens;
    gens.reserve(top.size());
    for (const VertexSet& f : top) {
        VertexSet g(nn);
        for (int v = f.first(); v >= 0; v = f.next(v)) g.set(new_of_old[static_cast<size_t>(v)]);
        gens.push_back(g);
    }
    if (nn == 0) return SimplicialComplex();
    return from_generators(std::move(names), gens);
}

std::optional<ExchangeWitness> SimplicialComplex::matroid_violation() const {
    for (int s = 1; s <= dim_ + 1; ++s) {
        for (const VertexSet& larger : by_card_[static_cast<size_t>(s)]) {
            for (const VertexSet& smaller : by_card_[static_cast<size_t>(s - 1)]) {
                bool ok = false;
                VertexSet candidates = larger - smaller;
                for (int i = candidates.first(); i >= 0 && !ok; i = candidates.next(i)) {
                    if (is_face(smaller.with(i))) ok = true;
                }
                if (!ok) return ExchangeWitness{larger, smaller};
            }
        }
    }
    return std::nullopt;
}

bool SimplicialComplex::graph_diameter_within_two() const {
    if (dim_ < 2) throw DomainError("graph_diameter_within_two: requires dimension >= 2");
    const int n = vertex_count();
    std::vector<VertexSet> adj(static_cast<size_t>(n), VertexSet(n));
    for (const VertexSet& e : by_card_[2]) {
        int a = e.first(), b = e.next(a);
        adj[static_cast<size_t>(a)].set(b);
        adj[static_cast<size_t>(b)].set(a);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (adj[static_cast<size_t>(a)].test(b)) continue;
            if (!adj[static_cast<size_t>(a)].intersects(adj[static_cast<size_t>(b)])) return false;
        }
    }
    return true;
}

std::string SimplicialComplex::face_label(const VertexSet& x) const {
    bool single_chars = true;
    for (const auto& nm : vertex_names_)
        if (nm.size() != 1) single_chars = false;
    std::string out;
    for (int v = x.first(); v >= 0; v = x.next(v)) {
        if (!out.empty() && !single_chars) out += ' ';
        out += vertex_names_[static_cast<size_t>(v)];
    }
    if (out.empty()) out = "{}";
    return out;
}

}  // namespace brsc
