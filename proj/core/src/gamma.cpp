#include "brsc/gamma.hpp"

#include <algorithm>
#include <numeric>

#include "brsc/errors.hpp"

namespace brsc {

void LabeledGraph::add_edge(int a, int b) {
    if (a == b) throw DomainError("graph: loop edge");
    adjacency[static_cast<size_t>(a)].set(b);
    adjacency[static_cast<size_t>(b)].set(a);
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = adjacency[static_cast<size_t>(a)].next(a); b >= 0;
             b = adjacency[static_cast<size_t>(a)].next(b))
            out.emplace_back(a, b);
    return out;
}

std::vector<VertexSet> LabeledGraph::components() const {
    const int n = vertex_count();
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back(VertexSet(n));
        std::vector<int> stack{s};
        comp[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[static_cast<size_t>(id)].set(v);
            const VertexSet& nb = adjacency[static_cast<size_t>(v)];
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

bool LabeledGraph::is_connected() const { return components().size() <= 1; }

int ComponentReport::nontrivial_count() const {
    int s = 0;
    for (bool b : nontrivial) s += b ? 1 : 0;
    return s;
}

std::vector<int> ComponentReport::trivial_sizes() const {
    std::vector<int> out;
    for (size_t i = 0; i < components.size(); ++i)
        if (!nontrivial[i]) out.push_back(components[i].count());
    std::sort(out.begin(), out.end());
    return out;
}

LabeledGraph graph_of_flats(const SimplicialComplex& c) {
    if (!c.is_connected()) throw DomainError("graph_of_flats: complex is disconnected");
    const int n = c.vertex_count();
    LabeledGraph g;
    g.vertex_names = c.vertex_names();
    g.adjacency.assign(static_cast<size_t>(n), VertexSet(n));
    ClosureEngine eng(c);
    VertexSet full = VertexSet::full(n);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (eng.closure(VertexSet::of(n, {p, q})) != full) g.add_edge(p, q);
    return g;
}

ComponentReport component_report(const SimplicialComplex& c, const LabeledGraph& g) {
    ComponentReport r;
    r.components = g.components();
    const int n = c.vertex_count();
    for (const VertexSet& comp : r.components) {
        bool nt = false;
        for (int p = comp.first(); p >= 0 && !nt; p = comp.next(p))
            for (int q = comp.next(p); q >= 0 && !nt; q = comp.next(q))
                if (c.is_face(VertexSet::of(n, {p, q}))) nt = true;
        r.nontrivial.push_back(nt);
    }
    return r;
}

bool cross_component_edges_are_faces(const SimplicialComplex& c, const LabeledGraph& g) {
    const int n = c.vertex_count();
    std::vector<VertexSet> comps = g.components();
    std::vector<int> comp_of(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v = comps[i].first(); v >= 0; v = comps[i].next(v))
            comp_of[static_cast<size_t>(v)] = static_cast<int>(i);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (comp_of[static_cast<size_t>(u)] != comp_of[static_cast<size_t>(v)] &&
                !c.is_face(VertexSet::of(n, {u, v})))
                return false;
    return true;
}

LabeledGraph gamma_m(const BoolMatrix& m) {
    if (!m.is_reduced()) throw DomainError("gamma_m: matrix not reduced");
    const int n = m.col_count();
    LabeledGraph g;
    g.vertex_names = m.col_labels();
    g.adjacency.assign(static_cast<size_t>(n), VertexSet(n));
    for (const VertexSet& line : m.lines())
        for (int p = line.first(); p >= 0; p = line.next(p))
            for (int q = line.next(p); q >= 0; q = line.next(q)) g.add_edge(p, q);
    return g;
}

std::vector<VertexSet> superanticliques(const LabeledGraph& g) {
    const int n = g.vertex_count();
    // A superanticlique is determined by any two of its members:
    // A = V \ (nbh(a) ∪ nbh(b)); scanning all pairs is exhaustive.
    std::vector<VertexSet> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (g.has_edge(a, b)) continue;
            VertexSet cand = (g.adjacency[static_cast<size_t>(a)] | g.adjacency[static_cast<size_t>(b)]).complement();
            if (!cand.test(a) || !cand.test(b) || cand.count() < 2) continue;
            bool good = true;
            VertexSet outside = cand.complement();
            for (int p = cand.first(); p >= 0 && good; p = cand.next(p)) {
                for (int q = cand.next(p); q >= 0 && good; q = cand.next(q)) {
                    if (g.has_edge(p, q)) {
                        good = false;
                        break;
                    }
                    VertexSet nb = g.adjacency[static_cast<size_t>(p)] | g.adjacency[static_cast<size_t>(q)];
                    if (!(nb == outside)) good = false;
                }
            }
            if (good && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
}

namespace {

// Component = K_bar_m + Delta for some m >= 1: a vertex v whose non-neighbours
// within the component form an independent set fully joined to nbh(v).
bool is_coneless_join(const LabeledGraph& g, const VertexSet& comp) {
    for (int v = comp.first(); v >= 0; v = comp.next(v)) {
        VertexSet nb = g.adjacency[static_cast<size_t>(v)] & comp;
        VertexSet anti = comp - nb;  // contains v
        bool ok = true;
        for (int p = anti.first(); p >= 0 && ok; p = anti.next(p)) {
            if ((g.adjacency[static_cast<size_t>(p)] & anti).first() >= 0) ok = false;  // independent
            if (ok && !(g.adjacency[static_cast<size_t>(p)] & comp).contains(nb)) ok = false;  // full join
        }
        if (ok) return true;
    }
    return false;
}

bool has_dominating_vertex(const LabeledGraph& g, const VertexSet& comp) {
    for (int v = comp.first(); v >= 0; v = comp.next(v)) {
        VertexSet rest = comp.without(v);
        if ((g.adjacency[static_cast<size_t>(v)] & comp).contains(rest)) return true;
    }
    return false;
}

}  // namespace

bool in_omega_classes(const LabeledGraph& g) {
    std::vector<VertexSet> comps = g.components();
    // Edgeless graphs on >= 2 vertices are (K_bar_n + empty) ⊔ K_1.
    bool edgeless = true;
    for (const VertexSet& adj : g.adjacency)
        if (!adj.empty()) edgeless = false;
    if (edgeless) return g.vertex_count() >= 2;

    if (comps.size() != 2) return false;
    const VertexSet& c0 = comps[0];
    const VertexSet& c1 = comps[1];
    if (c0.count() == 1) return is_coneless_join(g, c1);
    if (c1.count() == 1) return is_coneless_join(g, c0);
    // Omega_2: both components of the form K_1 + Delta.
    return has_dominating_vertex(g, c0) && has_dominating_vertex(g, c1);
}

GammaPrediction predict_gamma_fl(const BoolMatrix& m) {
    GammaPrediction out;
    out.gamma_m = gamma_m(m);
    out.connected_verdict = out.gamma_m.is_connected() || in_omega_classes(out.gamma_m);
    return out;
}

int proper_part_components(const FlatLattice& l) {
    const int f = l.size();
    if (f <= 2) return 0;
    std::vector<int> parent(static_cast<size_t>(f));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    const int bot = l.bottom(), top = l.top();
    for (const auto& [lo, hi] : l.covers) {
        if (lo == bot || hi == top || lo == top || hi == bot) continue;
        parent[static_cast<size_t>(find(lo))] = find(hi);
    }
    int comps = 0;
    for (int i = 0; i < f; ++i) {
        if (i == bot || i == top) continue;
        if (find(i) == i) ++comps;
    }
    return comps;
}

}  // namespace brsc
