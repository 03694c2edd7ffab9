#include "brsc/shelling.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "brsc/errors.hpp"
#include "brsc/gamma.hpp"

namespace brsc {

namespace {

// Maximal sets among the intersections B_i ∩ B_k (i < k), i.e. the facets of
// (B_k, I(B_k)). Valid step iff all of them have size |B_k| - 1.
std::vector<VertexSet> step_boundary(const std::vector<VertexSet>& order, size_t k) {
    std::vector<VertexSet> inters;
    for (size_t i = 0; i < k; ++i) {
        VertexSet x = order[i] & order[k];
        bool dominated = false;
        for (const VertexSet& y : inters)
            if (y.contains(x)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        std::erase_if(inters, [&](const VertexSet& y) { return x.contains(y); });
        inters.push_back(x);
    }
    return inters;
}

bool step_ok(const std::vector<VertexSet>& order, size_t k, std::vector<VertexSet>* boundary) {
    int need = order[k].count() - 1;
    std::vector<VertexSet> inters = step_boundary(order, k);
    if (boundary) *boundary = inters;
    if (inters.empty()) return false;
    for (const VertexSet& x : inters)
        if (x.count() != need) return false;
    return true;
}

}  // namespace

std::optional<ShellingFailure> validate_shelling(const SimplicialComplex& c,
                                                 const std::vector<VertexSet>& order) {
    std::vector<VertexSet> fct = c.facets();
    if (order.size() != fct.size())
        throw DomainError("validate_shelling: order is not a permutation of the facets");
    {
        std::unordered_set<VertexSet, VertexSetHash> seen(order.begin(), order.end());
        for (const VertexSet& f : fct)
            if (!seen.count(f))
                throw DomainError("validate_shelling: order is not a permutation of the facets");
    }
    for (size_t k = 1; k < order.size(); ++k) {
        if (order[k].count() < 2) continue;
        if (!step_ok(order, k, nullptr))
            return ShellingFailure{static_cast<int>(k),
                                   "intersection with earlier facets is not pure of codimension 1"};
    }
    return std::nullopt;
}

Shelling certify_shelling(const SimplicialComplex& c, const std::vector<VertexSet>& order) {
    if (auto fail = validate_shelling(c, order))
        throw DomainError("certify_shelling: invalid at step " + std::to_string(fail->step));
    Shelling s;
    s.order = order;
    s.step_boundaries.resize(order.size());
    for (size_t k = 1; k < order.size(); ++k) {
        if (order[k].count() >= 2) step_ok(order, k, &s.step_boundaries[k]);
        // Homology facet: whole proper boundary already covered, i.e. every
        // maximal proper subset lies inside an earlier facet.
        bool homology = true;
        for (int v = order[k].first(); v >= 0 && homology; v = order[k].next(v)) {
            VertexSet sub = order[k].without(v);
            bool inside = false;
            for (size_t i = 0; i < k && !inside; ++i)
                if (order[i].contains(sub)) inside = true;
            if (!inside) homology = false;
        }
        if (homology) s.homology_facets.push_back(static_cast<int>(k));
    }
    return s;
}

std::optional<std::vector<VertexSet>> exhaustive_shelling_search(const SimplicialComplex& c,
                                                                 SearchLimits limits,
                                                                 bool* exhausted) {
    if (exhausted) *exhausted = false;
    std::vector<VertexSet> fct = c.facets();
    // Large facets first, then lexicographic; deterministic result.
    std::sort(fct.begin(), fct.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return VertexSet::size_lex_less(a, b);
    });
    const size_t t = fct.size();
    if (t == 0) return std::vector<VertexSet>{};

    // The step condition depends only on the SET of earlier facets, so failed
    // placed-sets can be memoized across orders.
    std::unordered_set<VertexSet, VertexSetHash> dead;
    std::vector<VertexSet> order;
    VertexSet used(static_cast<int>(t));
    uint64_t nodes = 0;
    bool out_of_budget = false;
    auto start = std::chrono::steady_clock::now();

    auto over_budget = [&]() {
        ++nodes;
        if (limits.node_budget && nodes > limits.node_budget) return true;
        if (limits.timeout_ms > 0 && (nodes & 1023) == 0) {
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            if (ms > limits.timeout_ms) return true;
        }
        return false;
    };

    auto rec = [&](auto&& self) -> bool {
        if (order.size() == t) return true;
        if (over_budget()) {
            out_of_budget = true;
            return false;
        }
        if (dead.count(used)) return false;
        for (size_t i = 0; i < t; ++i) {
            if (used.test(static_cast<int>(i))) continue;
            order.push_back(fct[i]);
            bool ok = order.size() == 1 || fct[i].count() < 2 || step_ok(order, order.size() - 1, nullptr);
            if (ok) {
                used.set(static_cast<int>(i));
                if (self(self)) return true;
                used.reset(static_cast<int>(i));
            }
            order.pop_back();
            if (out_of_budget) return false;
        }
        dead.insert(used);
        return false;
    };

    if (rec(rec)) return order;
    if (out_of_budget)
        throw DomainError("shelling search ran out of budget before deciding");
    if (exhausted) *exhausted = true;
    return std::nullopt;
}

ShellabilityDecision decide_shellability(const SimplicialComplex& c, SearchLimits limits) {
    RepresentabilityResult br = is_boolean_representable(c);
    if (!br.representable) throw DomainError("shellability: complex is not boolean representable");

    ShellabilityDecision dec;
    const int d = c.dim();
    if (d <= 1) {
        // A graph is shellable iff at most one component carries an edge.
        std::vector<VertexSet> comps = c.graph_components();
        int with_edge = 0;
        const int n = c.vertex_count();
        for (const VertexSet& comp : comps) {
            bool has = false;
            for (int p = comp.first(); p >= 0 && !has; p = comp.next(p))
                for (int q = comp.next(p); q >= 0 && !has; q = comp.next(q))
                    if (c.is_face(VertexSet::of(n, {p, q}))) has = true;
            with_edge += has ? 1 : 0;
        }
        dec.shellable = with_edge <= 1;
        return dec;
    }
    if (d == 2) {
        SimplicialComplex simple = simplify(c).complex;
        LabeledGraph g = graph_of_flats(simple);
        ComponentReport rep = component_report(simple, g);
        dec.shellable =
            rep.component_count() <= 2 || rep.nontrivial_count() == 1;
        return dec;
    }
    dec.search_based = true;
    dec.shellable = exhaustive_shelling_search(c, limits).has_value();
    return dec;
}

bool is_shellable(const SimplicialComplex& c) { return decide_shellability(c).shellable; }

bool is_shellable_matrix(const BoolMatrix& m) {
    BoolMatrix ms = m.without_duplicate_columns();
    GammaPrediction pred = predict_gamma_fl(ms);
    if (pred.connected_verdict) return true;  // one component
    std::vector<VertexSet> comps = pred.gamma_m.components();
    int nontrivial = 0;  // the simplification is simple: any 2 vertices span a face
    for (const VertexSet& comp : comps)
        if (comp.count() >= 2) ++nontrivial;
    return comps.size() <= 2 || nontrivial == 1;
}

namespace {

// Shelling of a dimension <= 1 complex: edges of the (single) edge-bearing
// component in search order, then isolated-vertex facets.
std::vector<VertexSet> shell_graph(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    std::vector<VertexSet> edges(c.faces_of_size(2));
    std::vector<VertexSet> order;
    VertexSet reached(n);
    std::vector<bool> placed(edges.size(), false);
    for (size_t placed_count = 0; placed_count < edges.size();) {
        bool progress = false;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (placed[i]) continue;
            if (order.empty() || edges[i].intersects(reached)) {
                order.push_back(edges[i]);
                reached |= edges[i];
                placed[i] = true;
                ++placed_count;
                progress = true;
            }
        }
        if (!progress) throw DomainError("shell_graph: edges span multiple components");
    }
    for (const VertexSet& f : c.facets())
        if (f.count() <= 1) order.push_back(f);
    return order;
}

// One unmerge step of the eta lift: facets of the quotient mapped through
// psi_1 / psi_2, the psi_2 copy kept only when the merged class occurs.
std::vector<VertexSet> lift_two_merge(const SimplicialComplex& upper, int a1, int a2,
                                      const std::vector<int>& upper_of_lower,
                                      int merged_class_lower,
                                      const std::vector<VertexSet>& lower_order) {
    const int n = upper.vertex_count();
    std::vector<VertexSet> order;
    for (const VertexSet& b : lower_order) {
        VertexSet img1(n), img2(n);
        bool has_class = false;
        for (int v = b.first(); v >= 0; v = b.next(v)) {
            if (v == merged_class_lower) {
                has_class = true;
                img1.set(a1);
                img2.set(a2);
            } else {
                img1.set(upper_of_lower[static_cast<size_t>(v)]);
                img2.set(upper_of_lower[static_cast<size_t>(v)]);
            }
        }
        order.push_back(img1);
        if (has_class) order.push_back(img2);
    }
    return order;
}

}  // namespace

Shelling lift_shelling(const SimplicialComplex& c, const Partition& tau,
                       const Shelling& quotient_shelling) {
    if (tau.is_identity()) {
        // Block ids may permute the vertex ids (they do after splits), so
        // translate each quotient vertex to its single block member.
        const int n = c.vertex_count();
        std::vector<VertexSet> translated;
        translated.reserve(quotient_shelling.order.size());
        for (const VertexSet& f : quotient_shelling.order) {
            VertexSet g(n);
            for (int b = f.first(); b >= 0; b = f.next(b))
                g.set(tau.blocks[static_cast<size_t>(b)][0]);
            translated.push_back(g);
        }
        return certify_shelling(c, translated);
    }

    // Peel one two-element merge off at the quotient end: split one vertex a2
    // out of a non-singleton block, lift the given shelling across that merge
    // to c/mid, then recurse with the strictly finer partition mid.
    int split_block = -1;
    for (size_t b = 0; b < tau.blocks.size(); ++b)
        if (tau.blocks[b].size() > 1) {
            split_block = static_cast<int>(b);
            break;
        }
    const std::vector<int>& blk = tau.blocks[static_cast<size_t>(split_block)];
    int a2 = blk.back();

    // mid: tau with a2 split into its own block. Block ids of tau are kept,
    // so c/tau vertex b corresponds to c/mid vertex b (b != split_block) and
    // the split_block class corresponds to the merged pair {split_block, B}.
    std::vector<int> mid_block_of = tau.block_of;
    int new_block = static_cast<int>(tau.blocks.size());
    mid_block_of[static_cast<size_t>(a2)] = new_block;
    Partition mid = Partition::from_block_of(std::move(mid_block_of));

    QuotientResult midq = quotient(c, mid);
    const int lower_n = static_cast<int>(tau.blocks.size());
    std::vector<int> upper_of_lower(static_cast<size_t>(lower_n));
    for (int b = 0; b < lower_n; ++b) upper_of_lower[static_cast<size_t>(b)] = b;

    std::vector<VertexSet> lifted = lift_two_merge(midq.complex, split_block, new_block,
                                                   upper_of_lower, split_block,
                                                   quotient_shelling.order);
    Shelling mid_shelling = certify_shelling(midq.complex, lifted);
    return lift_shelling(c, mid, mid_shelling);
}

std::optional<Shelling> find_shelling(const SimplicialComplex& c, SearchLimits limits) {
    ShellabilityDecision dec = decide_shellability(c, limits);
    if (!dec.shellable) return std::nullopt;

    const int d = c.dim();
    if (d <= 1) return certify_shelling(c, shell_graph(c));
    if (d >= 3) {
        auto order = exhaustive_shelling_search(c, limits);
        if (!order) throw DomainError("find_shelling: search failed on shellable input");
        return certify_shelling(c, *order);
    }

    Partition eta = eta_partition(c);
    if (eta.is_identity()) {
        auto order = exhaustive_shelling_search(c, limits);
        if (!order) throw DomainError("find_shelling: search failed on shellable simple input");
        return certify_shelling(c, *order);
    }
    QuotientResult simple = quotient(c, eta);
    auto simple_order = exhaustive_shelling_search(simple.complex, limits);
    if (!simple_order) throw DomainError("find_shelling: simplification search failed");
    Shelling qs = certify_shelling(simple.complex, *simple_order);
    return lift_shelling(c, eta, qs);
}

std::vector<long long> betti_from_shelling(const SimplicialComplex& c, const Shelling& s) {
    if (c.dim() > 2) throw DomainError("betti_from_shelling: requires dimension <= 2");
    if (auto fail = validate_shelling(c, s.order))
        throw DomainError("betti_from_shelling: invalid shelling at step " +
                          std::to_string(fail->step));
    Shelling certified = certify_shelling(c, s.order);
    std::vector<long long> w(static_cast<size_t>(c.dim() + 1), 0);
    for (int k : certified.homology_facets)
        ++w[static_cast<size_t>(certified.order[static_cast<size_t>(k)].count() - 1)];
    return w;
}

}  // namespace brsc
