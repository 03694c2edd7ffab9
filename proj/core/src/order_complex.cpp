#include "brsc/order_complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "brsc/errors.hpp"

namespace brsc {

OrderComplexResult order_complex(const FlatLattice& l) {
    if (l.size() < 2) throw DomainError("order_complex: lattice needs at least bottom and top");
    OrderComplexResult out;
    const int bot = l.bottom(), top = l.top();
    std::vector<std::string> names;
    std::vector<int> lattice_of(static_cast<size_t>(l.size()), -1);
    for (int i = 0; i < l.size(); ++i) {
        if (i == bot || i == top) continue;
        lattice_of[static_cast<size_t>(i)] = static_cast<int>(names.size());
        out.flat_of_vertex.push_back(i);
        names.push_back(l.flat_label(i));
    }
    if (names.empty()) {
        out.complex = SimplicialComplex();
        return out;
    }

    // Facets = maximal chains of L with the endpoints dropped; enumerate by
    // walking covers from bottom to top.
    std::vector<VertexSet> gens;
    const int m = static_cast<int>(names.size());
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == top) {
            VertexSet g(m);
            for (int f : chain) g.set(lattice_of[static_cast<size_t>(f)]);
            gens.push_back(g);
            return;
        }
        for (int up : l.covers_above(at)) {
            if (up != top) chain.push_back(up);
            self(self, up);
            if (up != top) chain.pop_back();
        }
    };
    dfs(dfs, bot);
    out.complex = SimplicialComplex::from_generators(std::move(names), gens);
    return out;
}

Shelling transfer_shelling(const SimplicialComplex& c, const FlatLattice& l,
                           const OrderComplexResult& ord, const std::vector<VertexSet>& ord_order) {
    if (auto fail = validate_shelling(ord.complex, ord_order))
        throw DomainError("transfer_shelling: input order is not a shelling of the order complex");

    const int n = c.vertex_count();
    std::vector<VertexSet> out_order;
    std::unordered_set<VertexSet, VertexSetHash> emitted;
    // Keep facets only: in a non-pure complex a maximal chain can also have
    // transversals that are faces below another facet.
    std::unordered_set<VertexSet, VertexSetHash> fct(c.facets().begin(), c.facets().end());

    for (const VertexSet& b : ord_order) {
        // Rebuild the maximal chain Ø = F_0 ⊂ ... ⊂ F_k = V.
        std::vector<int> flats_idx;
        for (int v = b.first(); v >= 0; v = b.next(v))
            flats_idx.push_back(ord.flat_of_vertex[static_cast<size_t>(v)]);
        std::sort(flats_idx.begin(), flats_idx.end(), [&](int x, int y) {
            return l.flats[static_cast<size_t>(y)].contains(l.flats[static_cast<size_t>(x)]) &&
                   x != y;
        });
        std::vector<VertexSet> chain{l.flats[static_cast<size_t>(l.bottom())]};
        for (int f : flats_idx) chain.push_back(l.flats[static_cast<size_t>(f)]);
        chain.push_back(l.flats[static_cast<size_t>(l.top())]);

        // Per-level candidates, each difference sorted by the global vertex
        // order; transversals enumerated lexicographically by odometer.
        std::vector<std::vector<int>> level(chain.size() - 1);
        for (size_t i = 1; i < chain.size(); ++i)
            level[i - 1] = (chain[i] - chain[i - 1]).elements();
        std::vector<size_t> pick(level.size(), 0);
        bool done = false;
        while (!done) {
            VertexSet facet(n);
            for (size_t i = 0; i < level.size(); ++i) facet.set(level[i][pick[i]]);
            if (fct.count(facet) && emitted.insert(facet).second) out_order.push_back(facet);
            done = true;
            for (size_t i = level.size(); i-- > 0;) {
                if (++pick[i] < level[i].size()) {
                    done = false;
                    break;
                }
                pick[i] = 0;
            }
        }
    }
    if (auto fail = validate_shelling(c, out_order))
        throw DomainError("transfer_shelling: transferred order failed validation at step " +
                          std::to_string(fail->step));
    return certify_shelling(c, out_order);
}

namespace {

// Lexicographic order on label words: a proper prefix is smaller; otherwise
// the first differing letter decides.
bool word_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    size_t k = std::min(a.size(), b.size());
    for (size_t i = 0; i < k; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

bool word_increasing(const std::vector<long long>& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (!(w[i - 1] < w[i])) return false;
    return true;
}

}  // namespace

std::optional<ELFailure> verify_el_labeling(const FlatLattice& l, const ELLabeling& xi) {
    for (const auto& [lo, hi] : l.covers)
        if (!xi.label.count({lo, hi}))
            throw DomainError("verify_el_labeling: labeling misses cover " + l.flat_label(lo) +
                              " -> " + l.flat_label(hi));

    const int f = l.size();
    for (int a = 0; a < f; ++a) {
        for (int b = 0; b < f; ++b) {
            if (a == b || !l.leq(a, b)) continue;
            // Maximal chains of [a, b] with their label words.
            std::vector<std::vector<long long>> words;
            std::vector<long long> word;
            uint64_t emitted = 0;
            auto dfs = [&](auto&& self, int at) -> void {
                if (at == b) {
                    words.push_back(word);
                    if (++emitted > 2'000'000)
                        throw DomainError("verify_el_labeling: interval has too many chains");
                    return;
                }
                for (int up : l.covers_above(at)) {
                    if (!l.leq(up, b)) continue;
                    word.push_back(xi.label.at({at, up}));
                    self(self, up);
                    word.pop_back();
                }
            };
            dfs(dfs, a);

            int increasing = -1;
            for (size_t i = 0; i < words.size(); ++i) {
                if (word_increasing(words[i])) {
                    if (increasing >= 0)
                        return ELFailure{a, b, "two increasing maximal chains"};
                    increasing = static_cast<int>(i);
                }
            }
            if (increasing < 0) return ELFailure{a, b, "no increasing maximal chain"};
            for (size_t i = 0; i < words.size(); ++i) {
                if (static_cast<int>(i) == increasing) continue;
                if (!word_less(words[static_cast<size_t>(increasing)], words[i]))
                    return ELFailure{a, b, "increasing chain is not lexicographically least"};
            }
        }
    }
    return std::nullopt;
}

std::optional<ELLabeling> search_el_labeling(const FlatLattice& l, int alphabet, uint64_t budget) {
    const size_t e = l.covers.size();
    if (e > 16) throw DomainError("search_el_labeling: too many cover edges");
    std::vector<int> assign(e, 1);
    uint64_t tried = 0;
    while (true) {
        ELLabeling xi;
        for (size_t i = 0; i < e; ++i) xi.label[l.covers[i]] = assign[i];
        if (!verify_el_labeling(l, xi)) return xi;
        if (++tried > budget) return std::nullopt;
        size_t i = 0;
        while (i < e && ++assign[i] > alphabet) {
            assign[i] = 1;
            ++i;
        }
        if (i == e) return std::nullopt;
    }
}

}  // namespace brsc
