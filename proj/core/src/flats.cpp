#include "brsc/flats.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "brsc/errors.hpp"

namespace brsc {

int FlatLattice::index_of(const VertexSet& f) const {
    for (int i = 0; i < size(); ++i)
        if (flats[static_cast<size_t>(i)] == f) return i;
    return -1;
}

int FlatLattice::bottom() const { return 0; }
int FlatLattice::top() const { return size() - 1; }

int FlatLattice::meet(int a, int b) const {
    VertexSet m = flats[static_cast<size_t>(a)] & flats[static_cast<size_t>(b)];
    int i = index_of(m);
    if (i < 0) throw DomainError("lattice not closed under intersection");
    return i;
}

int FlatLattice::join(int a, int b) const {
    VertexSet u = flats[static_cast<size_t>(a)] | flats[static_cast<size_t>(b)];
    // Smallest flat containing the union.
    int best = -1;
    for (int i = 0; i < size(); ++i) {
        if (flats[static_cast<size_t>(i)].contains(u)) {
            if (best < 0 || flats[static_cast<size_t>(best)].contains(flats[static_cast<size_t>(i)]))
                best = i;
        }
    }
    return best;
}

std::vector<int> FlatLattice::covers_above(int a) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : covers)
        if (lo == a) out.push_back(hi);
    return out;
}

std::vector<int> FlatLattice::covers_below(int b) const {
    std::vector<int> out;
    for (const auto& [lo, hi] : covers)
        if (hi == b) out.push_back(lo);
    return out;
}

std::string FlatLattice::flat_label(int i) const {
    const VertexSet& f = flats[static_cast<size_t>(i)];
    if (f.empty()) return "{}";
    if (f.count() == universe()) return "V";
    bool single_chars = true;
    for (const auto& nm : vertex_names)
        if (nm.size() != 1) single_chars = false;
    std::string out;
    for (int v = f.first(); v >= 0; v = f.next(v)) {
        if (!out.empty() && !single_chars) out += ' ';
        out += vertex_names[static_cast<size_t>(v)];
    }
    return out;
}

Partition Partition::identity(int n) {
    Partition p;
    p.block_of.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        p.block_of[static_cast<size_t>(v)] = v;
        p.blocks.push_back({v});
    }
    return p;
}

Partition Partition::from_block_of(std::vector<int> block_of) {
    Partition p;
    p.block_of = std::move(block_of);
    int nblocks = 0;
    for (int b : p.block_of) nblocks = std::max(nblocks, b + 1);
    p.blocks.assign(static_cast<size_t>(nblocks), {});
    for (size_t v = 0; v < p.block_of.size(); ++v)
        p.blocks[static_cast<size_t>(p.block_of[v])].push_back(static_cast<int>(v));
    for (const auto& blk : p.blocks)
        if (blk.empty()) throw DomainError("partition has an empty block");
    return p;
}

bool Partition::refines(const Partition& coarser) const {
    if (block_of.size() != coarser.block_of.size()) return false;
    for (const auto& blk : blocks) {
        int target = coarser.block_of[static_cast<size_t>(blk.front())];
        for (int v : blk)
            if (coarser.block_of[static_cast<size_t>(v)] != target) return false;
    }
    return true;
}

bool Partition::is_identity() const { return blocks.size() == block_of.size(); }

ClosureEngine::ClosureEngine(const SimplicialComplex& c) : c_(&c) {
    const int n = c.vertex_count();
    face_sets_ = c.all_faces();
    blocked_.reserve(face_sets_.size());
    for (const VertexSet& f : face_sets_) {
        // p outside f with f ∪ {p} not a face: p belongs to every flat containing f.
        VertexSet bad(n);
        for (int p = 0; p < n; ++p) {
            if (!f.test(p) && !c.is_face(f.with(p))) bad.set(p);
        }
        blocked_.push_back(bad);
    }
}

VertexSet ClosureEngine::closure(const VertexSet& x) const {
    const int n = c_->vertex_count();
    if (x.universe() != n) throw DomainError("closure: subset over wrong universe");
    VertexSet y = x;
    VertexSet full = VertexSet::full(n);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < face_sets_.size(); ++i) {
            if (y.contains(face_sets_[i]) && !y.contains(blocked_[i])) {
                y |= blocked_[i];
                grew = true;
                if (y == full) return y;
            }
        }
    }
    return y;
}

VertexSet closure(const SimplicialComplex& c, const VertexSet& x) {
    return ClosureEngine(c).closure(x);
}

std::vector<VertexSet> all_flats(const SimplicialComplex& c) {
    ClosureEngine eng(c);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const VertexSet& f : c.all_faces()) seen.insert(eng.closure(f));
    seen.insert(c.full_set());
    std::vector<VertexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
}

std::vector<VertexSet> all_flats_by_definition(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    if (n > 20) throw DomainError("definition scan limited to 20 vertices");
    std::vector<VertexSet> faces = c.all_faces();
    std::vector<VertexSet> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
        VertexSet f(n);
        for (int v = 0; v < n; ++v)
            if ((bits >> v) & 1) f.set(v);
        bool flat = true;
        for (const VertexSet& i : faces) {
            if (!flat) break;
            if (!f.contains(i)) continue;
            for (int p = 0; p < n && flat; ++p)
                if (!f.test(p) && !c.is_face(i.with(p))) flat = false;
        }
        if (flat) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
}

FlatLattice lattice_from_flats(std::vector<std::string> vertex_names, std::vector<VertexSet> flats) {
    FlatLattice l;
    l.vertex_names = std::move(vertex_names);
    std::sort(flats.begin(), flats.end(), VertexSet::size_lex_less);
    l.flats = std::move(flats);
    const int f = l.size();
    for (int a = 0; a < f; ++a) {
        for (int b = 0; b < f; ++b) {
            if (a == b) continue;
            const VertexSet& fa = l.flats[static_cast<size_t>(a)];
            const VertexSet& fb = l.flats[static_cast<size_t>(b)];
            if (!(fb.contains(fa) && fa != fb)) continue;
            bool cover = true;
            for (int m = 0; m < f && cover; ++m) {
                if (m == a || m == b) continue;
                const VertexSet& fm = l.flats[static_cast<size_t>(m)];
                if (fm.contains(fa) && fa != fm && fb.contains(fm) && fm != fb) cover = false;
            }
            if (cover) l.covers.emplace_back(a, b);
        }
    }
    return l;
}

FlatLattice flat_lattice(const SimplicialComplex& c) {
    return lattice_from_flats(c.vertex_names(), all_flats(c));
}

RepresentabilityResult is_boolean_representable(const SimplicialComplex& c) {
    ClosureEngine eng(c);
    std::unordered_map<VertexSet, VertexSet, VertexSetHash> closure_of;
    auto cl = [&](const VertexSet& s) -> const VertexSet& {
        auto it = closure_of.find(s);
        if (it == closure_of.end()) it = closure_of.emplace(s, eng.closure(s)).first;
        return it->second;
    };

    // ok(S): S admits an enumeration with strictly increasing prefix closures.
    std::unordered_map<VertexSet, bool, VertexSetHash> ok;
    ok.emplace(VertexSet(c.vertex_count()), true);
    for (int k = 1; k <= c.dim() + 1; ++k) {
        for (const VertexSet& f : c.faces_of_size(k)) {
            bool good = false;
            const VertexSet& cf = cl(f);
            for (int x = f.first(); x >= 0 && !good; x = f.next(x)) {
                VertexSet sub = f.without(x);
                if (ok.at(sub) && cl(sub) != cf) good = true;
            }
            ok.emplace(f, good);
            if (!good && k == f.count()) {
                // Subsets of faces are faces, so a failing minimal witness is
                // itself a face; report the first one met.
                RepresentabilityResult r;
                r.representable = false;
                r.failing_face = f;
                return r;
            }
        }
    }
    return RepresentabilityResult{true, std::nullopt};
}

Partition eta_partition(const SimplicialComplex& c) {
    const int n = c.vertex_count();
    ClosureEngine eng(c);
    std::vector<VertexSet> cl(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cl[static_cast<size_t>(v)] = eng.closure(VertexSet::of(n, {v}));

    std::vector<int> block_of(static_cast<size_t>(n), -1);
    int nblocks = 0;
    for (int v = 0; v < n; ++v) {
        if (block_of[static_cast<size_t>(v)] >= 0) continue;
        block_of[static_cast<size_t>(v)] = nblocks;
        for (int w = v + 1; w < n; ++w)
            if (block_of[static_cast<size_t>(w)] < 0 && cl[static_cast<size_t>(w)] == cl[static_cast<size_t>(v)])
                block_of[static_cast<size_t>(w)] = nblocks;
        ++nblocks;
    }
    // Cross-check against the pair-nonface criterion; a mismatch means the
    // complex was not boolean representable.
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            bool same = block_of[static_cast<size_t>(p)] == block_of[static_cast<size_t>(q)];
            bool nonface = !c.is_face(VertexSet::of(n, {p, q}));
            if (same != nonface)
                throw DomainError("eta_partition: complex is not boolean representable");
        }
    }
    return Partition::from_block_of(std::move(block_of));
}

namespace {

std::string block_name(const SimplicialComplex& c, const std::vector<int>& blk) {
    std::string out;
    for (int v : blk) out += c.vertex_names()[static_cast<size_t>(v)];
    return out;
}

}  // namespace

QuotientResult quotient(const SimplicialComplex& c, const Partition& tau) {
    if (static_cast<int>(tau.block_of.size()) != c.vertex_count())
        throw DomainError("quotient: partition over wrong vertex set");
    Partition eta = eta_partition(c);
    if (!tau.refines(eta)) throw DomainError("quotient: tau does not refine eta");

    const int m = static_cast<int>(tau.blocks.size());
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(m));
    for (const auto& blk : tau.blocks) names.push_back(block_name(c, blk));

    std::vector<VertexSet> gens;
    for (const VertexSet& f : c.facets()) {
        VertexSet img(m);
        for (int v = f.first(); v >= 0; v = f.next(v)) img.set(tau.block_of[static_cast<size_t>(v)]);
        if (img.count() != f.count())
            throw DomainError("quotient: projection not rank-preserving");
        gens.push_back(img);
    }
    QuotientResult out;
    out.complex = SimplicialComplex::from_generators(std::move(names), gens);
    out.projection = tau.block_of;
    return out;
}

QuotientResult simplify(const SimplicialComplex& c) { return quotient(c, eta_partition(c)); }

BoolMatrix canonical_matrix(const SimplicialComplex& c) {
    RepresentabilityResult br = is_boolean_representable(c);
    if (!br.representable)
        throw DomainError("canonical_matrix: complex is not boolean representable");

    FlatLattice l = flat_lattice(c);
    std::vector<std::string> row_labels;
    std::vector<VertexSet> rows;
    for (int i = 0; i < l.size(); ++i) {
        if (i == l.top()) continue;
        row_labels.push_back(l.flat_label(i));
        rows.push_back(l.flats[static_cast<size_t>(i)].complement());
    }
    BoolMatrix m(std::move(row_labels), c.vertex_names(), std::move(rows));

    SimplicialComplex rederived = m.to_complex();
    for (const VertexSet& f : rederived.all_faces())
        if (!c.is_face(f)) throw DomainError("canonical_matrix: rederived faces differ");
    if (rederived.face_count() != c.face_count())
        throw DomainError("canonical_matrix: rederived faces differ");
    return m;
}

BoolMatrix simplify_matrix(const BoolMatrix& m) {
    if (!m.is_reduced()) throw DomainError("simplify_matrix: matrix not reduced");
    return m.without_duplicate_columns();
}

}  // namespace brsc
