#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace brsc {

/// Subset of a fixed vertex universe {0, ..., universe-1}, stored as a bitset.
/// Vertex order is the index order; all face and flat machinery is keyed by it.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : nbits_(universe), words_(static_cast<size_t>((universe + 63) / 64), 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return nbits_; }

    bool test(int v) const {
        return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
    }
    void set(int v) { words_[static_cast<size_t>(v) >> 6] |= uint64_t{1} << (v & 63); }
    void reset(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(uint64_t{1} << (v & 63)); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    /// True when other is a subset of *this.
    bool contains(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & ~words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (other.words_[i] & words_[i]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(nbits_);
        for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.set(v);
        return s;
    }
    VertexSet without(int v) const {
        VertexSet s = *this;
        s.reset(v);
        return s;
    }

    bool operator==(const VertexSet& o) const = default;

    int first() const { return next(-1); }
    /// Smallest element strictly greater than v, or -1.
    int next(int v) const {
        for (int i = v + 1; i < nbits_;) {
            size_t wi = static_cast<size_t>(i) >> 6;
            uint64_t w = words_[wi] >> (i & 63);
            if (w) return i + __builtin_ctzll(w);
            i = static_cast<int>((wi + 1) << 6);
        }
        return -1;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    size_t hash() const {
        size_t h = static_cast<size_t>(nbits_) * 0x9e3779b97f4a7c15ull;
        for (uint64_t w : words_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

    /// Deterministic total order: cardinality, then lexicographic by smallest element.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (int va = a.first(), vb = b.first(); va >= 0 && vb >= 0;
             va = a.next(va), vb = b.next(vb)) {
            if (va != vb) return va < vb;
        }
        return false;
    }

private:
    void trim() {
        int extra = nbits_ & 63;
        if (extra && !words_.empty()) words_.back() &= (uint64_t{1} << extra) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace brsc
