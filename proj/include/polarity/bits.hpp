#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>
#include <string>

namespace polarity {

// Fixed-universe bitset used for adjacency rows and vertex sets.
// The universe size (number of vertices of the host graph) is carried
// explicitly so word-parallel operations can assume equal lengths.
class Bits {
public:
    Bits() = default;
    explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator-=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator-(Bits a, const Bits& b) { return a -= b; }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bits& o) const { return !(*this == o); }

    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subsetOf(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Complement within the universe; keeps padding bits zero.
    Bits complemented() const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    int first() const {  // lowest set bit, -1 if none
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    int next(int after) const {  // lowest set bit > after, -1 if none
        int i = after + 1;
        if (i >= n_) return -1;
        size_t wi = i >> 6;
        uint64_t w = w_[wi] >> (i & 63);
        if (w) return i + __builtin_ctzll(w);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return int(wi * 64 + __builtin_ctzll(w_[wi]));
        return -1;
    }

    std::vector<int> toVector() const {
        std::vector<int> v;
        v.reserve(count());
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    static Bits ofVertices(int universe, std::initializer_list<int> vs) {
        Bits b(universe);
        for (int v : vs) b.set(v);
        return b;
    }
    static Bits ofVertices(int universe, const std::vector<int>& vs) {
        Bits b(universe);
        for (int v : vs) b.set(v);
        return b;
    }
    static Bits full(int universe) {
        Bits b(universe);
        for (auto& w : b.w_) w = ~uint64_t(0);
        b.trim();
        return b;
    }

    // Order on vertex sets as sorted lists, i.e. {0,2} < {1,2}.
    // The smaller set is the one owning the smallest differing element.
    static bool lexLess(const Bits& a, const Bits& b) {
        for (size_t i = 0; i < a.w_.size(); ++i) {
            uint64_t d = a.w_[i] ^ b.w_[i];
            if (d) return a.w_[i] & (d & -d);
        }
        return false;
    }

    std::string str() const {  // "{0,3,5}" for diagnostics
        std::string s = "{";
        for (int i = first(); i >= 0; i = next(i)) {
            if (s.size() > 1) s += ',';
            s += std::to_string(i);
        }
        return s + "}";
    }

    size_t hash() const {
        size_t h = size_t(n_) * 0x9e3779b97f4a7c15ull;
        for (uint64_t w : w_) h = (h ^ w) * 0x100000001b3ull;
        return h;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.assign(w_.size(), 0);
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

using VertexSet = Bits;

}  // namespace polarity
