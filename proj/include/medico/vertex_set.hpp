#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace medico {

/// Set of vertices from a fixed universe 0..n-1, bit-packed into 64-bit words.
/// Bits at positions >= n are always zero.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) {
            if (w) return true;
        }
        return false;
    }
    bool none() const { return !any(); }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i] & ~o.w_[i]) return false;
        }
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i] & o.w_[i]) return true;
        }
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    /// Smallest member, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        }
        return -1;
    }
    /// Smallest member > v, or -1.
    int next(int v) const {
        int i = (v + 1) >> 6;
        if (i >= int(w_.size())) return -1;
        std::uint64_t w = w_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= int(w_.size())) return -1;
            w = w_[i];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

    /// popcount(a & b & c), stopping early once the count exceeds cap.
    static int count3_capped(const VertexSet& a, const VertexSet& b, const VertexSet& c, int cap) {
        int n = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            n += std::popcount(a.w_[i] & b.w_[i] & c.w_[i]);
            if (n > cap) return n;
        }
        return n;
    }
    static bool any3(const VertexSet& a, const VertexSet& b, const VertexSet& c) {
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            if (a.w_[i] & b.w_[i] & c.w_[i]) return true;
        }
        return false;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~std::uint64_t{0}) >> (64 - (n_ & 63));
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace medico
