#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hm {

/// Set of vertices drawn from a fixed universe 1..n.
///
/// For n <= 64 the set lives in a single machine word; larger universes
/// spill into a word vector. All binary operations require both operands
/// to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("VertexSet: negative universe");
        if (!small()) spill_.assign(word_count(), 0);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    int universe_size() const { return n_; }

    bool contains(int v) const {
        check_vertex(v);
        const int i = v - 1;
        if (small()) return (bits_ >> i) & 1u;
        return (spill_[i >> 6] >> (i & 63)) & 1u;
    }

    void insert(int v) {
        check_vertex(v);
        const int i = v - 1;
        if (small()) bits_ |= std::uint64_t{1} << i;
        else spill_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void erase(int v) {
        check_vertex(v);
        const int i = v - 1;
        if (small()) bits_ &= ~(std::uint64_t{1} << i);
        else spill_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        bits_ = 0;
        for (auto& w : spill_) w = 0;
    }

    int count() const {
        if (small()) return std::popcount(bits_);
        int c = 0;
        for (auto w : spill_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        if (small()) return bits_ == 0;
        for (auto w : spill_)
            if (w != 0) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        check_universe(o);
        if (small()) return (bits_ & o.bits_) != 0;
        for (std::size_t i = 0; i < spill_.size(); ++i)
            if (spill_[i] & o.spill_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_universe(o);
        if (small()) return (bits_ & ~o.bits_) == 0;
        for (std::size_t i = 0; i < spill_.size(); ++i)
            if (spill_[i] & ~o.spill_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_universe(o);
        if (small()) bits_ |= o.bits_;
        else
            for (std::size_t i = 0; i < spill_.size(); ++i) spill_[i] |= o.spill_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        check_universe(o);
        if (small()) bits_ &= o.bits_;
        else
            for (std::size_t i = 0; i < spill_.size(); ++i) spill_[i] &= o.spill_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        check_universe(o);
        if (small()) bits_ &= ~o.bits_;
        else
            for (std::size_t i = 0; i < spill_.size(); ++i) spill_[i] &= ~o.spill_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (int v = 1; v <= n_; ++v)
            if (!contains(v)) r.insert(v);
        return r;
    }

    bool operator==(const VertexSet& o) const {
        if (n_ != o.n_) return false;
        if (small()) return bits_ == o.bits_;
        return spill_ == o.spill_;
    }

    /// Smallest member, or 0 when empty.
    int smallest() const {
        if (small()) return bits_ ? std::countr_zero(bits_) + 1 : 0;
        for (std::size_t i = 0; i < spill_.size(); ++i)
            if (spill_[i]) return int(i * 64) + std::countr_zero(spill_[i]) + 1;
        return 0;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        if (small()) {
            std::uint64_t w = bits_;
            while (w) {
                f(std::countr_zero(w) + 1);
                w &= w - 1;
            }
            return;
        }
        for (std::size_t i = 0; i < spill_.size(); ++i) {
            std::uint64_t w = spill_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w) + 1);
                w &= w - 1;
            }
        }
    }

    /// Single-word view; only valid when the universe fits one word.
    std::uint64_t word() const {
        if (!small()) throw std::logic_error("VertexSet: universe exceeds one word");
        return bits_;
    }

private:
    bool small() const { return n_ <= 64; }
    std::size_t word_count() const { return std::size_t(n_ + 63) / 64; }

    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::out_of_range("VertexSet: vertex out of range");
    }
    void check_universe(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> spill_;
};

}  // namespace hm
