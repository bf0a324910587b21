#pragma once

#include <cstdint>
#include <vector>

#include "flipcover/kernels.hpp"

namespace flipcover {

// Dynamic fixed-width bitset routed through the dispatched word kernels.
// Invariant: bits at positions >= size() are always zero, so whole-word
// equality and popcounts need no trailing mask.
class bitrow {
public:
    bitrow() = default;
    explicit bitrow(int nbits) : nbits_(nbits), w_(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

    int size() const { return nbits_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }

    void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void assign(int i, bool v) { v ? set(i) : reset(i); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        if (nbits_ == 0) return;
        std::fill(w_.begin(), w_.end(), ~std::uint64_t(0));
        trim();
    }

    void flip_all() {
        for (auto& w : w_) w = ~w;
        trim();
    }

    void and_with(const bitrow& o) { kern::active().band(w_.data(), w_.data(), o.w_.data(), w_.size()); }
    void or_with(const bitrow& o) { kern::active().bor(w_.data(), w_.data(), o.w_.data(), w_.size()); }
    void xor_with(const bitrow& o) { kern::active().bxor(w_.data(), w_.data(), o.w_.data(), w_.size()); }
    void andnot_with(const bitrow& o) { kern::active().bandnot(w_.data(), w_.data(), o.w_.data(), w_.size()); }

    int count() const { return static_cast<int>(kern::active().popcount(w_.data(), w_.size())); }
    int count_and(const bitrow& o) const {
        return static_cast<int>(kern::active().popcount_and(w_.data(), o.w_.data(), w_.size()));
    }
    int count_xor(const bitrow& o) const {
        return static_cast<int>(kern::active().popcount_xor(w_.data(), o.w_.data(), w_.size()));
    }
    // # adjacent positions (i, i+1), i+1 < size, whose bits differ.
    int boundary() const { return static_cast<int>(kern::active().boundary(w_.data(), static_cast<std::size_t>(nbits_))); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    bool intersects(const bitrow& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const bitrow& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    // Next set bit at position >= from, or -1.
    int next(int from) const {
        if (from < 0) from = 0;
        if (from >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t cur = w_[wi] >> (from & 63);
        if (cur) return from + __builtin_ctzll(cur);
        for (++wi; wi < w_.size(); ++wi)
            if (w_[wi]) return static_cast<int>(wi * 64) + __builtin_ctzll(w_[wi]);
        return -1;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    std::size_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : w_) {
            h ^= w;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }

    friend bool operator==(const bitrow& a, const bitrow& b) = default;

private:
    void trim() {
        int tail = nbits_ & 63;
        if (tail && !w_.empty()) w_.back() &= (std::uint64_t(1) << tail) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

struct bitrow_hash {
    std::size_t operator()(const bitrow& b) const { return b.hash(); }
};

inline bitrow make_bitrow(int nbits, const std::vector<int>& members) {
    bitrow b(nbits);
    for (int i : members) b.set(i);
    return b;
}

} // namespace flipcover
