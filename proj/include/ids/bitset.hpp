#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "ids/kernels.hpp"

namespace ids {

// Fixed-width dynamic bitset. Bulk operations go through the dispatched word
// kernels; bits past size() are kept zero so whole-word ops need no masking.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits) : nbits_(nbits), w_(words_for(nbits), 0) {}

    static DynBitset full(std::size_t nbits) {
        DynBitset s(nbits);
        s.fill();
        return s;
    }

    static DynBitset from_indices(std::size_t nbits, std::span<const int> idxs) {
        DynBitset s(nbits);
        for (int i : idxs) s.set(static_cast<std::size_t>(i));
        return s;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void fill() {
        std::fill(w_.begin(), w_.end(), ~std::uint64_t{0});
        trim_tail();
    }

    std::size_t count() const { return kernels::active().popcount(w_.data(), w_.size()); }
    bool any() const { return kernels::active().any(w_.data(), w_.size()); }
    bool none() const { return !any(); }

    DynBitset& operator|=(const DynBitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_or(w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_and(w_.data(), o.w_.data(), w_.size());
        return *this;
    }
    // *this &= ~o
    DynBitset& andnot(const DynBitset& o) {
        assert(nbits_ == o.nbits_);
        kernels::active().bit_andnot(w_.data(), o.w_.data(), w_.size());
        return *this;
    }

    bool is_subset_of(const DynBitset& o) const {
        assert(nbits_ == o.nbits_);
        return kernels::active().is_subset(w_.data(), o.w_.data(), w_.size());
    }

    bool operator==(const DynBitset& o) const {
        return nbits_ == o.nbits_ && kernels::active().equals(w_.data(), o.w_.data(), w_.size());
    }

    // -1 when exhausted.
    int find_first() const { return scan_from(0); }
    int find_next(int prev) const { return scan_from(static_cast<std::size_t>(prev) + 1); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    const std::uint64_t* words() const { return w_.data(); }
    std::size_t word_count() const { return w_.size(); }

private:
    static std::size_t words_for(std::size_t nbits) { return (nbits + 63) / 64; }

    void trim_tail() {
        std::size_t rem = nbits_ & 63;
        if (rem && !w_.empty()) w_.back() &= (std::uint64_t{1} << rem) - 1;
    }

    int scan_from(std::size_t bit) const {
        if (bit >= nbits_) return -1;
        std::size_t wi = bit >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (bit & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi == w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace ids
