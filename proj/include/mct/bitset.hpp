#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mct {

// Fixed-width bitset sized at runtime. Adjacency rows and used-edge masks
// are stored in these; the hot loops are and_count / for_each_common.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool intersects(const Bitset& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int and_count(const Bitset& other) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    // Count of bits set in *this but not in other.
    int andnot_count(const Bitset& other) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & ~other.words_[i]);
        return c;
    }

    Bitset& operator|=(const Bitset& other) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    template <typename Fn>
    void for_each_common(const Bitset& other, Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i] & other.words_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace mct
