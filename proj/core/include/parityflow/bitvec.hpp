#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parityflow {

// Fixed-length vector over F2, packed into 64-bit words. Bits past size() are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t j) {
        BitVec v(n);
        v.set(j, true);
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t num_words() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool b) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    BitVec& operator&=(const BitVec& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    bool operator==(const BitVec&) const = default;

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    // Number of positions where both are set.
    static std::size_t and_count(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t k = 0; k < a.words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(a.words_[k] & b.words_[k]));
        return c;
    }
    static bool dot(const BitVec& a, const BitVec& b) { return and_count(a, b) & 1u; }

    // First character is index 0.
    std::string to_string() const;
    static BitVec from_string(std::string_view s);

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace parityflow
