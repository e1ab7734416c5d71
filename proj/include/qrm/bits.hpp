#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qrm {

// Generator subsets J of S = {e_1..e_m}; bit (i-1) holds e_i.
using Mask = std::uint32_t;
// Hypercube vertices with the same bit convention.
using Vertex = std::uint32_t;

inline constexpr int kMaxDimension = 20;

inline int popcount(Mask x) { return std::popcount(x); }

inline Mask full_mask(int m) { return m >= 32 ? ~Mask{0} : ((Mask{1} << m) - 1); }

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

// Sorted element list (1-based) of a generator subset.
inline std::vector<int> mask_elements(Mask J) {
    std::vector<int> out;
    for (int i = 0; J != 0; ++i, J >>= 1)
        if (J & 1U) out.push_back(i + 1);
    return out;
}

// "{1,3}" style rendering of a generator subset.
inline std::string mask_to_set_string(Mask J) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(J)) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

// Ordering of generator subsets: by size, then lexicographic on sorted
// element lists. For equal sizes the set holding the lowest differing
// element comes first.
inline bool index_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    Mask low = (a ^ b) & (~(a ^ b) + 1);
    return (a & low) != 0;
}

// Fixed-length bit vector over F_2, stored in 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other) {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }
    BitVec& operator&=(const BitVec& other) {
        check_same(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t and_count(const BitVec& other) const {
        check_same(other);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    // Index of the lowest set bit, or size() when zero.
    std::size_t lowest() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return nbits_;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;
    friend auto operator<=>(const BitVec&, const BitVec&) = default;

private:
    void check_same(const BitVec& other) const {
        if (other.nbits_ != nbits_) throw UsageError("bit vector length mismatch");
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Incrementally built F_2 row space with membership queries.
class F2Basis {
public:
    explicit F2Basis(std::size_t nbits) : nbits_(nbits) {}

    // Returns true when v was independent of the rows already present.
    bool insert(BitVec v) {
        reduce(v);
        std::size_t p = v.lowest();
        if (p == nbits_) return false;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    bool contains(BitVec v) const {
        reduce(v);
        return !v.any();
    }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }

private:
    void reduce(BitVec& v) const {
        if (v.size() != nbits_) throw UsageError("bit vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
    }

    std::size_t nbits_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace qrm
