#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qaoa {

// Packed bit string of fixed length; bit i is edge (or vertex) index i.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    Bits& operator^=(const Bits& o);
    bool any() const;
    std::size_t count() const;
    // Indices of set bits in increasing order.
    std::vector<int> ones() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }
    friend bool operator<(const Bits& a, const Bits& b) {
        return a.size_ != b.size_ ? a.size_ < b.size_ : a.words_ < b.words_;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qaoa
