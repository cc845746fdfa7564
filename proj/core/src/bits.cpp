#include "qaoa/bits.hpp"

#include <bit>

namespace qaoa {

Bits& Bits::operator^=(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
}

bool Bits::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

std::size_t Bits::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<int> Bits::ones() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t w = words_[k];
        while (w) {
            out.push_back(static_cast<int>(k * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

}  // namespace qaoa
