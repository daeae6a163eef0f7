// Word-level helpers for packed bitsets.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace bamin::detail {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(const Word* w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(Word* w, std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(Word* w, std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

inline bool intersects(const Word* a, const Word* b, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

inline bool any_bit(const Word* a, std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i)
        if (a[i]) return true;
    return false;
}

template <class F>
inline void for_each_bit(const Word* w, std::size_t nw, F&& f) {
    for (std::size_t i = 0; i < nw; ++i) {
        Word x = w[i];
        while (x) {
            f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
            x &= x - 1;
        }
    }
}

}  // namespace bamin::detail
