#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstddef>

namespace slq {

/// Fixed-width bit vector used as one adjacency row. `Words` machine words
/// give room for 64*Words vertices; the default profile uses a single word.
template <std::size_t Words = 1>
struct BitRow {
    static_assert(Words >= 1);
    static constexpr int capacity = static_cast<int>(64 * Words);

    std::array<std::uint64_t, Words> w{};

    constexpr bool test(int i) const {
        return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    constexpr void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    constexpr int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    constexpr bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    constexpr bool none() const { return !any(); }

    /// Index of the lowest set bit, or -1 when empty.
    constexpr int lowest() const {
        for (std::size_t i = 0; i < Words; ++i)
            if (w[i]) return static_cast<int>(i * 64) + std::countr_zero(w[i]);
        return -1;
    }

    constexpr BitRow operator&(const BitRow& o) const {
        BitRow r;
        for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    constexpr BitRow operator|(const BitRow& o) const {
        BitRow r;
        for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    constexpr BitRow operator~() const {
        BitRow r;
        for (std::size_t i = 0; i < Words; ++i) r.w[i] = ~w[i];
        return r;
    }
    constexpr BitRow& operator&=(const BitRow& o) {
        for (std::size_t i = 0; i < Words; ++i) w[i] &= o.w[i];
        return *this;
    }
    constexpr BitRow& operator|=(const BitRow& o) {
        for (std::size_t i = 0; i < Words; ++i) w[i] |= o.w[i];
        return *this;
    }
    constexpr BitRow andnot(const BitRow& o) const {
        BitRow r;
        for (std::size_t i = 0; i < Words; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    constexpr bool operator==(const BitRow&) const = default;

    /// Bits [0, n), everything above clear.
    static constexpr BitRow below(int n) {
        BitRow r;
        for (std::size_t i = 0; i < Words; ++i) {
            int lo = static_cast<int>(i * 64);
            if (n <= lo)
                r.w[i] = 0;
            else if (n - lo >= 64)
                r.w[i] = ~std::uint64_t{0};
            else
                r.w[i] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return r;
    }
    static constexpr BitRow single(int i) {
        BitRow r;
        r.set(i);
        return r;
    }

    /// Visit set bits in ascending order.
    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < Words; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(static_cast<int>(i * 64) + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

} // namespace slq
