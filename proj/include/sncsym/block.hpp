#pragma once

#include "sncsym/rational.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sncsym {

/// A finite subset of {0,...,63}; the element 0 marks a fermionic block.
class Block {
public:
    static constexpr int max_element = 63;

    constexpr Block() = default;
    constexpr explicit Block(std::uint64_t mask) : mask_(mask) {}

    Block(std::initializer_list<int> elements) {
        for (int e : elements) insert(e);
    }

    static Block from_elements(const std::vector<int>& elements) {
        Block b;
        for (int e : elements) b.insert(e);
        return b;
    }

    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static Block interval(int lo, int hi) {
        Block b;
        for (int e = lo; e <= hi; ++e) b.insert(e);
        return b;
    }

    void insert(int e) {
        if (e < 0 || e > max_element)
            throw std::out_of_range("block element out of range: " + std::to_string(e));
        mask_ |= std::uint64_t{1} << e;
    }

    constexpr std::uint64_t mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool fermionic() const noexcept { return (mask_ & 1u) != 0; }
    constexpr bool is_zero_block() const noexcept { return mask_ == 1u; }
    constexpr bool contains(int e) const noexcept { return e >= 0 && e <= max_element && ((mask_ >> e) & 1u); }
    constexpr int size() const noexcept { return std::popcount(mask_); }

    /// Smallest element; 0 for an empty block.
    constexpr int min() const noexcept { return mask_ == 0 ? 0 : std::countr_zero(mask_); }
    constexpr int max() const noexcept { return mask_ == 0 ? 0 : 63 - std::countl_zero(mask_); }

    /// The block without 0 (A⁺).
    constexpr Block positive() const noexcept { return Block(mask_ & ~std::uint64_t{1}); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    constexpr bool is_subset_of(Block other) const noexcept { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(Block other) const noexcept { return (mask_ & other.mask_) != 0; }

    constexpr Block operator|(Block o) const noexcept { return Block(mask_ | o.mask_); }
    constexpr Block operator&(Block o) const noexcept { return Block(mask_ & o.mask_); }
    constexpr Block operator-(Block o) const noexcept { return Block(mask_ & ~o.mask_); }

    friend constexpr bool operator==(Block a, Block b) noexcept { return a.mask_ == b.mask_; }

    /// Lexicographic order of the ascending element lists.
    friend constexpr std::strong_ordering operator<=>(Block a, Block b) noexcept {
        std::uint64_t d = a.mask_ ^ b.mask_;
        if (d == 0) return std::strong_ordering::equal;
        std::uint64_t low = d & (~d + 1);
        // Whoever owns the lowest differing element is smaller, unless the
        // other list has already ended (it is then a proper prefix).
        std::uint64_t above = ~((low << 1) - 1);
        if (a.mask_ & low)
            return (b.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
        return (a.mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    std::uint64_t mask_ = 0;
};

/// A ⊕ B: the union, or nothing when both blocks contain 0.
inline std::optional<Block> oplus(Block a, Block b) {
    if (a.fermionic() && b.fermionic()) return std::nullopt;
    return a | b;
}

/// The ordering rule of set superpartitions: min(A∖B) < min(B∖A), min(∅) = 0.
inline bool precedes_in_superpartition(Block a, Block b) { return (a - b).min() < (b - a).min(); }

inline std::string to_string(Block b) {
    std::string s = "{";
    bool first = true;
    for (int e : b.elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    s += '}';
    return s;
}

}  // namespace sncsym
