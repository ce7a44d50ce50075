#pragma once

// Partial set supercompositions and set superpartitions: the index objects
// of every basis of sNCSym.

#include "sncsym/block.hpp"
#include "sncsym/parse_util.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sncsym {

/// Ordered tuple of blocks (K_1,...,K_q) covering [n] on nonzero elements.
/// The first m blocks are exactly the fermionic ones; the remaining blocks
/// are sorted by their minimum. Several {0} blocks are allowed.
class PartialSetSupercomposition {
public:
    PartialSetSupercomposition() = default;

    explicit PartialSetSupercomposition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        validate_composition();
    }

    PartialSetSupercomposition(std::initializer_list<Block> blocks)
        : PartialSetSupercomposition(std::vector<Block>(blocks)) {}

    /// Puts fermionic blocks first (keeping their relative order) and sorts
    /// the remaining blocks by minimum, then validates.
    static PartialSetSupercomposition arrange(std::vector<Block> blocks) {
        std::stable_partition(blocks.begin(), blocks.end(), [](Block b) { return b.fermionic(); });
        auto first_boson = std::find_if(blocks.begin(), blocks.end(), [](Block b) { return !b.fermionic(); });
        std::sort(first_boson, blocks.end(), [](Block a, Block b) { return a.min() < b.min(); });
        return PartialSetSupercomposition(std::move(blocks));
    }

    /// 0̂_{n,m} = ({0},...,{0},{1},...,{n}).
    static PartialSetSupercomposition zero(int n, int m) {
        std::vector<Block> blocks(static_cast<std::size_t>(m), Block{0});
        for (int i = 1; i <= n; ++i) blocks.push_back(Block{i});
        return PartialSetSupercomposition(std::move(blocks));
    }

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& operator[](std::size_t i) const { return blocks_[i]; }
    int degree() const noexcept { return degree_; }
    int fermionic_degree() const noexcept { return fermionic_; }
    int length() const noexcept { return static_cast<int>(blocks_.size()); }

    std::span<const Block> fermionic_blocks() const {
        return std::span<const Block>(blocks_).first(static_cast<std::size_t>(fermionic_));
    }
    std::span<const Block> bosonic_blocks() const {
        return std::span<const Block>(blocks_).subspan(static_cast<std::size_t>(fermionic_));
    }

    /// Number of {0} blocks.
    int zero_block_count() const {
        return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(), [](Block b) { return b.is_zero_block(); }));
    }

    /// At most one {0} block.
    bool is_nontrivial() const { return zero_block_count() <= 1; }

    /// Union of the nonzero elements of all blocks, i.e. [n].
    Block support() const { return Block::interval(1, degree_); }

    /// Index of the block containing the nonzero element e, or -1.
    int block_of(int e) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i].contains(e)) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const PartialSetSupercomposition&, const PartialSetSupercomposition&) = default;

    friend std::strong_ordering operator<=>(const PartialSetSupercomposition& a,
                                            const PartialSetSupercomposition& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        if (auto c = a.fermionic_ <=> b.fermionic_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.blocks_.begin(), a.blocks_.end(), b.blocks_.begin(),
                                                      b.blocks_.end());
    }

protected:
    void validate_composition() {
        std::uint64_t seen = 0;
        int m = 0;
        bool bosons_started = false;
        int last_min = 0;
        for (Block b : blocks_) {
            if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
            std::uint64_t plus = b.positive().mask();
            if (seen & plus) throw std::invalid_argument("blocks must be disjoint away from 0");
            seen |= plus;
            if (b.fermionic()) {
                if (bosons_started) throw std::invalid_argument("fermionic blocks must come first");
                ++m;
            } else {
                if (bosons_started && b.min() <= last_min)
                    throw std::invalid_argument("nonfermionic blocks must be sorted by minimum");
                bosons_started = true;
                last_min = b.min();
            }
        }
        int n = std::popcount(seen);
        if (seen != Block::interval(1, n).mask())
            throw std::invalid_argument("nonzero elements must form {1,...,n}");
        degree_ = n;
        fermionic_ = m;
    }

    std::vector<Block> blocks_;
    int degree_ = 0;
    int fermionic_ = 0;
};

/// A partial set supercomposition with distinct blocks ordered by the rule
/// min(I_i∖I_j) < min(I_j∖I_i). Equivalently: at most one {0} block and the
/// fermionic blocks sorted lexicographically by their element lists.
class SetSuperpartition : public PartialSetSupercomposition {
public:
    SetSuperpartition() = default;

    explicit SetSuperpartition(std::vector<Block> blocks) : PartialSetSupercomposition(std::move(blocks)) {
        validate_superpartition();
    }

    SetSuperpartition(std::initializer_list<Block> blocks) : SetSuperpartition(std::vector<Block>(blocks)) {}

    explicit SetSuperpartition(const PartialSetSupercomposition& k) : PartialSetSupercomposition(k) {
        validate_superpartition();
    }

    static bool satisfies_order(const PartialSetSupercomposition& k) {
        const auto& b = k.blocks();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (b[i] == b[j] || !precedes_in_superpartition(b[i], b[j])) return false;
        return true;
    }

private:
    void validate_superpartition() const {
        if (!satisfies_order(*this))
            throw std::invalid_argument("blocks violate the set superpartition order: " + blocks_to_text());
    }

    std::string blocks_to_text() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += ',';
            s += to_string(blocks_[i]);
        }
        return s + ")";
    }
};

// ---------------------------------------------------------------------------
// Text form: ({0},{0,2},{1,3})

inline std::string to_string(std::span<const Block> blocks) {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ',';
        s += to_string(blocks[i]);
    }
    s += ')';
    return s;
}

inline std::string to_string(const PartialSetSupercomposition& k) { return to_string(std::span(k.blocks())); }

namespace detail {

inline std::vector<Block> parse_block_tuple(Cursor& c) {
    static constexpr const char* grammar = "block tuple '({a,b,...},{...},...)'";
    std::vector<Block> blocks;
    c.expect('(', grammar);
    if (c.accept(')')) return blocks;
    do {
        c.expect('{', grammar);
        Block b;
        if (c.peek() != '}') {
            do {
                std::size_t at = c.offset();
                c.skip_ws();
                at = c.offset();
                int e = c.integer(grammar);
                if (e > Block::max_element) c.fail_at("block element exceeds 63", at);
                if (b.contains(e)) c.fail_at("repeated element in block", at);
                b.insert(e);
            } while (c.accept(','));
        }
        c.expect('}', grammar);
        if (b.empty()) c.fail("empty block");
        blocks.push_back(b);
    } while (c.accept(','));
    c.expect(')', grammar);
    return blocks;
}

template <typename T>
T build_or_fail(std::vector<Block> blocks, const Cursor& c, std::size_t start) {
    try {
        return T(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        c.fail_at(e.what(), start);
    }
}

}  // namespace detail

inline std::vector<Block> parse_block_tuple(std::string_view text) {
    detail::Cursor c(text);
    auto blocks = detail::parse_block_tuple(c);
    if (!c.at_end()) c.fail("trailing characters after block tuple");
    return blocks;
}

inline PartialSetSupercomposition parse_composition(std::string_view text) {
    detail::Cursor c(text);
    auto blocks = detail::parse_block_tuple(c);
    if (!c.at_end()) c.fail("trailing characters after block tuple");
    return detail::build_or_fail<PartialSetSupercomposition>(std::move(blocks), c, 0);
}

inline SetSuperpartition parse_set_superpartition(std::string_view text) {
    detail::Cursor c(text);
    auto blocks = detail::parse_block_tuple(c);
    if (!c.at_end()) c.fail("trailing characters after block tuple");
    return detail::build_or_fail<SetSuperpartition>(std::move(blocks), c, 0);
}

// ---------------------------------------------------------------------------
// JSON form: list of lists of integers.

inline nlohmann::json blocks_to_json(std::span<const Block> blocks) {
    nlohmann::json j = nlohmann::json::array();
    for (Block b : blocks) j.push_back(b.elements());
    return j;
}

inline nlohmann::json to_json_value(const PartialSetSupercomposition& k) { return blocks_to_json(k.blocks()); }

inline std::vector<Block> blocks_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON list of blocks", 0);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& jb = j[i];
        if (!jb.is_array()) throw ParseError("expected a JSON list of integers for block", i);
        Block b;
        for (const auto& e : jb) {
            if (!e.is_number_integer()) throw ParseError("block element must be an integer", i);
            int v = e.get<int>();
            if (v < 0 || v > Block::max_element || b.contains(v)) throw ParseError("invalid block element", i);
            b.insert(v);
        }
        blocks.push_back(b);
    }
    return blocks;
}

// ---------------------------------------------------------------------------
// Elementary operations on block tuples.

/// K[r]: adds r to every nonzero element.
inline std::vector<Block> shift(std::span<const Block> blocks, int r) {
    std::vector<Block> out;
    out.reserve(blocks.size());
    for (Block b : blocks) {
        Block s = b.fermionic() ? Block{0} : Block{};
        for (int e : b.positive().elements()) s.insert(e + r);
        out.push_back(s);
    }
    return out;
}

/// K∖A: removes A from every block and drops the blocks that become empty.
inline std::vector<Block> restrict_blocks(std::span<const Block> blocks, Block a) {
    std::vector<Block> out;
    for (Block b : blocks)
        if (Block r = b - a; !r.empty()) out.push_back(r);
    return out;
}

/// K! = |K_1|!···|K_q|! (sizes count the element 0).
inline Integer block_factorial(std::span<const Block> blocks) {
    Integer r = 1;
    for (Block b : blocks) r *= factorial(static_cast<unsigned>(b.size()));
    return r;
}

/// (-1)^K = ∏ (-1)^{|K_i|-1}.
inline int composition_sign(std::span<const Block> blocks) {
    long e = 0;
    for (Block b : blocks) e += b.size() - 1;
    return sign_of_parity(e);
}

/// σ▷K = (K_{σ(1)},...,K_{σ(m)},K_{m+1},...); σ is 0-based, σ[i] = σ(i+1)-1.
inline PartialSetSupercomposition act_on_fermionic(std::span<const int> sigma, const PartialSetSupercomposition& k) {
    if (static_cast<int>(sigma.size()) != k.fermionic_degree())
        throw std::invalid_argument("permutation size must equal the fermionic degree");
    std::vector<Block> blocks = k.blocks();
    for (std::size_t i = 0; i < sigma.size(); ++i) blocks[i] = k[static_cast<std::size_t>(sigma[i])];
    return PartialSetSupercomposition(std::move(blocks));
}

/// δ∘K = (δ(K_1),...,δ(K_q)) re-sorted on the nonfermionic part; δ is 0-based on [n].
inline PartialSetSupercomposition act_on_elements(std::span<const int> delta, const PartialSetSupercomposition& k) {
    if (static_cast<int>(delta.size()) != k.degree())
        throw std::invalid_argument("permutation size must equal the degree");
    std::vector<Block> blocks;
    for (Block b : k.blocks()) {
        Block image = b.fermionic() ? Block{0} : Block{};
        for (int e : b.positive().elements()) image.insert(delta[static_cast<std::size_t>(e - 1)] + 1);
        blocks.push_back(image);
    }
    return PartialSetSupercomposition::arrange(std::move(blocks));
}

/// Over product K/L = K ∪ L[deg K] with the fermionic blocks of K first.
inline PartialSetSupercomposition over_product(const PartialSetSupercomposition& k,
                                               const PartialSetSupercomposition& l) {
    auto ls = shift(l.blocks(), k.degree());
    std::vector<Block> blocks;
    auto kf = k.fermionic_blocks();
    blocks.insert(blocks.end(), kf.begin(), kf.end());
    blocks.insert(blocks.end(), ls.begin(), ls.begin() + l.fermionic_degree());
    auto kb = k.bosonic_blocks();
    blocks.insert(blocks.end(), kb.begin(), kb.end());
    blocks.insert(blocks.end(), ls.begin() + l.fermionic_degree(), ls.end());
    return PartialSetSupercomposition(std::move(blocks));
}

/// Result of the bar operator: repeated blocks removed and fermionic blocks sorted.
struct BarResult {
    SetSuperpartition value;
    bool odd = false;      ///< parity of the fermionic sorting permutation
    bool trivial = false;  ///< the input had two or more {0} blocks
};

inline BarResult bar(const PartialSetSupercomposition& k) {
    std::vector<Block> ferm(k.fermionic_blocks().begin(), k.fermionic_blocks().end());
    long inv = inversions(ferm);
    std::vector<Block> sorted = ferm;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    bool trivial = k.zero_block_count() > 1;
    auto bos = k.bosonic_blocks();
    sorted.insert(sorted.end(), bos.begin(), bos.end());
    return BarResult{SetSuperpartition(std::move(sorted)), inv % 2 != 0, trivial};
}

/// Canonical index with the sign (-1)^{inv σ} of K = σ▷I; empty for trivial K
/// (every basis function indexed by a trivial composition vanishes).
inline std::optional<std::pair<SetSuperpartition, int>> canonical_index(const PartialSetSupercomposition& k) {
    if (!k.is_nontrivial()) return std::nullopt;
    BarResult r = bar(k);
    return std::make_pair(std::move(r.value), r.odd ? -1 : 1);
}

}  // namespace sncsym
