#pragma once

#include "sncsym/enumerate.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace sncsym {

inline bool same_bidegree(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
    return k.degree() == l.degree() && k.fermionic_degree() == l.fermionic_degree();
}

inline void require_same_bidegree(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
    if (!same_bidegree(k, l))
        throw std::invalid_argument("bidegree mismatch: " + to_string(k) + " vs " + to_string(l));
}

/// Index of the block of L containing the nonempty set b, or -1.
inline int containing_block(const PartialSetSupercomposition& l, Block b) {
    for (int j = 0; j < l.length(); ++j)
        if (b.is_subset_of(l[static_cast<std::size_t>(j)])) return j;
    return -1;
}

/// K ⊑ L: K_i ⊆ L_i for each fermionic slot and every other block of K lies in a block of L.
inline bool is_strongly_coarser(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
    if (!same_bidegree(k, l)) return false;
    for (int i = 0; i < k.fermionic_degree(); ++i)
        if (!k[static_cast<std::size_t>(i)].is_subset_of(l[static_cast<std::size_t>(i)])) return false;
    for (Block b : k.bosonic_blocks())
        if (containing_block(l, b) < 0) return false;
    return true;
}

/// I ⪯ J: every block of J is an ⊕-combination of blocks of I, each block of I used once.
inline bool is_coarser(const PartialSetSupercomposition& i, const PartialSetSupercomposition& j) {
    if (i.degree() != j.degree() || i.fermionic_degree() != j.fermionic_degree()) return false;
    std::vector<int> fermionic_hits(static_cast<std::size_t>(j.length()), 0);
    for (Block b : i.blocks()) {
        if (b.is_zero_block()) continue;
        int t = containing_block(j, b.positive());
        if (t < 0) return false;
        if (b.fermionic()) {
            if (!j[static_cast<std::size_t>(t)].fermionic()) return false;
            if (++fermionic_hits[static_cast<std::size_t>(t)] > 1) return false;
        }
    }
    int deficit = 0;
    for (int t = 0; t < j.fermionic_degree(); ++t)
        if (fermionic_hits[static_cast<std::size_t>(t)] == 0) ++deficit;
    return deficit == i.zero_block_count();
}

/// σ = σ(I,J) with I_i ⊆ J_{σ(i)}; 0-based. Requires I ⪯ J.
inline std::vector<int> sigma_perm(const PartialSetSupercomposition& i, const PartialSetSupercomposition& j) {
    if (!is_coarser(i, j)) throw std::invalid_argument("sigma_perm requires I ⪯ J");
    const int m = i.fermionic_degree();
    std::vector<int> sigma(static_cast<std::size_t>(m), -1);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int a = 0; a < m; ++a) {
        Block b = i[static_cast<std::size_t>(a)];
        if (b.is_zero_block()) continue;
        int t = containing_block(j, b.positive());
        sigma[static_cast<std::size_t>(a)] = t;
        used[static_cast<std::size_t>(t)] = true;
    }
    int next_free = 0;
    for (int a = 0; a < m; ++a) {
        if (sigma[static_cast<std::size_t>(a)] >= 0) continue;
        while (used[static_cast<std::size_t>(next_free)]) ++next_free;
        sigma[static_cast<std::size_t>(a)] = next_free;
        used[static_cast<std::size_t>(next_free)] = true;
    }
    return sigma;
}

inline long inv(const PartialSetSupercomposition& i, const PartialSetSupercomposition& j) {
    return inversions(sigma_perm(i, j));
}

/// K ⊓ L: N_i = K_i ∩ L_i on fermionic slots, the meet of the remaining parts elsewhere.
inline PartialSetSupercomposition meet(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
    require_same_bidegree(k, l);
    const int m = k.fermionic_degree();
    std::vector<Block> blocks;
    Block used;
    for (int i = 0; i < m; ++i) {
        Block n = k[static_cast<std::size_t>(i)] & l[static_cast<std::size_t>(i)];
        blocks.push_back(n);
        used = used | n.positive();
    }
    SetPartition kp, lp;
    for (Block b : k.blocks())
        if (Block r = b.positive() - used; !r.empty()) kp.push_back(r);
    for (Block b : l.blocks())
        if (Block r = b.positive() - used; !r.empty()) lp.push_back(r);
    for (Block b : partition_meet(kp, lp)) blocks.push_back(b);
    return PartialSetSupercomposition(std::move(blocks));
}

/// I ∧_σ J = I ⊓ (σ▷J).
inline PartialSetSupercomposition sigma_meet(const PartialSetSupercomposition& i, std::span<const int> sigma,
                                             const PartialSetSupercomposition& j) {
    return meet(i, act_on_fermionic(sigma, j));
}

/// std(K): nonzero elements shifted by m, the 0 of the i-th fermionic block renamed i.
inline SetPartition standardize(const PartialSetSupercomposition& k) {
    const int m = k.fermionic_degree();
    SetPartition out;
    for (int i = 0; i < k.length(); ++i) {
        Block b = k[static_cast<std::size_t>(i)];
        Block s;
        if (b.fermionic()) s.insert(i + 1);
        for (int e : b.positive().elements()) s.insert(e + m);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](Block p, Block q) { return p.min() < q.min(); });
    return out;
}

// ---------------------------------------------------------------------------
// Möbius function of (sC_{n,m}, ⊑).

/// μ(0̂_{n,m}, K) = ∏ (-1)^{|K_i|-1} (|K_i|-1)!
inline Integer mobius_zero(const PartialSetSupercomposition& k) {
    Integer r = 1;
    for (Block b : k.blocks()) {
        int s = b.size();
        r *= factorial(static_cast<unsigned>(s - 1));
        if ((s - 1) % 2) r = -r;
    }
    return r;
}

/// (-1)^K
inline int sign(const PartialSetSupercomposition& k) { return composition_sign(k.blocks()); }

/// μ(K,L) from the product over blocks of L; 0 unless K ⊑ L.
inline Integer mobius(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
    if (!is_strongly_coarser(k, l)) return 0;
    std::vector<int> count(static_cast<std::size_t>(l.length()), 0);
    for (int i = 0; i < k.fermionic_degree(); ++i) ++count[static_cast<std::size_t>(i)];
    for (Block b : k.bosonic_blocks()) ++count[static_cast<std::size_t>(containing_block(l, b))];
    Integer r = 1;
    for (int c : count) {
        r *= factorial(static_cast<unsigned>(c - 1));
        if ((c - 1) % 2) r = -r;
    }
    return r;
}

/// All chains K = F_1 ⊏ ... ⊏ F_q = L.
inline std::vector<std::vector<PartialSetSupercomposition>> chains(const PartialSetSupercomposition& k,
                                                                   const PartialSetSupercomposition& l) {
    std::vector<std::vector<PartialSetSupercomposition>> out;
    if (!is_strongly_coarser(k, l)) return out;
    std::vector<PartialSetSupercomposition> path{k};
    std::function<void()> extend = [&]() {
        const PartialSetSupercomposition last = path.back();
        if (last == l) {
            out.push_back(path);
            return;
        }
        for (const auto& next : strong_upset(last)) {
            if (next == last || !is_strongly_coarser(next, l)) continue;
            path.push_back(next);
            extend();
            path.pop_back();
        }
    };
    extend();
    return out;
}

}  // namespace sncsym
