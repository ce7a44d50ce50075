#pragma once

#include "sncsym/composition.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace sncsym {

using SetPartition = std::vector<Block>;

/// Calls `visit` with every restricted growth string of length n, in
/// lexicographic order. Entry i is the block index of element i+1.
inline void for_each_rgs(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    if (n == 0) {
        visit(a);
        return;
    }
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(a);
        int i = n - 1;
        while (i > 0 && a[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) return;
        ++a[static_cast<std::size_t>(i)];
        prefix_max[static_cast<std::size_t>(i)] =
            std::max(prefix_max[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            a[static_cast<std::size_t>(j)] = 0;
            prefix_max[static_cast<std::size_t>(j)] = prefix_max[static_cast<std::size_t>(i)];
        }
    }
}

inline SetPartition partition_from_rgs(const std::vector<int>& rgs) {
    SetPartition blocks;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        auto b = static_cast<std::size_t>(rgs[i]);
        if (b == blocks.size()) blocks.emplace_back();
        blocks[b].insert(static_cast<int>(i) + 1);
    }
    return blocks;
}

/// All set partitions of [n] in restricted-growth-string order; blocks sorted by minimum.
inline std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_rgs(n, [&](const std::vector<int>& rgs) { out.push_back(partition_from_rgs(rgs)); });
    return out;
}

/// Meet of two set partitions of the same ground set (nonempty pairwise intersections).
inline SetPartition partition_meet(const SetPartition& a, const SetPartition& b) {
    SetPartition out;
    for (Block x : a)
        for (Block y : b)
            if (Block z = x & y; !z.empty()) out.push_back(z);
    std::sort(out.begin(), out.end(), [](Block p, Block q) { return p.min() < q.min(); });
    return out;
}

/// Visits every way to add 0 to some blocks of `partition` and optionally
/// prepend {0}, with exactly m fermionic blocks. Order: the {0}-prepend flag
/// first (absent before present), then zero-insertion masks in lexicographic
/// order with the first block most significant.
inline void for_each_zero_insertion(const SetPartition& partition, int m,
                                    const std::function<void(SetSuperpartition)>& visit) {
    const int k = static_cast<int>(partition.size());
    for (int z = 0; z <= 1; ++z) {
        int need = m - z;
        if (need < 0 || need > k) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            if (std::popcount(mask) != need) continue;
            std::vector<Block> ferm, bos;
            if (z) ferm.push_back(Block{0});
            for (int i = 0; i < k; ++i) {
                bool zero = (mask >> (k - 1 - i)) & 1u;
                if (zero)
                    ferm.push_back(partition[static_cast<std::size_t>(i)] | Block{0});
                else
                    bos.push_back(partition[static_cast<std::size_t>(i)]);
            }
            std::sort(ferm.begin(), ferm.end());
            ferm.insert(ferm.end(), bos.begin(), bos.end());
            visit(SetSuperpartition(std::move(ferm)));
        }
    }
}

/// sP_{n,m} in deterministic order: restricted-growth-string order of the
/// underlying set partition, then zero insertions.
inline std::vector<SetSuperpartition> enumerate_set_superpartitions(int n, int m) {
    std::vector<SetSuperpartition> out;
    if (n < 0 || m < 0 || m > n + 1) return out;
    for (const auto& p : enumerate_set_partitions(n))
        for_each_zero_insertion(p, m, [&](SetSuperpartition s) { out.push_back(std::move(s)); });
    return out;
}

/// All set superpartitions of degree n, any fermionic degree, ordered by m.
inline std::vector<SetSuperpartition> enumerate_set_superpartitions(int n) {
    std::vector<SetSuperpartition> out;
    for (int m = 0; m <= n + 1; ++m) {
        auto part = enumerate_set_superpartitions(n, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// sC_{n,m}: every partial set supercomposition of bidegree (n,m), trivial
/// ones included, with every distinct ordering of the fermionic blocks.
inline std::vector<PartialSetSupercomposition> enumerate_psc(int n, int m) {
    std::vector<PartialSetSupercomposition> out;
    if (n < 0 || m < 0) return out;
    for (const auto& p : enumerate_set_partitions(n)) {
        const int k = static_cast<int>(p.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            int s = std::popcount(mask);
            if (s > m) continue;
            std::vector<Block> ferm(static_cast<std::size_t>(m - s), Block{0}), bos;
            for (int i = 0; i < k; ++i) {
                if ((mask >> (k - 1 - i)) & 1u)
                    ferm.push_back(p[static_cast<std::size_t>(i)] | Block{0});
                else
                    bos.push_back(p[static_cast<std::size_t>(i)]);
            }
            std::sort(ferm.begin(), ferm.end());
            do {
                std::vector<Block> blocks = ferm;
                blocks.insert(blocks.end(), bos.begin(), bos.end());
                out.emplace_back(std::move(blocks));
            } while (std::next_permutation(ferm.begin(), ferm.end()));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Upsets and downsets of the strong coarsening order.

/// Every L with K ⊑ L: set partitions of the blocks of K in which no two
/// fermionic blocks share a group. A merged group keeps the fermionic slot.
inline std::vector<PartialSetSupercomposition> strong_upset(const PartialSetSupercomposition& k) {
    std::vector<PartialSetSupercomposition> out;
    const int q = k.length();
    const int m = k.fermionic_degree();
    for_each_rgs(q, [&](const std::vector<int>& rgs) {
        // fermionic blocks must land in distinct groups; they come first, so
        // their RGS values are forced to be 0,1,...,m-1
        for (int i = 0; i < m; ++i)
            if (rgs[static_cast<std::size_t>(i)] != i) return;
        int groups = q == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<Block> merged(static_cast<std::size_t>(groups));
        for (int i = 0; i < q; ++i) merged[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] =
            merged[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] | k[static_cast<std::size_t>(i)];
        out.push_back(PartialSetSupercomposition::arrange(std::move(merged)));
    });
    return out;
}

/// Every K with K ⊑ L.
inline std::vector<PartialSetSupercomposition> strong_downset(const PartialSetSupercomposition& l) {
    std::vector<PartialSetSupercomposition> out;
    const int m = l.fermionic_degree();
    // choice of the sub-block S_i ⊆ L_i⁺ kept with 0, per fermionic block
    std::vector<std::vector<Block>> choices;
    for (int i = 0; i < m; ++i) {
        std::vector<Block> subs;
        std::uint64_t full = l[static_cast<std::size_t>(i)].positive().mask();
        for (std::uint64_t s = full;; s = (s - 1) & full) {
            subs.push_back(Block(s));
            if (s == 0) break;
        }
        std::reverse(subs.begin(), subs.end());
        choices.push_back(std::move(subs));
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    while (true) {
        std::vector<Block> ferm;
        std::vector<Block> rest_sets;  // sets to be partitioned independently
        for (int i = 0; i < m; ++i) {
            Block s = choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            ferm.push_back(s | Block{0});
            if (Block r = l[static_cast<std::size_t>(i)].positive() - s; !r.empty()) rest_sets.push_back(r);
        }
        for (Block b : l.bosonic_blocks()) rest_sets.push_back(b);
        // product of set partitions of each rest set
        std::vector<std::vector<SetPartition>> parts;
        for (Block r : rest_sets) {
            auto elems = r.elements();
            std::vector<SetPartition> ps;
            for (const auto& p : enumerate_set_partitions(static_cast<int>(elems.size()))) {
                SetPartition mapped;
                for (Block b : p) {
                    Block t;
                    for (int e : b.elements()) t.insert(elems[static_cast<std::size_t>(e - 1)]);
                    mapped.push_back(t);
                }
                ps.push_back(std::move(mapped));
            }
            parts.push_back(std::move(ps));
        }
        std::vector<std::size_t> idx(parts.size(), 0);
        while (true) {
            std::vector<Block> blocks = ferm;
            for (std::size_t j = 0; j < parts.size(); ++j) {
                const auto& p = parts[j][idx[j]];
                blocks.insert(blocks.end(), p.begin(), p.end());
            }
            out.push_back(PartialSetSupercomposition::arrange(std::move(blocks)));
            std::size_t j = 0;
            while (j < idx.size() && ++idx[j] == parts[j].size()) idx[j++] = 0;
            if (j == idx.size()) break;
        }
        int i = 0;
        while (i < m && ++pick[static_cast<std::size_t>(i)] == choices[static_cast<std::size_t>(i)].size())
            pick[static_cast<std::size_t>(i++)] = 0;
        if (i == m) break;
    }
    return out;
}

}  // namespace sncsym
