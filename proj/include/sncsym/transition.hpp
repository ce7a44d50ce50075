#pragma once

// Change of basis in sNCSym. Every conversion is assembled from explicit
// Möbius-type formulas over partial set supercompositions; nothing here
// solves a linear system.

#include "sncsym/element.hpp"
#include "sncsym/matrix.hpp"
#include "sncsym/order.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

namespace sncsym {

inline bool is_zero_composition(const PartialSetSupercomposition& k) {
    for (Block b : k.blocks())
        if (b.size() != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Single-index formulas.

/// p_I, e_I or h_I in the monomial basis.
inline SymbolicElement to_monomial(Basis from, const SetSuperpartition& i) {
    SymbolicElement out(Basis::M);
    const int n = i.degree(), m = i.fermionic_degree();
    if (from == Basis::M) {
        out.add(i, 1);
        return out;
    }
    auto targets = enumerate_set_superpartitions(n, m);
    if (from == Basis::P) {
        for (const auto& j : targets)
            if (is_coarser(i, j)) out.add(j, sign_of_parity(inv(i, j)));
        return out;
    }
    for (const auto& sigma : all_permutations(m)) {
        const int s = sign_of_parity(inversions(sigma));
        for (const auto& j : targets) {
            auto n_meet = sigma_meet(i, sigma, j);
            if (from == Basis::E) {
                if (is_zero_composition(n_meet)) out.add(j, s);
            } else {
                out.add(j, Rational(block_factorial(n_meet.blocks()) * s));
            }
        }
    }
    return out;
}

/// m_I in the p, e or h basis.
inline SymbolicElement from_monomial(const SetSuperpartition& i, Basis to) {
    SymbolicElement out(to);
    if (to == Basis::M) {
        out.add(i, 1);
        return out;
    }
    for (const auto& l : strong_upset(i)) {
        Integer mu = mobius(i, l);
        if (to == Basis::P) {
            out.add(l, Rational(mu));
            continue;
        }
        Integer mz = mobius_zero(l);
        if (to == Basis::H) mz = abs(mz);
        Rational outer(mu, mz);
        outer.canonicalize();
        for (const auto& k : strong_downset(l)) out.add(k, outer * Rational(mobius(k, l)));
    }
    return out;
}

/// The direct formulas between p, e and h.
inline SymbolicElement convert_direct(Basis from, const SetSuperpartition& i, Basis to) {
    SymbolicElement out(to);
    if (from == to) {
        out.add(i, 1);
        return out;
    }
    auto down = strong_downset(i);
    if (to == Basis::P) {  // e_I or h_I in p
        for (const auto& k : down) {
            Integer mz = mobius_zero(k);
            out.add(k, Rational(from == Basis::E ? mz : Integer(abs(mz))));
        }
        return out;
    }
    if (from == Basis::P) {  // p_I in e or h
        Integer mz = mobius_zero(i);
        if (to == Basis::H) mz = abs(mz);
        for (const auto& k : down) {
            Rational c(mobius(k, i), mz);
            c.canonicalize();
            out.add(k, c);
        }
        return out;
    }
    // e_I in h or h_I in e
    for (const auto& k : down) {
        int s = sign(k);
        for (const auto& l : strong_downset(k)) out.add(l, Rational(mobius(l, k) * s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cached per-bidegree transition data.

/// Column j holds the image of the j-th basis element of sP_{n,m}.
struct TransitionTable {
    std::vector<SetSuperpartition> indices;
    std::vector<SymbolicElement> columns;
    std::map<SetSuperpartition, std::size_t> position;
};

class TransitionCache {
public:
    static TransitionCache& instance() {
        static TransitionCache cache;
        return cache;
    }

    /// Table for from → to at bidegree (n,m); computed at most once.
    const TransitionTable& table(int n, int m, Basis from, Basis to) {
        std::shared_ptr<Entry> entry;
        {
            std::lock_guard lock(mutex_);
            auto& slot = entries_[std::make_tuple(n, m, from, to)];
            if (!slot) slot = std::make_shared<Entry>();
            entry = slot;
        }
        std::call_once(entry->once, [&] { entry->table = build(n, m, from, to); });
        return entry->table;
    }

private:
    struct Entry {
        std::once_flag once;
        TransitionTable table;
    };

    static TransitionTable build(int n, int m, Basis from, Basis to) {
        TransitionTable t;
        t.indices = enumerate_set_superpartitions(n, m);
        for (std::size_t j = 0; j < t.indices.size(); ++j) t.position.emplace(t.indices[j], j);
        for (const auto& i : t.indices) {
            if (from == to) {
                SymbolicElement e(to);
                e.add(i, 1);
                t.columns.push_back(std::move(e));
            } else if (from == Basis::M) {
                t.columns.push_back(from_monomial(i, to));
            } else if (to == Basis::M) {
                t.columns.push_back(to_monomial(from, i));
            } else {
                t.columns.push_back(convert_direct(from, i, to));
            }
        }
        return t;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, Basis, Basis>, std::shared_ptr<Entry>> entries_;
};

inline const SymbolicElement& transition_column(Basis from, const SetSuperpartition& i, Basis to) {
    const auto& t = TransitionCache::instance().table(i.degree(), i.fermionic_degree(), from, to);
    auto it = t.position.find(i);
    if (it != t.position.end()) return t.columns[it->second];
    throw std::logic_error("index missing from transition table: " + to_string(i));
}

/// Rewrites el in the target basis (direct formulas between p, e and h;
/// Möbius formulas to and from m).
inline SymbolicElement convert(const SymbolicElement& el, Basis to) {
    if (el.basis() == to) return el;
    SymbolicElement out(to);
    for (const auto& [i, c] : el.terms()) out += transition_column(el.basis(), i, to) * c;
    return out;
}

/// Same conversion, always passing through the monomial basis.
inline SymbolicElement convert_via_monomial(const SymbolicElement& el, Basis to) {
    return convert(convert(el, Basis::M), to);
}

/// Dense transition matrix at bidegree (n,m): entry (r,c) is the coefficient
/// of to_{I_r} in from_{I_c}, indices in enumeration order.
inline RationalMatrix transition_matrix(int n, int m, Basis from, Basis to) {
    const auto& t = TransitionCache::instance().table(n, m, from, to);
    const std::size_t size = t.indices.size();
    RationalMatrix a(size, size);
    for (std::size_t c = 0; c < size; ++c)
        for (std::size_t r = 0; r < size; ++r) a(r, c) = t.columns[c].coefficient(t.indices[r]);
    return a;
}

}  // namespace sncsym
