#pragma once

// Brute-force expansion of basis functions from their defining index
// conditions, and recovery of monomial coefficients from concrete
// polynomials.

#include "sncsym/element.hpp"
#include "sncsym/oracle.hpp"
#include "sncsym/order.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace sncsym {

namespace detail {

/// Visits every word in [1..N]^len.
inline void for_each_word(int len, int n_vars, const std::function<void(const std::vector<std::uint8_t>&)>& visit) {
    std::vector<std::uint8_t> w(static_cast<std::size_t>(len), 1);
    if (n_vars < 1 && len > 0) return;
    while (true) {
        visit(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == n_vars) w[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) return;
        ++w[static_cast<std::size_t>(i)];
    }
}

/// Block index of each element 1..n.
inline std::vector<int> block_lookup(const PartialSetSupercomposition& k) {
    std::vector<int> of(static_cast<std::size_t>(k.degree()) + 1, -1);
    for (int i = 0; i < k.length(); ++i)
        for (int e : k[static_cast<std::size_t>(i)].positive().elements()) of[static_cast<std::size_t>(e)] = i;
    return of;
}

/// Expands a block->value assignment into (θ word, x word).
inline void assignment_word(const PartialSetSupercomposition& k, const std::vector<int>& of,
                            const std::vector<std::uint8_t>& value, std::vector<std::uint8_t>& theta,
                            std::vector<std::uint8_t>& x) {
    theta.assign(value.begin(), value.begin() + k.fermionic_degree());
    x.clear();
    for (int j = 1; j <= k.degree(); ++j) x.push_back(value[static_cast<std::size_t>(of[static_cast<std::size_t>(j)])]);
}

}  // namespace detail

/// m_K: every block receives its own variable index.
inline OraclePolynomial expand_monomial(const PartialSetSupercomposition& k, int num_vars) {
    OraclePolynomial f(num_vars);
    const auto of = detail::block_lookup(k);
    const int q = k.length();
    std::vector<std::uint8_t> value(static_cast<std::size_t>(q)), theta, x;
    std::vector<bool> taken(static_cast<std::size_t>(num_vars) + 1, false);
    std::function<void(int)> rec = [&](int b) {
        if (b == q) {
            detail::assignment_word(k, of, value, theta, x);
            f.add(theta, x, 1);
            return;
        }
        for (int v = 1; v <= num_vars; ++v) {
            if (taken[static_cast<std::size_t>(v)]) continue;
            taken[static_cast<std::size_t>(v)] = true;
            value[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(v);
            rec(b + 1);
            taken[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(0);
    return f;
}

/// p_K: each block takes one variable index, not necessarily distinct.
inline OraclePolynomial expand_power_sum(const PartialSetSupercomposition& k, int num_vars) {
    OraclePolynomial f(num_vars);
    const auto of = detail::block_lookup(k);
    std::vector<std::uint8_t> theta, x;
    detail::for_each_word(k.length(), num_vars, [&](const std::vector<std::uint8_t>& value) {
        detail::assignment_word(k, of, value, theta, x);
        f.add(theta, x, 1);
    });
    return f;
}

/// e_K: a_i differs from b_j for j ∈ K_i⁺ and positions in a common block carry distinct indices.
inline OraclePolynomial expand_elementary(const PartialSetSupercomposition& k, int num_vars) {
    OraclePolynomial f(num_vars);
    const int n = k.degree(), m = k.fermionic_degree();
    const auto of = detail::block_lookup(k);
    std::vector<std::uint8_t> theta(static_cast<std::size_t>(m)), x(static_cast<std::size_t>(n));
    std::function<void(int)> rec_theta = [&](int i) {
        if (i == m) {
            f.add(theta, x, 1);
            return;
        }
        for (int v = 1; v <= num_vars; ++v) {
            bool ok = true;
            for (int j : k[static_cast<std::size_t>(i)].positive().elements())
                if (x[static_cast<std::size_t>(j - 1)] == v) ok = false;
            if (!ok) continue;
            theta[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
            rec_theta(i + 1);
        }
    };
    std::function<void(int)> rec_x = [&](int j) {
        if (j > n) {
            rec_theta(0);
            return;
        }
        for (int v = 1; v <= num_vars; ++v) {
            bool ok = true;
            for (int t = 1; t < j; ++t)
                if (of[static_cast<std::size_t>(t)] == of[static_cast<std::size_t>(j)] &&
                    x[static_cast<std::size_t>(t - 1)] == v)
                    ok = false;
            if (!ok) continue;
            x[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>(v);
            rec_x(j + 1);
        }
    };
    rec_x(1);
    return f;
}

/// The unique L with u ∈ M(L), for a non-null-symmetric monomial with distinct θ indices.
/// `theta` is taken in the given (unsorted) order.
inline PartialSetSupercomposition monomial_type(const std::vector<std::uint8_t>& theta,
                                                const std::vector<std::uint8_t>& x) {
    std::vector<Block> blocks;
    std::vector<std::uint8_t> values;
    for (std::size_t j = 0; j < x.size(); ++j) {
        auto it = std::find(values.begin(), values.end(), x[j]);
        if (it == values.end()) {
            values.push_back(x[j]);
            blocks.emplace_back();
            it = values.end() - 1;
        }
        blocks[static_cast<std::size_t>(it - values.begin())].insert(static_cast<int>(j) + 1);
    }
    std::vector<Block> ferm;
    std::vector<bool> used(blocks.size(), false);
    for (auto a : theta) {
        auto it = std::find(values.begin(), values.end(), a);
        if (it == values.end()) {
            ferm.push_back(Block{0});
        } else {
            auto idx = static_cast<std::size_t>(it - values.begin());
            ferm.push_back(blocks[idx] | Block{0});
            used[idx] = true;
        }
    }
    std::vector<Block> rest;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!used[i]) rest.push_back(blocks[i]);
    ferm.insert(ferm.end(), rest.begin(), rest.end());
    return PartialSetSupercomposition(std::move(ferm));
}

/// h_K: every non-null-symmetric monomial u weighted by (K ⊓ L)!, u ∈ M(L).
inline OraclePolynomial expand_homogeneous(const PartialSetSupercomposition& k, int num_vars) {
    OraclePolynomial f(num_vars);
    const int n = k.degree(), m = k.fermionic_degree();
    detail::for_each_word(n, num_vars, [&](const std::vector<std::uint8_t>& x) {
        detail::for_each_word(m, num_vars, [&](const std::vector<std::uint8_t>& theta) {
            std::vector<std::uint8_t> sorted = theta;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
            SuperMonomial probe{sorted, x};
            if (probe.null_symmetric()) return;
            auto l = monomial_type(theta, x);
            Integer weight = block_factorial(meet(k, l).blocks());
            f.add(theta, x, Rational(weight));
        });
    });
    return f;
}

inline OraclePolynomial expand_basis(Basis tag, const PartialSetSupercomposition& k, int num_vars) {
    switch (tag) {
        case Basis::M: return expand_monomial(k, num_vars);
        case Basis::P: return expand_power_sum(k, num_vars);
        case Basis::E: return expand_elementary(k, num_vars);
        case Basis::H: return expand_homogeneous(k, num_vars);
    }
    throw std::logic_error("unknown basis");
}

inline OraclePolynomial expand(const SymbolicElement& el, int num_vars) {
    OraclePolynomial f(num_vars);
    for (const auto& [i, c] : el.terms()) f += expand_basis(el.basis(), i, num_vars) * c;
    return f;
}

/// Representative monomial of M(I): block i gets variable i+1.
inline SuperMonomial representative_monomial(const PartialSetSupercomposition& i) {
    SuperMonomial u;
    for (int a = 0; a < i.fermionic_degree(); ++a) u.theta.push_back(static_cast<std::uint8_t>(a + 1));
    const auto of = detail::block_lookup(i);
    for (int j = 1; j <= i.degree(); ++j) u.x.push_back(static_cast<std::uint8_t>(of[static_cast<std::size_t>(j)] + 1));
    return u;
}

/// Writes a symmetric polynomial in the monomial basis by reading the
/// coefficient of each representative monomial, then checks that nothing
/// is left over. Throws if f is not in the span of the m_I (e.g. the
/// variable budget is too small or f is not symmetric).
inline SymbolicElement decompose_monomial(const OraclePolynomial& f) {
    SymbolicElement el(Basis::M);
    std::set<std::pair<int, int>> bidegrees;
    for (const auto& [u, c] : f.terms()) bidegrees.emplace(static_cast<int>(u.x.size()), static_cast<int>(u.theta.size()));
    for (auto [n, m] : bidegrees)
        for (const auto& i : enumerate_set_superpartitions(n, m)) {
            if (i.length() > f.num_vars()) continue;
            Rational c = f.coefficient(representative_monomial(i));
            if (c != 0) el.add(i, c);
        }
    OraclePolynomial residual = f - expand(el, f.num_vars());
    if (!residual.is_zero())
        throw std::runtime_error("polynomial is not a combination of monomial functions; first residual term: " +
                                 to_string(residual.terms().begin()->first));
    return el;
}

}  // namespace sncsym
