#pragma once

// Schur functions S_Λ and S̄_Λ of sNCSym, built from tableau coefficients.

#include "sncsym/algebra.hpp"
#include "sncsym/bridge.hpp"
#include "sncsym/oracle.hpp"
#include "sncsym/tableau.hpp"

#include <functional>
#include <map>

namespace sncsym {

/// S_Λ (first kind) or S̄_Λ (second kind) in the monomial basis:
/// Σ_Ω K_{Λ,Ω} Ω! Σ_{Λ(I)=Ω} (-1)^{ε(I)} m_I.
inline SymbolicElement schur(const Superpartition& shape, TableauKind kind) {
    SymbolicElement out(Basis::M);
    for (const auto& type : enumerate_superpartitions(shape.degree(), shape.fermionic_degree())) {
        Integer k = kostka(shape, type, kind);
        if (k == 0) continue;
        out += signed_type_sum(Basis::M, type) * Rational(k * factorial(type));
    }
    return out;
}

/// The defining tableau sum Σ_T [θx]^T over all weights with num_vars
/// letters, expanded in the oracle. Independent of the Kostka route.
inline OraclePolynomial schur_direct(const Superpartition& shape, TableauKind kind, int num_vars) {
    const int n = shape.degree(), m = shape.fermionic_degree();
    OraclePolynomial f(num_vars);
    std::vector<WeightEntry> weight(static_cast<std::size_t>(num_vars));

    auto add_tableaux = [&] {
        std::vector<std::uint8_t> x;
        Integer mult = 1;
        for (int j = 0; j < num_vars; ++j) {
            const int v = weight[static_cast<std::size_t>(j)].value;
            x.insert(x.end(), static_cast<std::size_t>(v), static_cast<std::uint8_t>(j + 1));
            mult *= factorial(static_cast<unsigned>(v));
        }
        for (const auto& t : enumerate_tableaux(shape, weight, kind)) {
            std::vector<std::uint8_t> theta;
            for (int c : t.theta_word()) theta.push_back(static_cast<std::uint8_t>(c));
            // Σ_σ over all n! reorderings: each distinct word appears ∏ α_i! times
            std::vector<std::uint8_t> word = x;
            do {
                f.add(theta, word, Rational(mult));
            } while (std::next_permutation(word.begin(), word.end()));
        }
    };

    std::function<void(int, int, int)> rec = [&](int j, int left, int bars) {
        if (j == num_vars) {
            if (left == 0 && bars == 0) add_tableaux();
            return;
        }
        auto& w = weight[static_cast<std::size_t>(j)];
        for (int v = 0; v <= left; ++v) {
            w = {v, false};
            rec(j + 1, left - v, bars);
            if (bars > 0) {
                w = {v, true};
                rec(j + 1, left - v, bars - 1);
            }
        }
    };
    rec(0, n, m);
    return f;
}

/// A monomial-basis element rewritten over partial set supercompositions whose
/// fermionic blocks are sorted by decreasing size; this absorbs the sign
/// (-1)^{ε(I)} of each term. Terms with equal-size fermionic blocks keep
/// their canonical index.
inline std::map<PartialSetSupercomposition, Rational> positive_form(const SymbolicElement& el) {
    if (el.basis() != Basis::M) throw std::invalid_argument("positive form needs a monomial-basis element");
    std::map<PartialSetSupercomposition, Rational> out;
    for (const auto& [i, c] : el.terms()) {
        if (!lambda_of(i)) {
            out[i] += c;
            continue;
        }
        std::vector<Block> blocks(i.blocks().begin(), i.blocks().end());
        const auto ferm_end = blocks.begin() + i.fermionic_degree();
        std::stable_sort(blocks.begin(), ferm_end, [](Block a, Block b) { return a.size() > b.size(); });
        out[PartialSetSupercomposition(std::move(blocks))] += c * epsilon_sign(i);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline std::string positive_form_to_string(const SymbolicElement& el) {
    return format_linear_combination(positive_form(el),
                                     [](const PartialSetSupercomposition& k) { return "m[" + to_string(k) + "]"; });
}

/// ⟨ω(S̄_{Λ'}), S_Ω⟩, which should equal n!² (-1)^{C(m,2)} δ_{Λ,Ω}.
inline Rational check_duality(const Superpartition& lambda, const Superpartition& other) {
    return inner_product(omega(schur(conjugate(lambda), TableauKind::Second)), schur(other, TableauKind::First));
}

/// The value check_duality must return.
inline Rational expected_duality(const Superpartition& lambda, const Superpartition& other) {
    if (!(lambda == other)) return 0;
    Rational f(factorial(static_cast<unsigned>(lambda.degree())));
    return f * f * binom2_sign(lambda.fermionic_degree());
}

}  // namespace sncsym
