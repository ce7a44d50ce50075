#pragma once

#include "sncsym/transition.hpp"

#include <functional>
#include <vector>

namespace sncsym {

/// I ⧢ J as a list of partial set supercompositions (before canonicalization):
/// every partial matching between blocks of I and blocks of J[n] that never
/// pairs two fermionic blocks. The fermionic blocks keep the order of I/J.
inline std::vector<PartialSetSupercomposition> shuffle_set(const PartialSetSupercomposition& i,
                                                           const PartialSetSupercomposition& j) {
    std::vector<PartialSetSupercomposition> out;
    const auto js = shift(j.blocks(), i.degree());
    const int qi = i.length(), qj = static_cast<int>(js.size());
    std::vector<int> partner(static_cast<std::size_t>(qi), -1);
    std::vector<bool> taken(static_cast<std::size_t>(qj), false);

    auto emit = [&] {
        std::vector<Block> ferm_i, ferm_j, bos;
        std::vector<int> owner_of_j(static_cast<std::size_t>(qj), -1);
        for (int a = 0; a < qi; ++a)
            if (partner[static_cast<std::size_t>(a)] >= 0)
                owner_of_j[static_cast<std::size_t>(partner[static_cast<std::size_t>(a)])] = a;
        for (int a = 0; a < qi; ++a) {
            Block b = i[static_cast<std::size_t>(a)];
            int p = partner[static_cast<std::size_t>(a)];
            if (p >= 0) {
                Block merged = b | js[static_cast<std::size_t>(p)];
                if (b.fermionic())
                    ferm_i.push_back(merged);
                else if (!js[static_cast<std::size_t>(p)].fermionic())
                    bos.push_back(merged);
            } else {
                (b.fermionic() ? ferm_i : bos).push_back(b);
            }
        }
        for (int c = 0; c < qj; ++c) {
            Block b = js[static_cast<std::size_t>(c)];
            int owner = owner_of_j[static_cast<std::size_t>(c)];
            if (b.fermionic())
                ferm_j.push_back(owner >= 0 ? (b | i[static_cast<std::size_t>(owner)]) : b);
            else if (owner < 0)
                bos.push_back(b);
        }
        ferm_i.insert(ferm_i.end(), ferm_j.begin(), ferm_j.end());
        ferm_i.insert(ferm_i.end(), bos.begin(), bos.end());
        out.push_back(PartialSetSupercomposition::arrange(std::move(ferm_i)));
    };

    std::function<void(int)> rec = [&](int a) {
        if (a == qi) {
            emit();
            return;
        }
        partner[static_cast<std::size_t>(a)] = -1;
        rec(a + 1);
        for (int c = 0; c < qj; ++c) {
            if (taken[static_cast<std::size_t>(c)]) continue;
            if (i[static_cast<std::size_t>(a)].fermionic() && js[static_cast<std::size_t>(c)].fermionic()) continue;
            taken[static_cast<std::size_t>(c)] = true;
            partner[static_cast<std::size_t>(a)] = c;
            rec(a + 1);
            taken[static_cast<std::size_t>(c)] = false;
        }
        partner[static_cast<std::size_t>(a)] = -1;
    };
    rec(0);
    return out;
}

/// f·g. The second factor is first rewritten in the basis of the first;
/// m multiplies by the shuffle formula, p/e/h by the over product.
inline SymbolicElement product(const SymbolicElement& f, const SymbolicElement& g_in) {
    const SymbolicElement g = convert(g_in, f.basis());
    SymbolicElement out(f.basis());
    for (const auto& [i, c] : f.terms())
        for (const auto& [j, d] : g.terms()) {
            Rational cd = c * d;
            if (f.basis() == Basis::M) {
                for (const auto& k : shuffle_set(i, j)) out.add(k, cd);
            } else {
                auto k = over_product(i, j);
                out.add(k, cd);
            }
        }
    return out;
}

namespace detail {
inline SymbolicElement rename_basis(const SymbolicElement& el, Basis to) {
    SymbolicElement out(to);
    for (const auto& [i, c] : el.terms()) out.add(i, c);
    return out;
}
}  // namespace detail

/// ω: e_I ↔ h_I, extended linearly; the result is in the basis of the input.
inline SymbolicElement omega(const SymbolicElement& el) {
    switch (el.basis()) {
        case Basis::E: return detail::rename_basis(el, Basis::H);
        case Basis::H: return detail::rename_basis(el, Basis::E);
        default: break;
    }
    SymbolicElement swapped = detail::rename_basis(convert(el, Basis::E), Basis::H);
    return convert(swapped, el.basis());
}

/// ⟨f,g⟩ from ⟨m_I, h_J⟩ = (-1)^{C(m,2)} n! δ_{I,J}; distinct bidegrees pair to 0.
inline Rational inner_product(const SymbolicElement& f, const SymbolicElement& g) {
    const SymbolicElement fm = convert(f, Basis::M);
    const SymbolicElement gh = convert(g, Basis::H);
    Rational total = 0;
    for (const auto& [i, c] : fm.terms()) {
        Rational d = gh.coefficient(i);
        if (d == 0) continue;
        total += c * d * binom2_sign(i.fermionic_degree()) * Rational(factorial(static_cast<unsigned>(i.degree())));
    }
    return total;
}

}  // namespace sncsym
