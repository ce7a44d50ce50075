#pragma once

// Projection ρ: sNCSym → sSym and the lifting ρ̃ in the other direction.

#include "sncsym/ssym.hpp"
#include "sncsym/transition.hpp"

namespace sncsym {

inline SSymBasis ssym_basis_of(Basis b) {
    switch (b) {
        case Basis::M: return SSymBasis::M;
        case Basis::P: return SSymBasis::P;
        case Basis::E: return SSymBasis::E;
        case Basis::H: return SSymBasis::H;
    }
    throw std::logic_error("unknown basis");
}

/// ρ(b_I) for a single index. Indices whose type is undefined project to 0.
inline SSymElement rho_basis(Basis b, const SetSuperpartition& i) {
    SSymElement out(ssym_basis_of(b));
    auto type = lambda_of(i);
    if (!type) return out;
    Rational c = epsilon_sign(i);
    switch (b) {
        case Basis::M: c *= Rational(multiplicity_factorial(type->sym())); break;
        case Basis::P: break;
        case Basis::E:
        case Basis::H: c *= Rational(factorial(*type)); break;
    }
    out.add(*type, c);
    return out;
}

/// ρ(f), in the sSym basis matching the basis of f.
inline SSymElement rho(const SymbolicElement& el) {
    SSymElement out(ssym_basis_of(el.basis()));
    for (const auto& [i, c] : el.terms()) out += rho_basis(el.basis(), i) * c;
    return out;
}

/// Σ_{Λ(I)=Λ} (-1)^{ε(I)} b_I.
inline SymbolicElement signed_type_sum(Basis b, const Superpartition& type) {
    SymbolicElement out(b);
    for (const auto& i : set_superpartitions_of_type(type)) out.add(i, epsilon_sign(i));
    return out;
}

/// H_Λ = Σ_{Λ(I)=Λ} (-1)^{ε(I)} h_I.
inline SymbolicElement big_h(const Superpartition& type) { return signed_type_sum(Basis::H, type); }

/// P_Λ = Σ_{Λ(I)=Λ} (-1)^{ε(I)} p_I.
inline SymbolicElement big_p(const Superpartition& type) { return signed_type_sum(Basis::P, type); }

/// ρ̃(m_Λ) = Λ!/n! Σ_{Λ(I)=Λ} (-1)^{ε(I)} m_I. Inputs in other bases are
/// rewritten in the m basis first. The result is in the monomial basis.
inline SymbolicElement lift(const SSymElement& el) {
    const SSymElement in_m = convert(el, SSymBasis::M);
    SymbolicElement out(Basis::M);
    for (const auto& [s, c] : in_m.terms()) {
        Rational scale(factorial(s), factorial(static_cast<unsigned>(s.degree())));
        scale.canonicalize();
        out += signed_type_sum(Basis::M, s) * (c * scale);
    }
    return out;
}

}  // namespace sncsym
