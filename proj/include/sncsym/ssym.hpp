#pragma once

// Symmetric functions in commuting variables in superspace (sSym): concrete
// polynomials, the six bases m, p, e, h, s, s̄ and their transition data.
// Transitions are read off concrete expansions and inverted exactly.

#include "sncsym/element.hpp"
#include "sncsym/matrix.hpp"
#include "sncsym/oracle.hpp"
#include "sncsym/parse_util.hpp"
#include "sncsym/superpartition.hpp"
#include "sncsym/tableau.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace sncsym {

// ---------------------------------------------------------------------------
// Commuting polynomials in x_1..x_N and anticommuting θ_1..θ_N.

struct CommutingSuperMonomial {
    std::vector<std::uint8_t> theta;      ///< strictly increasing θ indices
    std::vector<std::uint8_t> exponents;  ///< exponent of x_i at position i-1

    friend bool operator==(const CommutingSuperMonomial&, const CommutingSuperMonomial&) = default;
    friend auto operator<=>(const CommutingSuperMonomial&, const CommutingSuperMonomial&) = default;
};

inline std::string to_string(const CommutingSuperMonomial& u) {
    std::string s;
    for (auto t : u.theta) s += (s.empty() ? "" : " ") + std::string("t") + std::to_string(t);
    for (std::size_t i = 0; i < u.exponents.size(); ++i) {
        if (u.exponents[i] == 0) continue;
        s += (s.empty() ? "" : " ") + std::string("x") + std::to_string(i + 1);
        if (u.exponents[i] > 1) s += "^" + std::to_string(u.exponents[i]);
    }
    return s.empty() ? "1" : s;
}

class CommutingPolynomial {
public:
    using Terms = std::map<CommutingSuperMonomial, Rational>;

    explicit CommutingPolynomial(int num_vars = 0) : num_vars_(num_vars) {}

    int num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const CommutingSuperMonomial& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c·θ_{raw_theta}·x^{exponents}, reordering θ with its sign.
    void add(std::vector<std::uint8_t> raw_theta, std::vector<std::uint8_t> exponents, const Rational& c) {
        if (c == 0) return;
        if (exponents.size() != static_cast<std::size_t>(num_vars_))
            throw std::invalid_argument("exponent vector does not match the variable count");
        for (auto t : raw_theta)
            if (t < 1 || t > num_vars_) throw std::out_of_range("theta index outside the variable budget");
        const long inv = inversions(std::span<const std::uint8_t>(raw_theta));
        std::sort(raw_theta.begin(), raw_theta.end());
        if (std::adjacent_find(raw_theta.begin(), raw_theta.end()) != raw_theta.end()) return;
        add_normalized({std::move(raw_theta), std::move(exponents)}, c * sign_of_parity(inv));
    }

    void add_normalized(const CommutingSuperMonomial& u, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    CommutingPolynomial& operator+=(const CommutingPolynomial& o) {
        for (const auto& [u, c] : o.terms_) add_normalized(u, c);
        return *this;
    }
    CommutingPolynomial& operator-=(const CommutingPolynomial& o) {
        for (const auto& [u, c] : o.terms_) add_normalized(u, -c);
        return *this;
    }
    CommutingPolynomial& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        for (auto& [u, d] : terms_) d *= c;
        return *this;
    }
    friend CommutingPolynomial operator+(CommutingPolynomial a, const CommutingPolynomial& b) { return a += b; }
    friend CommutingPolynomial operator-(CommutingPolynomial a, const CommutingPolynomial& b) { return a -= b; }
    friend CommutingPolynomial operator*(CommutingPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const CommutingPolynomial& a, const CommutingPolynomial& b) { return a.terms_ == b.terms_; }

private:
    int num_vars_;
    Terms terms_;
};

inline CommutingPolynomial multiply(const CommutingPolynomial& f, const CommutingPolynomial& g) {
    if (f.num_vars() != g.num_vars()) throw std::invalid_argument("variable budgets differ");
    CommutingPolynomial out(f.num_vars());
    for (const auto& [u, c] : f.terms())
        for (const auto& [v, d] : g.terms()) {
            std::vector<std::uint8_t> theta = u.theta;
            theta.insert(theta.end(), v.theta.begin(), v.theta.end());
            std::vector<std::uint8_t> e = u.exponents;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(e[i] + v.exponents[i]);
            out.add(std::move(theta), std::move(e), c * d);
        }
    return out;
}

inline std::string to_string(const CommutingPolynomial& f) {
    if (f.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [u, c] : f.terms()) os << c.get_str() << " * " << to_string(u) << "\n";
    return os.str();
}

/// Lets the x's commute; the (already normalized) θ word is kept.
inline CommutingPolynomial rho_concrete(const OraclePolynomial& f) {
    CommutingPolynomial out(f.num_vars());
    for (const auto& [u, c] : f.terms()) {
        std::vector<std::uint8_t> e(static_cast<std::size_t>(f.num_vars()), 0);
        for (auto v : u.x) ++e[static_cast<std::size_t>(v - 1)];
        out.add_normalized({u.theta, std::move(e)}, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elements of sSym.

enum class SSymBasis { M, P, E, H, S, SBar };

inline std::string ssym_basis_name(SSymBasis b) {
    switch (b) {
        case SSymBasis::M: return "m";
        case SSymBasis::P: return "p";
        case SSymBasis::E: return "e";
        case SSymBasis::H: return "h";
        case SSymBasis::S: return "s";
        case SSymBasis::SBar: return "sbar";
    }
    throw std::logic_error("unknown sSym basis");
}

inline SSymBasis parse_ssym_basis(std::string_view s) {
    for (auto b : {SSymBasis::M, SSymBasis::P, SSymBasis::E, SSymBasis::H, SSymBasis::S, SSymBasis::SBar})
        if (s == ssym_basis_name(b)) return b;
    throw ParseError("unknown sSym basis '" + std::string(s) + "' (expected m, p, e, h, s or sbar)", 0);
}

class SSymElement {
public:
    using Terms = std::map<Superpartition, Rational>;

    explicit SSymElement(SSymBasis b = SSymBasis::M) : basis_(b) {}

    static SSymElement basis_element(SSymBasis b, const Superpartition& s) {
        SSymElement el(b);
        el.add(s, 1);
        return el;
    }

    SSymBasis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Superpartition& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Superpartition& s, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SSymElement& operator+=(const SSymElement& o) {
        same_basis(o);
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    SSymElement& operator-=(const SSymElement& o) {
        same_basis(o);
        for (const auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    SSymElement& operator*=(const Rational& c) {
        if (c == 0) terms_.clear();
        for (auto& [s, d] : terms_) d *= c;
        return *this;
    }
    friend SSymElement operator+(SSymElement a, const SSymElement& b) { return a += b; }
    friend SSymElement operator-(SSymElement a, const SSymElement& b) { return a -= b; }
    friend SSymElement operator*(SSymElement a, const Rational& c) { return a *= c; }
    friend bool operator==(const SSymElement& a, const SSymElement& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    void same_basis(const SSymElement& o) const {
        if (!is_zero() && !o.is_zero() && o.basis_ != basis_)
            throw std::invalid_argument("sSym elements are in different bases");
        if (is_zero()) const_cast<SSymElement*>(this)->basis_ = o.basis_;
    }

    SSymBasis basis_;
    Terms terms_;
};

inline std::string to_string(const SSymElement& el) {
    const std::string b = ssym_basis_name(el.basis());
    return format_linear_combination(el.terms(), [&b](const Superpartition& s) { return b + "[" + to_string(s) + "]"; });
}

/// Parses `2*h[(0;1)] - h[(1;)]`.
inline SSymElement parse_ssym_element(std::string_view text) {
    detail::Cursor c(text);
    std::optional<SSymBasis> basis;
    std::vector<std::pair<Superpartition, Rational>> items;
    detail::parse_linear_combination(c, [&](detail::Cursor& cur, const Rational& coeff) {
        std::size_t at = cur.offset();
        std::string name;
        while (!cur.at_end() && std::isalpha(static_cast<unsigned char>(cur.peek_raw()))) {
            name += cur.peek_raw();
            cur.set_offset(cur.offset() + 1);
        }
        SSymBasis b;
        try {
            b = parse_ssym_basis(name);
        } catch (const ParseError&) {
            cur.fail_at("expected sSym basis name m, p, e, h, s or sbar", at);
        }
        if (basis && *basis != b) cur.fail_at("terms use different bases", at);
        basis = b;
        cur.expect('[', "basis symbol 'b[(a;s)]'");
        auto s = detail::parse_superpartition(cur);
        cur.expect(']', "basis symbol 'b[(a;s)]'");
        items.emplace_back(std::move(s), coeff);
    });
    SSymElement el(basis.value_or(SSymBasis::M));
    for (const auto& [s, q] : items) el.add(s, q);
    return el;
}

inline nlohmann::json to_json_value(const SSymElement& el) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [s, c] : el.terms()) terms.push_back({{"index", to_string(s)}, {"coeff", c.get_str()}});
    return {{"basis", ssym_basis_name(el.basis())}, {"terms", terms}};
}

inline SSymElement ssym_element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("expected sSym element object {basis, terms}", 0);
    SSymElement el(parse_ssym_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        const auto& c = t.at("coeff");
        Rational q = c.is_number_integer() ? Rational(c.get<long>()) : parse_rational(c.get<std::string>());
        el.add(superpartition_from_json(t.at("index")), q);
    }
    return el;
}

// ---------------------------------------------------------------------------
// Concrete expansions.

/// m_Λ: distinct monomials θ_{σ1}..θ_{σm} x_{σ1}^{Λ1}..x_{σℓ}^{Λℓ}, σ injective.
inline CommutingPolynomial expand_ssym_monomial(const Superpartition& s, int num_vars) {
    CommutingPolynomial out(num_vars);
    const int m = s.fermionic_degree(), len = s.length();
    if (len > num_vars) return out;
    std::vector<int> parts = s.antisym();
    parts.insert(parts.end(), s.sym().begin(), s.sym().end());
    std::set<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> seen;
    std::vector<std::uint8_t> value(static_cast<std::size_t>(len));
    std::vector<bool> taken(static_cast<std::size_t>(num_vars) + 1, false);
    std::function<void(int)> rec = [&](int b) {
        if (b == len) {
            std::vector<std::uint8_t> theta(value.begin(), value.begin() + m);
            std::vector<std::uint8_t> e(static_cast<std::size_t>(num_vars), 0);
            for (int i = 0; i < len; ++i)
                e[static_cast<std::size_t>(value[static_cast<std::size_t>(i)] - 1)] =
                    static_cast<std::uint8_t>(parts[static_cast<std::size_t>(i)]);
            if (seen.emplace(theta, e).second) out.add(std::move(theta), std::move(e), 1);
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
    return out;
}

namespace detail {

inline CommutingPolynomial ssym_one(int num_vars) {
    CommutingPolynomial one(num_vars);
    one.add({}, std::vector<std::uint8_t>(static_cast<std::size_t>(num_vars), 0), 1);
    return one;
}

/// The generators p̃_k, p_r, ẽ_k, e_r, h̃_k, h_r.
inline CommutingPolynomial ssym_generator(SSymBasis b, int k, bool fermionic, int num_vars) {
    switch (b) {
        case SSymBasis::P: {
            CommutingPolynomial f(num_vars);
            for (int i = 1; i <= num_vars; ++i) {
                std::vector<std::uint8_t> e(static_cast<std::size_t>(num_vars), 0);
                e[static_cast<std::size_t>(i - 1)] = static_cast<std::uint8_t>(k);
                std::vector<std::uint8_t> theta;
                if (fermionic) theta.push_back(static_cast<std::uint8_t>(i));
                f.add(std::move(theta), std::move(e), 1);
            }
            return f;
        }
        case SSymBasis::E: {
            std::vector<int> ones(static_cast<std::size_t>(k), 1);
            return expand_ssym_monomial(fermionic ? Superpartition({0}, ones) : Superpartition({}, ones), num_vars);
        }
        case SSymBasis::H: {
            CommutingPolynomial f(num_vars);
            for (const auto& s : enumerate_superpartitions(k, fermionic ? 1 : 0))
                f += expand_ssym_monomial(s, num_vars) * Rational(fermionic ? s.antisym()[0] + 1 : 1);
            return f;
        }
        default: break;
    }
    throw std::logic_error("no generators for this basis");
}

}  // namespace detail

/// Multiplicative bases: b̃_{Λ1}···b̃_{Λm} b_{Λm+1}···b_{Λℓ}.
inline CommutingPolynomial expand_ssym_multiplicative(SSymBasis b, const Superpartition& s, int num_vars) {
    CommutingPolynomial f = detail::ssym_one(num_vars);
    for (int a : s.antisym()) f = multiply(f, detail::ssym_generator(b, a, true, num_vars));
    for (int v : s.sym()) f = multiply(f, detail::ssym_generator(b, v, false, num_vars));
    return f;
}

/// s_Λ = Σ_Ω K_{Λ,Ω} m_Ω and s̄_Λ = Σ_Ω K̄_{Λ,Ω} m_Ω.
inline SSymElement schur_ssym(const Superpartition& shape, TableauKind kind) {
    SSymElement out(SSymBasis::M);
    for (const auto& omega : enumerate_superpartitions(shape.degree(), shape.fermionic_degree()))
        out.add(omega, Rational(kostka(shape, omega, kind)));
    return out;
}

inline CommutingPolynomial expand_ssym_basis(SSymBasis b, const Superpartition& s, int num_vars);

inline CommutingPolynomial expand_ssym(const SSymElement& el, int num_vars) {
    CommutingPolynomial f(num_vars);
    for (const auto& [s, c] : el.terms()) f += expand_ssym_basis(el.basis(), s, num_vars) * c;
    return f;
}

inline CommutingPolynomial expand_ssym_basis(SSymBasis b, const Superpartition& s, int num_vars) {
    switch (b) {
        case SSymBasis::M: return expand_ssym_monomial(s, num_vars);
        case SSymBasis::P:
        case SSymBasis::E:
        case SSymBasis::H: return expand_ssym_multiplicative(b, s, num_vars);
        case SSymBasis::S: return expand_ssym(schur_ssym(s, TableauKind::First), num_vars);
        case SSymBasis::SBar: return expand_ssym(schur_ssym(s, TableauKind::Second), num_vars);
    }
    throw std::logic_error("unknown sSym basis");
}

/// Representative monomial of m_Λ: θ_1..θ_m x_1^{Λ1}..x_ℓ^{Λℓ}.
inline CommutingSuperMonomial representative_monomial(const Superpartition& s, int num_vars) {
    CommutingSuperMonomial u;
    u.exponents.assign(static_cast<std::size_t>(num_vars), 0);
    std::size_t i = 0;
    for (int a : s.antisym()) {
        u.theta.push_back(static_cast<std::uint8_t>(i + 1));
        u.exponents[i++] = static_cast<std::uint8_t>(a);
    }
    for (int v : s.sym()) u.exponents[i++] = static_cast<std::uint8_t>(v);
    return u;
}

/// Writes a symmetric commuting polynomial in the m basis; throws when a
/// residual remains.
inline SSymElement decompose_ssym_monomial(const CommutingPolynomial& f) {
    SSymElement el(SSymBasis::M);
    std::set<std::pair<int, int>> bidegrees;
    for (const auto& [u, c] : f.terms()) {
        int n = 0;
        for (auto e : u.exponents) n += e;
        bidegrees.emplace(n, static_cast<int>(u.theta.size()));
    }
    for (auto [n, m] : bidegrees)
        for (const auto& s : enumerate_superpartitions(n, m)) {
            if (s.length() > f.num_vars()) continue;
            el.add(s, f.coefficient(representative_monomial(s, f.num_vars())));
        }
    if (!(expand_ssym(el, f.num_vars()) == f))
        throw std::runtime_error("commuting polynomial is not a combination of monomial functions");
    return el;
}

// ---------------------------------------------------------------------------
// Transitions, derived from concrete expansions with ℓ(Λ) ≤ n+1 variables.

struct SSymTransition {
    std::vector<Superpartition> indices;
    std::map<Superpartition, std::size_t> position;
    RationalMatrix to_m;    ///< column c: basis element c in the m basis
    RationalMatrix from_m;  ///< its inverse
};

class SSymTransitionCache {
public:
    static SSymTransitionCache& instance() {
        static SSymTransitionCache cache;
        return cache;
    }

    const SSymTransition& table(int n, int m, SSymBasis b) {
        std::shared_ptr<Entry> entry;
        {
            std::lock_guard lock(mutex_);
            auto& slot = entries_[std::make_tuple(n, m, b)];
            if (!slot) slot = std::make_shared<Entry>();
            entry = slot;
        }
        std::call_once(entry->once, [&] { entry->table = build(n, m, b); });
        return entry->table;
    }

private:
    struct Entry {
        std::once_flag once;
        SSymTransition table;
    };

    static SSymTransition build(int n, int m, SSymBasis b) {
        SSymTransition t;
        t.indices = enumerate_superpartitions(n, m);
        const std::size_t size = t.indices.size();
        for (std::size_t i = 0; i < size; ++i) t.position.emplace(t.indices[i], i);
        t.to_m = RationalMatrix(size, size);
        const int num_vars = n + 1;
        for (std::size_t c = 0; c < size; ++c) {
            SSymElement col(SSymBasis::M);
            if (b == SSymBasis::M)
                col.add(t.indices[c], 1);
            else if (b == SSymBasis::S || b == SSymBasis::SBar)
                col = schur_ssym(t.indices[c], b == SSymBasis::S ? TableauKind::First : TableauKind::Second);
            else
                col = decompose_ssym_monomial(expand_ssym_basis(b, t.indices[c], num_vars));
            for (const auto& [s, q] : col.terms()) t.to_m(t.position.at(s), c) = q;
        }
        t.from_m = t.to_m.inverse();
        return t;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, SSymBasis>, std::shared_ptr<Entry>> entries_;
};

inline SSymElement convert(const SSymElement& el, SSymBasis to) {
    if (el.basis() == to) return el;
    SSymElement m(SSymBasis::M);
    for (const auto& [s, c] : el.terms()) {
        const auto& t = SSymTransitionCache::instance().table(s.degree(), s.fermionic_degree(), el.basis());
        const std::size_t col = t.position.at(s);
        for (std::size_t r = 0; r < t.indices.size(); ++r) m.add(t.indices[r], c * t.to_m(r, col));
    }
    if (to == SSymBasis::M) return m;
    SSymElement out(to);
    for (const auto& [s, c] : m.terms()) {
        const auto& t = SSymTransitionCache::instance().table(s.degree(), s.fermionic_degree(), to);
        const std::size_t col = t.position.at(s);
        for (std::size_t r = 0; r < t.indices.size(); ++r) out.add(t.indices[r], c * t.from_m(r, col));
    }
    return out;
}

/// Dense sSym transition matrix at bidegree (n,m): entry (r,c) is the
/// coefficient of to_{Λ_r} in from_{Λ_c}.
inline RationalMatrix ssym_transition_matrix(int n, int m, SSymBasis from, SSymBasis to) {
    const auto& a = SSymTransitionCache::instance().table(n, m, from);
    const auto& b = SSymTransitionCache::instance().table(n, m, to);
    return b.from_m * a.to_m;
}

// ---------------------------------------------------------------------------
// Algebra structure.

/// p_Λ·p_Ω: fermionic generators anticommute, so the merged antisymmetric
/// part is sorted with its permutation sign (zero on a repeated part).
inline SSymElement product(const SSymElement& f, const SSymElement& g) {
    const SSymElement fp = convert(f, SSymBasis::P), gp = convert(g, SSymBasis::P);
    SSymElement out(SSymBasis::P);
    for (const auto& [a, c] : fp.terms())
        for (const auto& [b, d] : gp.terms()) {
            std::vector<int> anti = a.antisym();
            anti.insert(anti.end(), b.antisym().begin(), b.antisym().end());
            std::vector<int> key(anti.size());
            for (std::size_t i = 0; i < anti.size(); ++i) key[i] = -anti[i];
            const long inv = inversions(std::span<const int>(key));
            std::set<int> distinct(anti.begin(), anti.end());
            if (distinct.size() != anti.size()) continue;
            std::vector<int> sym = a.sym();
            sym.insert(sym.end(), b.sym().begin(), b.sym().end());
            out.add(Superpartition(std::move(anti), std::move(sym)), c * d * sign_of_parity(inv));
        }
    return convert(out, f.basis());
}

/// ⟨m_Λ, h_Ω⟩ = (-1)^{C(m,2)} δ_{Λ,Ω}.
inline Rational inner_product(const SSymElement& f, const SSymElement& g) {
    const SSymElement fm = convert(f, SSymBasis::M), gh = convert(g, SSymBasis::H);
    Rational total = 0;
    for (const auto& [s, c] : fm.terms()) {
        Rational d = gh.coefficient(s);
        if (d != 0) total += c * d * binom2_sign(s.fermionic_degree());
    }
    return total;
}

/// ω̂(p_Λ) = (-1)^{deg Λ - ℓ(Λ^s)} p_Λ; the result stays in the input basis.
inline SSymElement omega_hat(const SSymElement& el) {
    const SSymElement in_p = convert(el, SSymBasis::P);
    SSymElement p(SSymBasis::P);
    for (const auto& [s, c] : in_p.terms())
        p.add(s, c * sign_of_parity(s.degree() - static_cast<int>(s.sym().size())));
    return convert(p, el.basis());
}

}  // namespace sncsym
