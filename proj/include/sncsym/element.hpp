#pragma once

// Elements of sNCSym written in one of the four classical bases.

#include "sncsym/composition.hpp"
#include "sncsym/parse_util.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace sncsym {

enum class Basis { M, P, E, H };

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::M: return 'm';
        case Basis::P: return 'p';
        case Basis::E: return 'e';
        case Basis::H: return 'h';
    }
    return '?';
}

inline Basis parse_basis(std::string_view s) {
    if (s == "m" || s == "M") return Basis::M;
    if (s == "p" || s == "P") return Basis::P;
    if (s == "e" || s == "E") return Basis::E;
    if (s == "h" || s == "H") return Basis::H;
    throw ParseError("unknown basis '" + std::string(s) + "' (expected m, p, e or h)", 0);
}

class SymbolicElement {
public:
    using Terms = std::map<SetSuperpartition, Rational>;

    explicit SymbolicElement(Basis basis = Basis::M) : basis_(basis) {}

    /// b_K for a partial set supercomposition K, canonicalized with its sign.
    static SymbolicElement basis_element(Basis basis, const PartialSetSupercomposition& k) {
        SymbolicElement el(basis);
        el.add(k, 1);
        return el;
    }

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const SetSuperpartition& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const SetSuperpartition& i, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(i, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Adds c·b_K; b_{σ▷I} = (-1)^{inv σ} b_I and trivial K contribute nothing.
    void add(const PartialSetSupercomposition& k, const Rational& c) {
        if (c == 0) return;
        auto canon = canonical_index(k);
        if (!canon) return;
        add(canon->first, canon->second > 0 ? c : Rational(-c));
    }

    /// The set of bidegrees (n,m) present.
    std::set<std::pair<int, int>> bidegrees() const {
        std::set<std::pair<int, int>> out;
        for (const auto& [i, c] : terms_) out.emplace(i.degree(), i.fermionic_degree());
        return out;
    }

    SymbolicElement& operator+=(const SymbolicElement& o) {
        require_same_basis(o);
        for (const auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    SymbolicElement& operator-=(const SymbolicElement& o) {
        require_same_basis(o);
        for (const auto& [i, c] : o.terms_) add(i, Rational(-c));
        return *this;
    }
    SymbolicElement& operator*=(const Rational& q) {
        if (q == 0) terms_.clear();
        for (auto& [i, c] : terms_) c *= q;
        return *this;
    }
    friend SymbolicElement operator+(SymbolicElement a, const SymbolicElement& b) { return a += b; }
    friend SymbolicElement operator-(SymbolicElement a, const SymbolicElement& b) { return a -= b; }
    friend SymbolicElement operator*(SymbolicElement a, const Rational& q) { return a *= q; }
    friend SymbolicElement operator*(const Rational& q, SymbolicElement a) { return a *= q; }

    /// Equal as elements: same basis and coefficients (the zero element equals itself in any basis).
    friend bool operator==(const SymbolicElement& a, const SymbolicElement& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }

private:
    void require_same_basis(const SymbolicElement& o) const {
        if (o.basis_ != basis_ && !o.is_zero())
            throw std::invalid_argument(std::string("basis mismatch: ") + basis_letter(basis_) + " vs " +
                                        basis_letter(o.basis_));
    }

    Basis basis_;
    Terms terms_;
};

/// Writes a signed sum of `coeff*label` terms; `label` renders one index.
template <typename Map, typename Label>
std::string format_linear_combination(const Map& terms, Label label) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (a != 1) os << a.get_str() << '*';
        os << label(key);
        first = false;
    }
    return os.str();
}

inline std::string to_string(const SymbolicElement& el) {
    const char b = basis_letter(el.basis());
    return format_linear_combination(el.terms(), [b](const SetSuperpartition& i) {
        return std::string(1, b) + "[" + to_string(i) + "]";
    });
}

namespace detail {

/// Parses `[sign] [rational *] <label>` terms joined by + and -; `item` reads
/// one label and returns false if the label is unrecognised.
template <typename Item>
void parse_linear_combination(Cursor& c, Item item) {
    if (c.peek() == '0') {
        std::size_t save = c.offset();
        c.integer("element");
        if (c.at_end()) return;
        c.set_offset(save);
    }
    bool first = true;
    while (!c.at_end()) {
        Rational sign = 1;
        if (c.accept('-'))
            sign = -1;
        else if (!c.accept('+') && !first)
            c.fail("expected '+' or '-' between terms");
        Rational coeff = 1;
        char p = c.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) {
            coeff = c.rational();
            c.expect('*', "term 'coeff*b[(...)]'");
        }
        item(c, sign * coeff);
        first = false;
    }
}

}  // namespace detail

/// Parses `3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2})]`. Every term must use
/// the same basis. Non-canonical indices are canonicalized with their sign.
inline SymbolicElement parse_element(std::string_view text) {
    detail::Cursor c(text);
    std::optional<Basis> basis;
    std::vector<std::pair<PartialSetSupercomposition, Rational>> items;
    detail::parse_linear_combination(c, [&](detail::Cursor& cur, const Rational& coeff) {
        std::size_t at = cur.offset();
        char letter = cur.peek();
        cur.set_offset(cur.offset() + 1);
        Basis b;
        try {
            b = parse_basis(std::string(1, letter));
        } catch (const ParseError&) {
            cur.fail_at("expected basis letter m, p, e or h", at);
        }
        if (basis && *basis != b) cur.fail_at("terms use different bases", at);
        basis = b;
        cur.expect('[', "basis symbol 'b[(...)]'");
        std::size_t tuple_at = cur.offset();
        auto blocks = detail::parse_block_tuple(cur);
        auto k = detail::build_or_fail<PartialSetSupercomposition>(std::move(blocks), cur, tuple_at);
        cur.expect(']', "basis symbol 'b[(...)]'");
        items.emplace_back(std::move(k), coeff);
    });
    SymbolicElement el(basis.value_or(Basis::M));
    for (const auto& [k, q] : items) el.add(k, q);
    return el;
}

inline nlohmann::json to_json_value(const SymbolicElement& el) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [i, c] : el.terms())
        terms.push_back({{"index", to_json_value(static_cast<const PartialSetSupercomposition&>(i))},
                         {"coeff", c.get_str()}});
    return {{"basis", std::string(1, basis_letter(el.basis()))}, {"terms", terms}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("coefficient must be an integer or a rational string", 0);
}

inline SymbolicElement element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("expected element object {basis, terms}", 0);
    SymbolicElement el(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        auto blocks = blocks_from_json(t.at("index"));
        el.add(PartialSetSupercomposition(std::move(blocks)), rational_from_json(t.at("coeff")));
    }
    return el;
}

}  // namespace sncsym
