#pragma once

#include "sncsym/composition.hpp"
#include "sncsym/enumerate.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace sncsym {

/// Λ = (Λ^a ; Λ^s): distinct fermionic parts (zero allowed) and an ordinary partition.
/// Both sides are stored in decreasing order.
class Superpartition {
public:
    Superpartition() = default;

    Superpartition(std::vector<int> antisym, std::vector<int> sym) : antisym_(std::move(antisym)), sym_(std::move(sym)) {
        std::sort(antisym_.begin(), antisym_.end(), std::greater<>());
        std::sort(sym_.begin(), sym_.end(), std::greater<>());
        while (!sym_.empty() && sym_.back() == 0) sym_.pop_back();
        for (int v : antisym_)
            if (v < 0) throw std::invalid_argument("superpartition parts must be nonnegative");
        for (int v : sym_)
            if (v < 0) throw std::invalid_argument("superpartition parts must be nonnegative");
        if (std::adjacent_find(antisym_.begin(), antisym_.end()) != antisym_.end())
            throw std::invalid_argument("fermionic parts of a superpartition must be distinct");
    }

    const std::vector<int>& antisym() const noexcept { return antisym_; }
    const std::vector<int>& sym() const noexcept { return sym_; }

    int degree() const {
        return std::accumulate(antisym_.begin(), antisym_.end(), 0) + std::accumulate(sym_.begin(), sym_.end(), 0);
    }
    int fermionic_degree() const noexcept { return static_cast<int>(antisym_.size()); }
    int length() const noexcept { return static_cast<int>(antisym_.size() + sym_.size()); }

    /// Λ⁺ = sort(Λ^a, Λ^s) without zeros.
    std::vector<int> plus() const {
        std::vector<int> v = antisym_;
        v.insert(v.end(), sym_.begin(), sym_.end());
        std::sort(v.begin(), v.end(), std::greater<>());
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }

    /// Λ^⊕ = sort(Λ^a + 1, Λ^s).
    std::vector<int> oplus() const {
        std::vector<int> v;
        for (int a : antisym_) v.push_back(a + 1);
        v.insert(v.end(), sym_.begin(), sym_.end());
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }

    friend bool operator==(const Superpartition&, const Superpartition&) = default;
    friend std::strong_ordering operator<=>(const Superpartition&, const Superpartition&) = default;

private:
    std::vector<int> antisym_;
    std::vector<int> sym_;
};

inline std::string to_string(const Superpartition& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.antisym().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.antisym()[i]);
    }
    out += ';';
    for (std::size_t i = 0; i < s.sym().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.sym()[i]);
    }
    return out + ")";
}

namespace detail {

inline Superpartition parse_superpartition(Cursor& c) {
    static constexpr const char* grammar = "superpartition '(a1,...;s1,...)'";
    std::size_t start = c.offset();
    c.expect('(', grammar);
    std::vector<int> a, s;
    if (c.peek() != ';') {
        do a.push_back(c.integer(grammar));
        while (c.accept(','));
    }
    c.expect(';', grammar);
    if (c.peek() != ')') {
        do s.push_back(c.integer(grammar));
        while (c.accept(','));
    }
    c.expect(')', grammar);
    try {
        return Superpartition(std::move(a), std::move(s));
    } catch (const std::invalid_argument& e) {
        c.fail_at(e.what(), start);
    }
}

}  // namespace detail

inline Superpartition parse_superpartition(std::string_view text) {
    detail::Cursor c(text);
    auto s = detail::parse_superpartition(c);
    if (!c.at_end()) c.fail("trailing characters after superpartition");
    return s;
}

inline nlohmann::json to_json_value(const Superpartition& s) {
    return nlohmann::json{{"antisym", s.antisym()}, {"sym", s.sym()}};
}

inline Superpartition superpartition_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_superpartition(j.get<std::string>());
    if (!j.is_object() || !j.contains("antisym") || !j.contains("sym"))
        throw ParseError("expected superpartition object {antisym, sym}", 0);
    return Superpartition(j.at("antisym").get<std::vector<int>>(), j.at("sym").get<std::vector<int>>());
}

// ---------------------------------------------------------------------------
// Ordinary partitions and superpartition enumeration.

/// Partitions of n with parts ≤ max_part in reverse lexicographic order.
inline std::vector<std::vector<int>> enumerate_partitions(int n, int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

/// Strictly decreasing lists of m nonnegative integers summing to k, reverse lexicographic.
inline std::vector<std::vector<int>> enumerate_distinct_parts(int k, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int rest, int slots, int below) {
        if (slots == 0) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        // the remaining slots-1 parts are at least 0,1,...,slots-2
        int min_rest = (slots - 1) * (slots - 2) / 2;
        for (int p = std::min(rest, below - 1); p >= slots - 1; --p) {
            if (rest - p < min_rest) continue;
            cur.push_back(p);
            rec(rest - p, slots - 1, p);
            cur.pop_back();
        }
    };
    rec(k, m, k + 1);
    return out;
}

/// sPar_{n,m}: all superpartitions of degree n and fermionic degree m.
inline std::vector<Superpartition> enumerate_superpartitions(int n, int m) {
    std::vector<Superpartition> out;
    if (n < 0 || m < 0) return out;
    for (int k = n; k >= 0; --k)
        for (const auto& a : enumerate_distinct_parts(k, m))
            for (const auto& s : enumerate_partitions(n - k)) out.emplace_back(a, s);
    return out;
}

// ---------------------------------------------------------------------------
// Type of a set superpartition.

/// Λ(I), or nothing when two fermionic blocks share a size.
inline std::optional<Superpartition> lambda_of(const PartialSetSupercomposition& i) {
    std::vector<int> a, s;
    for (Block b : i.fermionic_blocks()) a.push_back(b.size() - 1);
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    for (Block b : i.bosonic_blocks()) s.push_back(b.size());
    return Superpartition(std::move(a), std::move(s));
}

/// ε(I): minimal number of transpositions taking (|I_1|-1,...,|I_m|-1) to Λ(I)^a.
inline std::optional<int> epsilon(const PartialSetSupercomposition& i) {
    std::vector<int> a;
    for (Block b : i.fermionic_blocks()) a.push_back(b.size() - 1);
    std::vector<int> target = a;
    std::sort(target.begin(), target.end(), std::greater<>());
    if (std::adjacent_find(target.begin(), target.end()) != target.end()) return std::nullopt;
    // permutation position -> sorted position; transpositions = m - cycles
    const std::size_t m = a.size();
    std::vector<std::size_t> where(m);
    for (std::size_t p = 0; p < m; ++p)
        where[p] = static_cast<std::size_t>(std::find(target.begin(), target.end(), a[p]) - target.begin());
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (std::size_t p = 0; p < m; ++p) {
        if (seen[p]) continue;
        ++cycles;
        for (std::size_t q = p; !seen[q]; q = where[q]) seen[q] = true;
    }
    return static_cast<int>(m) - cycles;
}

/// (-1)^{ε(I)}; requires distinct fermionic block sizes.
inline int epsilon_sign(const PartialSetSupercomposition& i) {
    auto e = epsilon(i);
    if (!e) throw std::invalid_argument("type undefined: equal-size fermionic blocks in " + to_string(i));
    return sign_of_parity(*e);
}

/// λ! = ∏ λ_i!
inline Integer parts_factorial(const std::vector<int>& parts) {
    Integer r = 1;
    for (int p : parts) r *= factorial(static_cast<unsigned>(p));
    return r;
}

/// λ^! = ∏ r_i! over part multiplicities.
inline Integer multiplicity_factorial(const std::vector<int>& parts) {
    std::map<int, unsigned> mult;
    for (int p : parts) ++mult[p];
    Integer r = 1;
    for (auto [p, c] : mult) r *= factorial(c);
    return r;
}

/// Λ! = Λ^a! Λ^s!
inline Integer factorial(const Superpartition& s) { return parts_factorial(s.antisym()) * parts_factorial(s.sym()); }

/// binom(n, Λ) = n! / (Λ! (Λ^s)^!): the number of set superpartitions of type Λ.
inline Integer super_binomial(const Superpartition& s) {
    return factorial(static_cast<unsigned>(s.degree())) / (factorial(s) * multiplicity_factorial(s.sym()));
}

/// All set superpartitions of type Λ, in enumeration order.
inline std::vector<SetSuperpartition> set_superpartitions_of_type(const Superpartition& s) {
    std::vector<SetSuperpartition> out;
    for (auto& i : enumerate_set_superpartitions(s.degree(), s.fermionic_degree()))
        if (auto t = lambda_of(i); t && *t == s) out.push_back(std::move(i));
    return out;
}

// ---------------------------------------------------------------------------
// Conjugation.

inline std::vector<int> conjugate_partition(const std::vector<int>& lambda) {
    std::vector<int> out;
    if (lambda.empty()) return out;
    for (int c = 1; c <= lambda.front(); ++c) {
        int len = 0;
        for (int p : lambda)
            if (p >= c) ++len;
        out.push_back(len);
    }
    return out;
}

/// Rebuilds Λ from the pair (Λ⁺, Λ^⊕): rows where Λ^⊕ exceeds Λ⁺ carry a fermionic part.
inline Superpartition superpartition_from_diagrams(std::vector<int> plus, std::vector<int> oplus) {
    if (plus.size() > oplus.size()) throw std::invalid_argument("diagram pair is not a super diagram");
    plus.resize(oplus.size(), 0);
    std::vector<int> a, s;
    for (std::size_t r = 0; r < oplus.size(); ++r) {
        int d = oplus[r] - plus[r];
        if (d == 1)
            a.push_back(plus[r]);
        else if (d == 0)
            s.push_back(plus[r]);
        else
            throw std::invalid_argument("diagram pair is not a super diagram");
    }
    return Superpartition(std::move(a), std::move(s));
}

/// Λ': conjugate both Λ⁺ and Λ^⊕.
inline Superpartition conjugate(const Superpartition& s) {
    return superpartition_from_diagrams(conjugate_partition(s.plus()), conjugate_partition(s.oplus()));
}

}  // namespace sncsym
