#pragma once

// Concrete polynomials in noncommuting x-variables and anticommuting
// θ-variables over a finite variable budget. Every symbolic identity is
// checked against expansions in this representation.

#include "sncsym/parse_util.hpp"
#include "sncsym/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace sncsym {

/// θ_{a_1}···θ_{a_r} x_{b_1}···x_{b_s} with a strictly increasing; indices are 1-based.
struct SuperMonomial {
    std::vector<std::uint8_t> theta;
    std::vector<std::uint8_t> x;

    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
    friend std::strong_ordering operator<=>(const SuperMonomial&, const SuperMonomial&) = default;

    /// More than one θ index missing from the x word.
    bool null_symmetric() const {
        int missing = 0;
        for (auto a : theta)
            if (std::find(x.begin(), x.end(), a) == x.end()) ++missing;
        return missing > 1;
    }
};

inline std::string to_string(const SuperMonomial& u) {
    std::string s;
    for (auto a : u.theta) s += (s.empty() ? "t" : " t") + std::to_string(a);
    for (auto b : u.x) s += (s.empty() ? "x" : " x") + std::to_string(b);
    return s.empty() ? "1" : s;
}

class OraclePolynomial {
public:
    using Terms = std::map<SuperMonomial, Rational>;

    OraclePolynomial() = default;
    explicit OraclePolynomial(int num_vars) : num_vars_(num_vars) {}

    int num_vars() const noexcept { return num_vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const SuperMonomial& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Adds c·θ_{raw_theta}·x_{x_word}, sorting the θ word with the sign of
    /// its inversions; repeated θ indices give zero.
    void add(const std::vector<std::uint8_t>& raw_theta, const std::vector<std::uint8_t>& x_word, const Rational& c) {
        if (c == 0) return;
        SuperMonomial u{raw_theta, x_word};
        long inv = inversions(u.theta);
        std::sort(u.theta.begin(), u.theta.end());
        if (std::adjacent_find(u.theta.begin(), u.theta.end()) != u.theta.end()) return;
        for (auto a : u.theta) check_index(a);
        for (auto b : u.x) check_index(b);
        add_normalized(std::move(u), inv % 2 ? Rational(-c) : c);
    }

    void add_normalized(SuperMonomial u, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(u), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    OraclePolynomial& operator+=(const OraclePolynomial& o) {
        merge_budget(o);
        for (const auto& [u, c] : o.terms_) add_normalized(u, c);
        return *this;
    }
    OraclePolynomial& operator-=(const OraclePolynomial& o) {
        merge_budget(o);
        for (const auto& [u, c] : o.terms_) add_normalized(u, -c);
        return *this;
    }
    OraclePolynomial& operator*=(const Rational& q) {
        if (q == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [u, c] : terms_) c *= q;
        return *this;
    }
    friend OraclePolynomial operator+(OraclePolynomial a, const OraclePolynomial& b) { return a += b; }
    friend OraclePolynomial operator-(OraclePolynomial a, const OraclePolynomial& b) { return a -= b; }
    friend OraclePolynomial operator*(OraclePolynomial a, const Rational& q) { return a *= q; }
    friend OraclePolynomial operator*(const Rational& q, OraclePolynomial a) { return a *= q; }

    friend bool operator==(const OraclePolynomial& a, const OraclePolynomial& b) { return a.terms_ == b.terms_; }

private:
    void check_index(std::uint8_t i) const {
        if (i == 0 || (num_vars_ > 0 && i > num_vars_))
            throw std::out_of_range("variable index " + std::to_string(i) + " outside budget " +
                                    std::to_string(num_vars_));
    }
    void merge_budget(const OraclePolynomial& o) { num_vars_ = std::max(num_vars_, o.num_vars_); }

    int num_vars_ = 0;
    Terms terms_;
};

/// θ's move left past x's freely; θ words concatenate then renormalize.
inline OraclePolynomial multiply(const OraclePolynomial& f, const OraclePolynomial& g) {
    OraclePolynomial out(std::max(f.num_vars(), g.num_vars()));
    std::vector<std::uint8_t> theta, x;
    for (const auto& [u, c] : f.terms())
        for (const auto& [v, d] : g.terms()) {
            theta = u.theta;
            theta.insert(theta.end(), v.theta.begin(), v.theta.end());
            x = u.x;
            x.insert(x.end(), v.x.begin(), v.x.end());
            out.add(theta, x, c * d);
        }
    return out;
}

/// Diagonal action: s(x_i) = x_{s(i)}, s(θ_i) = θ_{s(i)}; `s` is 0-based on [N].
inline OraclePolynomial act(const std::vector<int>& s, const OraclePolynomial& f) {
    OraclePolynomial out(f.num_vars());
    std::vector<std::uint8_t> theta, x;
    auto image = [&](std::uint8_t i) {
        return static_cast<std::size_t>(i) <= s.size() ? static_cast<std::uint8_t>(s[i - 1u] + 1) : i;
    };
    for (const auto& [u, c] : f.terms()) {
        theta.clear();
        x.clear();
        for (auto a : u.theta) theta.push_back(image(a));
        for (auto b : u.x) x.push_back(image(b));
        out.add(theta, x, c);
    }
    return out;
}

/// Invariance under the adjacent transpositions s_1,...,s_{N-1}.
inline bool is_symmetric(const OraclePolynomial& f) {
    const int n = f.num_vars();
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> s(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = j;
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
        if (!(act(s, f) == f)) return false;
    }
    return true;
}

/// One term per line, `coeff * word`, in monomial order; "0" for the zero polynomial.
inline std::string to_string(const OraclePolynomial& f) {
    if (f.is_zero()) return "0\n";
    std::ostringstream os;
    for (const auto& [u, c] : f.terms()) os << c.get_str() << " * " << to_string(u) << '\n';
    return os.str();
}

/// Parses the line format produced by to_string.
inline OraclePolynomial parse_oracle_polynomial(std::string_view text, int num_vars) {
    OraclePolynomial f(num_vars);
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t end = text.find('\n', line_start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(line_start, end - line_start);
        detail::Cursor c(line, line_start);
        if (!c.at_end() && !(c.peek() == '0' && c.rest().find('*') == std::string_view::npos)) {
            Rational q = c.rational();
            c.expect('*', "term 'coeff * t1 x2 ...'");
            std::vector<std::uint8_t> theta, x;
            if (c.peek() == '1') {
                c.integer("term");
            } else {
                while (!c.at_end()) {
                    char v = c.peek();
                    c.set_offset(c.offset() + 1);
                    if (v != 't' && v != 'x') c.fail("expected variable 't<k>' or 'x<k>'");
                    int k = c.integer("variable index");
                    if (k < 1 || k > 255) c.fail("variable index out of range");
                    (v == 't' ? theta : x).push_back(static_cast<std::uint8_t>(k));
                }
            }
            if (!c.at_end()) c.fail("trailing characters in term");
            f.add(theta, x, q);
        }
        if (end == text.size()) break;
        line_start = end + 1;
    }
    return f;
}

}  // namespace sncsym
