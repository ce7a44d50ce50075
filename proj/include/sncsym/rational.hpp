#pragma once

// Exact rational scalars and small integer helpers shared by every module.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sncsym {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown by every text/JSON parser; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

/// (-1)^{binom(m,2)}
inline int binom2_sign(int m) { return sign_of_parity(static_cast<long>(m) * (m - 1) / 2); }

/// Number of inversions of a word.
template <typename T>
long inversions(std::span<const T> word) {
    long inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[j] < word[i]) ++inv;
    return inv;
}

template <typename T>
long inversions(const std::vector<T>& word) {
    return inversions(std::span<const T>(word));
}

/// All permutations of {0,..,m-1} in lexicographic order.
inline std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses `a`, `-a`, `a/b`. Whitespace is not accepted inside the literal.
inline Rational parse_rational(std::string_view text, std::size_t offset = 0) {
    if (text.empty()) throw ParseError("expected a rational number", offset);
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    bool seen_digit = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw ParseError("invalid character in rational number", offset + i);
        }
    }
    if (!seen_digit) throw ParseError("expected digits in rational number", offset + text.size());
    std::string s(text[0] == '+' ? text.substr(1) : text);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("invalid rational number", offset);
    if (q.get_den() == 0) throw ParseError("zero denominator", offset);
    q.canonicalize();
    return q;
}

}  // namespace sncsym
