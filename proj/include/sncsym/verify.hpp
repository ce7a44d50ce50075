#pragma once

// Identity suite. Each check compares a symbolic computation against an
// independent route (usually the brute-force oracle) over a bounded range,
// and records the first counterexample it meets.

#include "sncsym/algebra.hpp"
#include "sncsym/bridge.hpp"
#include "sncsym/enumerate.hpp"
#include "sncsym/oracle_expand.hpp"
#include "sncsym/schur.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace sncsym {

struct CheckResult {
    std::string id;
    int criterion = 0;
    std::string description;
    bool expected_to_hold = true;  ///< false for statements the suite is meant to refute
    bool holds = true;
    long cases = 0;
    std::string counterexample;
    double seconds = 0;

    bool passed() const { return holds == expected_to_hold; }
};

inline nlohmann::json to_json_value(const CheckResult& r) {
    nlohmann::json j{{"id", r.id},
                     {"criterion", r.criterion},
                     {"description", r.description},
                     {"expected", r.expected_to_hold ? "holds" : "refuted"},
                     {"holds", r.holds},
                     {"passed", r.passed()},
                     {"cases", r.cases},
                     {"seconds", r.seconds}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    return j;
}

/// Collects cases of one check; keeps the first failing case.
class CaseLog {
public:
    explicit CaseLog(CheckResult& r) : r_(r) {}

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (!ok && r_.holds) {
            r_.holds = false;
            r_.counterexample = describe();
        }
    }

private:
    CheckResult& r_;
};

struct Check {
    std::string id;
    int criterion;
    std::string description;
    bool expected_to_hold;
    std::function<void(int max_degree, CaseLog&)> body;
};

namespace detail {

/// All bidegrees (n,m) with n+m ≤ bound.
inline std::vector<std::pair<int, int>> bidegrees_up_to(int bound) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= bound; ++n)
        for (int m = 0; n + m <= bound; ++m) out.emplace_back(n, m);
    return out;
}

/// Every superpartition of degree ≤ bound.
inline std::vector<Superpartition> superpartitions_up_to(int bound) {
    std::vector<Superpartition> out;
    for (int n = 0; n <= bound; ++n)
        for (int m = 0; m <= n + 1; ++m)
            for (auto& s : enumerate_superpartitions(n, m)) out.push_back(std::move(s));
    return out;
}

/// Bell numbers from the Bell triangle.
inline std::vector<Integer> bell_numbers(int count) {
    std::vector<Integer> bell{1};
    std::vector<Integer> row{1};
    while (static_cast<int>(bell.size()) < count) {
        std::vector<Integer> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        row = next;
        bell.push_back(row.front());
    }
    bell.resize(static_cast<std::size_t>(count));
    return bell;
}

/// Σ_k 2^k S(n,k), with S from the Stirling recurrence.
inline Integer two_coloured_partitions(int n) {
    std::vector<std::vector<Integer>> s(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                k * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] +
                s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
    Integer total = 0, pow = 1;
    for (int k = 0; k <= n; ++k, pow *= 2) total += pow * s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    return total;
}

/// μ(K,L) straight from the recursion μ(K,K)=1, μ(K,L) = -Σ_{K⊑N⊏L} μ(K,N).
class RecursiveMobius {
public:
    explicit RecursiveMobius(std::vector<PartialSetSupercomposition> elements) : elements_(std::move(elements)) {}

    Integer operator()(const PartialSetSupercomposition& k, const PartialSetSupercomposition& l) {
        if (!is_strongly_coarser(k, l)) return 0;
        if (k == l) return 1;
        auto key = std::make_pair(k, l);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Integer total = 0;
        for (const auto& n : elements_)
            if (!(n == l) && is_strongly_coarser(k, n) && is_strongly_coarser(n, l)) total -= (*this)(k, n);
        memo_.emplace(key, total);
        return total;
    }

private:
    std::vector<PartialSetSupercomposition> elements_;
    std::map<std::pair<PartialSetSupercomposition, PartialSetSupercomposition>, Integer> memo_;
};

/// Memoized oracle expansion of basis functions.
class ExpansionCache {
public:
    const OraclePolynomial& get(Basis b, const PartialSetSupercomposition& k, int num_vars) {
        auto key = std::make_tuple(b, k, num_vars);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, expand_basis(b, k, num_vars)).first;
        return it->second;
    }

private:
    std::map<std::tuple<Basis, PartialSetSupercomposition, int>, OraclePolynomial> cache_;
};

inline std::string show(const SymbolicElement& e) { return to_string(e); }
inline std::string show(const SSymElement& e) { return to_string(e); }

inline SymbolicElement basis_of_canonical(Basis b, const PartialSetSupercomposition& k) {
    SymbolicElement out(b);
    out.add(k, 1);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The checks.

inline std::vector<Check> identity_checks() {
    using detail::bidegrees_up_to;
    using detail::superpartitions_up_to;
    std::vector<Check> checks;
    auto add = [&](std::string id, int criterion, std::string description, std::function<void(int, CaseLog&)> body,
                   bool expected = true) {
        checks.push_back(Check{std::move(id), criterion, std::move(description), expected, std::move(body)});
    };

    // -- counting ----------------------------------------------------------
    add("bell-numbers", 1, "set partitions of [n] are counted by the Bell numbers", [](int d, CaseLog& log) {
        auto bell = detail::bell_numbers(d + 2);
        for (int n = 0; n <= d + 1; ++n) {
            auto count = enumerate_set_partitions(n).size();
            log.expect(Integer(static_cast<unsigned long>(count)) == bell[static_cast<std::size_t>(n)],
                       [&] { return "n=" + std::to_string(n) + " gives " + std::to_string(count); });
        }
    });
    add("set-superpartition-counts", 1,
        "set superpartitions of degree n number twice the 2-coloured set partitions, and equal the canonical "
        "elements of all partial set supercompositions",
        [](int d, CaseLog& log) {
            for (int n = 0; n <= d + 1; ++n) {
                std::size_t generated = 0, filtered = 0;
                for (int m = 0; m <= n + 1; ++m) {
                    auto sp = enumerate_set_superpartitions(n, m);
                    generated += sp.size();
                    std::set<PartialSetSupercomposition> distinct(sp.begin(), sp.end());
                    log.expect(distinct.size() == sp.size(), [&] { return "duplicates at (" + std::to_string(n) + "," + std::to_string(m) + ")"; });
                    for (const auto& k : enumerate_psc(n, m))
                        if (k.zero_block_count() <= 1 && SetSuperpartition::satisfies_order(k)) ++filtered;
                }
                Integer expected = 2 * detail::two_coloured_partitions(n);
                log.expect(Integer(static_cast<unsigned long>(generated)) == expected && generated == filtered, [&] {
                    return "n=" + std::to_string(n) + ": generated " + std::to_string(generated) + ", filtered " +
                           std::to_string(filtered) + ", expected " + expected.get_str();
                });
            }
        });
    add("super-binomial", 1, "set superpartitions of type Λ number n!/(Λ! (Λ^s)^!)", [](int d, CaseLog& log) {
        for (const auto& s : superpartitions_up_to(d + 1)) {
            auto count = set_superpartitions_of_type(s).size();
            log.expect(Integer(static_cast<unsigned long>(count)) == super_binomial(s),
                       [&] { return to_string(s) + ": " + std::to_string(count); });
        }
    });

    // -- Möbius ------------------------------------------------------------
    add("mobius-closed-form", 2, "closed-form μ(K,L) equals the recursive definition on every pair of sC_{n,m}",
        [](int d, CaseLog& log) {
            for (auto [n, m] : bidegrees_up_to(d + 1)) {
                auto all = enumerate_psc(n, m);
                detail::RecursiveMobius rec(all);
                for (const auto& k : all)
                    for (const auto& l : all)
                        log.expect(mobius(k, l) == rec(k, l), [&] { return to_string(k) + " , " + to_string(l); });
            }
        });
    add("mobius-zero-sum", 2, "Σ_{K⊑L} |μ(0̂,K)| = L! for every L", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            auto all = enumerate_psc(n, m);
            auto zero = PartialSetSupercomposition::zero(n, m);
            for (const auto& l : all) {
                Integer total = 0;
                for (const auto& k : all)
                    if (is_strongly_coarser(k, l)) total += abs(mobius(zero, k));
                log.expect(total == block_factorial(l.blocks()), [&] { return to_string(l); });
            }
        }
    });
    add("mobius-chain-example", 2, "μ(0̂_{2,2}, ({0},{0,1,2})) = 2 from its four chains", [](int, CaseLog& log) {
        auto zero = PartialSetSupercomposition::zero(2, 2);
        auto top = parse_composition("({0},{0,1,2})");
        auto all = chains(zero, top);
        Integer hall = 0;
        for (const auto& c : all) hall += sign_of_parity(static_cast<long>(c.size()) - 1);
        log.expect(all.size() == 4 && hall == 2 && mobius(zero, top) == 2,
                   [&] { return std::to_string(all.size()) + " chains, value " + hall.get_str(); });
    });

    // -- oracle against symbolic -------------------------------------------
    add("oracle-power-sum", 3, "p_I = Σ_{L⊒I} m_L as polynomials in n+m+1 variables", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            const int num_vars = n + m + 1;
            for (const auto& i : enumerate_set_superpartitions(n, m)) {
                OraclePolynomial rhs(num_vars);
                for (const auto& l : strong_upset(i)) rhs += expand_monomial(l, num_vars);
                OraclePolynomial lhs = expand_power_sum(i, num_vars);
                log.expect(lhs == rhs && lhs == expand(to_monomial(Basis::P, i), num_vars),
                           [&] { return "p" + to_string(i); });
            }
        }
    });
    add("oracle-elementary", 3, "e_K = Σ_{K⊓L=0̂} m_L as polynomials in n+m+1 variables", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            const int num_vars = n + m + 1;
            auto all = enumerate_psc(n, m);
            auto zero = PartialSetSupercomposition::zero(n, m);
            detail::ExpansionCache cache;
            for (const auto& i : enumerate_set_superpartitions(n, m)) {
                OraclePolynomial rhs(num_vars);
                for (const auto& l : all)
                    if (meet(i, l) == zero) rhs += cache.get(Basis::M, l, num_vars);
                OraclePolynomial lhs = expand_elementary(i, num_vars);
                log.expect(lhs == rhs && lhs == expand(to_monomial(Basis::E, i), num_vars),
                           [&] { return "e" + to_string(i); });
            }
        }
    });
    add("oracle-homogeneous", 3, "h_K = Σ_L (K⊓L)! m_L as polynomials in n+m+1 variables", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            const int num_vars = n + m + 1;
            auto all = enumerate_psc(n, m);
            detail::ExpansionCache cache;
            for (const auto& i : enumerate_set_superpartitions(n, m)) {
                OraclePolynomial rhs(num_vars);
                for (const auto& l : all)
                    rhs += cache.get(Basis::M, l, num_vars) * Rational(block_factorial(meet(i, l).blocks()));
                OraclePolynomial lhs = expand_homogeneous(i, num_vars);
                log.expect(lhs == rhs && lhs == expand(to_monomial(Basis::H, i), num_vars),
                           [&] { return "h" + to_string(i); });
            }
        }
    });

    // -- transitions -------------------------------------------------------
    add("transition-inverse", 4, "the m↔p, m↔e and m↔h transition matrices are mutually inverse",
        [](int d, CaseLog& log) {
            for (auto [n, m] : bidegrees_up_to(d + 1)) {
                if (m > n + 1) continue;
                const auto size = enumerate_set_superpartitions(n, m).size();
                for (Basis b : {Basis::P, Basis::E, Basis::H}) {
                    auto to = transition_matrix(n, m, Basis::M, b), back = transition_matrix(n, m, b, Basis::M);
                    auto id = RationalMatrix::identity(size);
                    log.expect(to * back == id && back * to == id, [&] {
                        return std::string("m<->") + basis_letter(b) + " at (" + std::to_string(n) + "," +
                               std::to_string(m) + ")";
                    });
                }
            }
        });
    add("transition-routes", 4, "direct p/e/h conversions agree with the route through m", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1))
            for (const auto& i : enumerate_set_superpartitions(n, m))
                for (Basis from : {Basis::P, Basis::E, Basis::H})
                    for (Basis to : {Basis::P, Basis::E, Basis::H}) {
                        if (from == to) continue;
                        auto el = SymbolicElement::basis_element(from, i);
                        log.expect(convert(el, to) == convert_via_monomial(el, to), [&] {
                            return std::string(1, basis_letter(from)) + to_string(i) + " -> " + basis_letter(to);
                        });
                    }
    });
    add("worked-expansions", 4,
        "m_({0},{0,1},{2}) in p, e, h and e_I, h_I for I=({0},{0,2},{1,3}) match the worked examples",
        [](int, CaseLog& log) {
            auto mi = parse_element("m[({0},{0,1},{2})]");
            const std::vector<std::pair<Basis, std::string>> m_cases{
                {Basis::P, "p[({0},{0,1},{2})] - p[({0},{0,1,2})] + p[({0,1},{0,2})]"},
                {Basis::E, "1/2*e[({0},{0,1},{2})] - 1/2*e[({0},{0,2},{1})] - 1/2*e[({0},{0,1,2})] + e[({0,1},{0,2})]"},
                {Basis::H, "5/2*h[({0},{0,1},{2})] - 1/2*h[({0},{0,2},{1})] - 1/2*h[({0},{0,1,2})] + h[({0,1},{0,2})]"}};
            for (const auto& [b, text] : m_cases) {
                auto got = convert(mi, b);
                log.expect(got == parse_element(text), [&] { return detail::show(got); });
            }
            const std::string e_text =
                "m[({0,1,2},{0,3})] - m[({0},{0,1,2},{3})] - m[({0,1},{0,2,3})] - m[({0},{0,2,3},{1})]"
                " - m[({0},{0,2},{1},{3})] - m[({0,1},{0,2},{3})] + m[({0,2},{0,3},{1})]";
            const std::string h_text =
                "2*m[({0},{0,1,2,3})] - m[({0,1,2},{0,3})] + 2*m[({0,1,3},{0,2})] + m[({0,1},{0,2,3})]"
                " + m[({0},{0,1,2},{3})] + m[({0},{0,2,3},{1})] + 2*m[({0},{0,2},{1,3})] + m[({0},{0,2},{1},{3})]"
                " + m[({0,1},{0,2},{3})] - m[({0,2},{0,3},{1})]";
            auto e = convert(parse_element("e[({0},{0,2},{1,3})]"), Basis::M);
            auto h = convert(parse_element("h[({0},{0,2},{1,3})]"), Basis::M);
            log.expect(e == parse_element(e_text), [&] { return detail::show(e); });
            log.expect(h == parse_element(h_text), [&] { return detail::show(h); });
        });

    // -- products ----------------------------------------------------------
    add("shuffle-vs-oracle", 5, "m_I·m_J from the shuffle set equals the oracle product", [](int d, CaseLog& log) {
        std::vector<SetSuperpartition> pool;
        for (int n = 0; n <= d; ++n)
            for (int m = 0; m <= n + 1; ++m)
                for (auto& i : enumerate_set_superpartitions(n, m)) pool.push_back(std::move(i));
        detail::ExpansionCache cache;
        for (const auto& i : pool)
            for (const auto& j : pool) {
                if (i.degree() + j.degree() > d) continue;
                const int num_vars = std::max(1, i.length() + j.length());
                auto sym = product(SymbolicElement::basis_element(Basis::M, i), SymbolicElement::basis_element(Basis::M, j));
                auto concrete = multiply(cache.get(Basis::M, i, num_vars), cache.get(Basis::M, j, num_vars));
                log.expect(expand(sym, num_vars) == concrete, [&] { return to_string(i) + " * " + to_string(j); });
            }
    });
    add("multiplicativity", 5, "p_I p_J = p_{I/J}, e_I e_J = e_{I/J}, h_I h_J = h_{I/J}, symbolically and in the oracle",
        [](int d, CaseLog& log) {
            std::vector<SetSuperpartition> pool;
            for (int n = 0; n <= d; ++n)
                for (int m = 0; m <= std::min(n + 1, 2); ++m)
                    for (auto& i : enumerate_set_superpartitions(n, m)) pool.push_back(std::move(i));
            detail::ExpansionCache cache;
            for (const auto& i : pool)
                for (const auto& j : pool) {
                    if (i.degree() + j.degree() > d || i.fermionic_degree() + j.fermionic_degree() > 2) continue;
                    const int num_vars = std::max(1, std::min(4, i.degree() + j.degree() + i.fermionic_degree() + j.fermionic_degree()));
                    auto over = over_product(i, j);
                    for (Basis b : {Basis::P, Basis::E, Basis::H}) {
                        auto sym = product(SymbolicElement::basis_element(b, i), SymbolicElement::basis_element(b, j));
                        auto expected = detail::basis_of_canonical(b, over);
                        auto concrete = multiply(cache.get(b, i, num_vars), cache.get(b, j, num_vars));
                        log.expect(sym == expected && concrete == expand_basis(b, over, num_vars), [&] {
                            return std::string(1, basis_letter(b)) + to_string(i) + " * " + to_string(j);
                        });
                    }
                }
        });
    add("shuffle-example", 5,
        "I⧢J for I=({0},{0,3},{1,2}), J=({0,2},{1}) has the displayed support; the oracle gives every term "
        "multiplicity one",
        [](int, CaseLog& log) {
            auto i = parse_set_superpartition("({0},{0,3},{1,2})");
            auto j = parse_set_superpartition("({0,2},{1})");
            std::set<PartialSetSupercomposition> displayed;
            for (const char* t : {"({0},{0,3},{0,5},{1,2},{4})", "({0,4},{0,3},{0,5},{1,2})",
                                  "({0},{0,3,4},{0,5},{1,2})", "({0},{0,3},{0,1,2,5},{4})",
                                  "({0},{0,3},{0,5},{1,2,4})", "({0,4},{0,3},{0,1,2,5})",
                                  "({0},{0,3,4},{0,1,2,5})"})
                displayed.insert(parse_composition(t));
            auto shuffles = shuffle_set(i, j);
            std::map<PartialSetSupercomposition, int> multiplicity;
            for (const auto& k : shuffles) ++multiplicity[k];
            std::set<PartialSetSupercomposition> support;
            for (const auto& [k, c] : multiplicity) support.insert(k);
            log.expect(support == displayed, [&] { return std::to_string(support.size()) + " distinct shuffles"; });
            const int num_vars = i.length() + j.length();
            auto concrete = decompose_monomial(multiply(expand_monomial(i, num_vars), expand_monomial(j, num_vars)));
            SymbolicElement from_shuffles(Basis::M);
            for (const auto& [k, c] : multiplicity) {
                from_shuffles.add(k, c);
                log.expect(c == 1, [&] { return to_string(k) + " appears " + std::to_string(c) + " times"; });
            }
            log.expect(concrete == from_shuffles, [&] { return detail::show(concrete); });
        });
    add("square-example-as-stated", 5,
        "m_({0},{1})·m_({0},{1}) = -m_({0,1},{0,2}); refuted by the oracle, which also produces "
        "m_({0},{0,1},{2}) - m_({0},{0,2},{1})",
        [](int, CaseLog& log) {
            auto a = parse_element("m[({0},{1})]");
            auto got = product(a, a);
            log.expect(got == parse_element("-m[({0,1},{0,2})]"), [&] { return detail::show(got); });
        },
        false);
    add("square-example", 5,
        "m_({0},{1})·m_({0},{1}) = m_({0},{0,1},{2}) - m_({0},{0,2},{1}) - m_({0,1},{0,2}), symbolically and in the oracle",
        [](int, CaseLog& log) {
            auto a = parse_element("m[({0},{1})]");
            auto expected = parse_element("m[({0},{0,1},{2})] - m[({0},{0,2},{1})] - m[({0,1},{0,2})]");
            auto got = product(a, a);
            auto concrete = decompose_monomial(multiply(expand(a, 4), expand(a, 4)));
            log.expect(got == expected && concrete == expected, [&] { return detail::show(got); });
        });

    // -- ω -----------------------------------------------------------------
    add("omega-involution", 6, "ω² = id on every basis element", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1))
            for (const auto& i : enumerate_set_superpartitions(n, m))
                for (Basis b : {Basis::M, Basis::P, Basis::E, Basis::H}) {
                    auto el = SymbolicElement::basis_element(b, i);
                    log.expect(omega(omega(el)) == el, [&] { return std::string(1, basis_letter(b)) + to_string(i); });
                }
    });
    add("omega-power-sum", 6, "ω(p_I) = (-1)^I p_I", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1))
            for (const auto& i : enumerate_set_superpartitions(n, m)) {
                auto p = SymbolicElement::basis_element(Basis::P, i);
                log.expect(omega(p) == p * Rational(sign(i)), [&] { return "p" + to_string(i); });
            }
    });
    add("omega-multiplicative", 6, "ω(m_I m_J) = ω(m_I) ω(m_J)", [](int d, CaseLog& log) {
        std::vector<SetSuperpartition> pool;
        for (int n = 0; n <= std::min(d, 3); ++n)
            for (int m = 0; m <= n + 1; ++m)
                for (auto& i : enumerate_set_superpartitions(n, m)) pool.push_back(std::move(i));
        for (const auto& i : pool)
            for (const auto& j : pool) {
                if (i.degree() + j.degree() > std::min(d, 3)) continue;
                auto f = SymbolicElement::basis_element(Basis::M, i), g = SymbolicElement::basis_element(Basis::M, j);
                log.expect(convert(omega(product(f, g)), Basis::M) == convert(product(omega(f), omega(g)), Basis::M),
                           [&] { return to_string(i) + " * " + to_string(j); });
            }
    });

    // -- projection and lifting --------------------------------------------
    add("rho-two-path", 7, "ρ on m, p, e, h agrees with commuting the oracle expansion", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            const int num_vars = n + m + 1;
            for (const auto& i : enumerate_set_superpartitions(n, m))
                for (Basis b : {Basis::M, Basis::P, Basis::E, Basis::H})
                    log.expect(rho_concrete(expand_basis(b, i, num_vars)) == expand_ssym(rho_basis(b, i), num_vars),
                               [&] { return std::string(1, basis_letter(b)) + to_string(i); });
        }
    });
    add("rho-multiplicative", 7, "ρ(f·g) = ρ(f)ρ(g) on p and h basis elements", [](int d, CaseLog& log) {
        std::vector<SetSuperpartition> pool;
        for (int n = 0; n <= std::min(d, 3); ++n)
            for (int m = 0; m <= n + 1; ++m)
                for (auto& i : enumerate_set_superpartitions(n, m)) pool.push_back(std::move(i));
        for (const auto& i : pool)
            for (const auto& j : pool) {
                if (i.degree() + j.degree() > std::min(d, 3)) continue;
                for (Basis b : {Basis::P, Basis::H}) {
                    auto f = SymbolicElement::basis_element(b, i), g = SymbolicElement::basis_element(b, j);
                    log.expect(convert(rho(product(f, g)), SSymBasis::M) == convert(product(rho(f), rho(g)), SSymBasis::M),
                               [&] { return std::string(1, basis_letter(b)) + to_string(i) + " * " + to_string(j); });
                }
            }
    });
    add("rho-lift-identity", 7, "ρ(ρ̃(m_Λ)) = m_Λ", [](int d, CaseLog& log) {
        for (const auto& s : superpartitions_up_to(d + 1)) {
            auto m = SSymElement::basis_element(SSymBasis::M, s);
            log.expect(rho(lift(m)) == m, [&] { return to_string(s); });
        }
    });
    add("lift-isometry", 7, "⟨ρ̃f, ρ̃g⟩ = ⟨f,g⟩ for f,g in the m and h bases of sSym", [](int d, CaseLog& log) {
        for (int n = 0; n <= d; ++n)
            for (int m = 0; m <= n + 1; ++m) {
                auto idx = enumerate_superpartitions(n, m);
                for (const auto& a : idx)
                    for (const auto& b : idx)
                        for (SSymBasis x : {SSymBasis::M, SSymBasis::H})
                            for (SSymBasis y : {SSymBasis::M, SSymBasis::H}) {
                                auto f = SSymElement::basis_element(x, a), g = SSymElement::basis_element(y, b);
                                log.expect(inner_product(lift(f), lift(g)) == inner_product(f, g), [&] {
                                    return ssym_basis_name(x) + to_string(a) + ", " + ssym_basis_name(y) + to_string(b);
                                });
                            }
            }
    });
    add("lift-big-h-p", 7, "ρ̃(h_Λ) = (Λ^s)^!/n! H_Λ, ρ̃(p_Λ) = binom(n,Λ)^{-1} P_Λ, ρ(H_Λ) = n!/(Λ^s)^! h_Λ",
        [](int d, CaseLog& log) {
            for (const auto& s : superpartitions_up_to(d)) {
                const Rational nf(factorial(static_cast<unsigned>(s.degree())));
                const Rational sym_mult(multiplicity_factorial(s.sym()));
                auto h = SSymElement::basis_element(SSymBasis::H, s), p = SSymElement::basis_element(SSymBasis::P, s);
                Rational h_scale = sym_mult / nf, p_scale = 1 / Rational(super_binomial(s));
                log.expect(lift(h) == convert(big_h(s), Basis::M) * h_scale, [&] { return "h" + to_string(s); });
                log.expect(lift(p) == convert(big_p(s), Basis::M) * p_scale, [&] { return "p" + to_string(s); });
                Rational back = nf / sym_mult;
                log.expect(rho(big_h(s)) == h * back, [&] { return "H" + to_string(s); });
            }
        });
    add("omega-hat", 7, "ω̂² = id and ω∘ρ̃ = ρ̃∘ω̂ on p_Λ", [](int d, CaseLog& log) {
        for (const auto& s : superpartitions_up_to(d)) {
            auto p = SSymElement::basis_element(SSymBasis::P, s);
            log.expect(omega_hat(omega_hat(p)) == p, [&] { return "involution at " + to_string(s); });
            log.expect(convert(omega(lift(p)), Basis::M) == lift(omega_hat(p)), [&] { return "lift at " + to_string(s); });
        }
    });

    // -- inner products ----------------------------------------------------
    add("mh-pairing", 8, "⟨m_I, h_J⟩ = (-1)^{C(m,2)} n! δ_{I,J}", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            auto idx = enumerate_set_superpartitions(n, m);
            const Rational unit = Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m);
            for (const auto& i : idx)
                for (const auto& j : idx) {
                    Rational v = inner_product(SymbolicElement::basis_element(Basis::M, i), SymbolicElement::basis_element(Basis::H, j));
                    log.expect(v == (i == j ? unit : Rational(0)), [&] { return to_string(i) + ", " + to_string(j); });
                }
        }
    });
    add("hh-formula", 8,
        "⟨h_I,h_J⟩ = (-1)^{C(m,2)} n! Σ_σ (I∧_σJ)! (-1)^{inv σ}, symmetric in I,J, and read off the oracle",
        [](int d, CaseLog& log) {
            for (auto [n, m] : bidegrees_up_to(d + 1)) {
                auto idx = enumerate_set_superpartitions(n, m);
                const Rational unit = Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m);
                const int num_vars = n + m + 1;
                for (const auto& i : idx) {
                    auto hi = SymbolicElement::basis_element(Basis::H, i);
                    auto concrete = decompose_monomial(expand_homogeneous(i, num_vars));
                    for (const auto& j : idx) {
                        Integer sum = 0;
                        for (const auto& sigma : all_permutations(m))
                            sum += block_factorial(sigma_meet(i, sigma, j).blocks()) * sign_of_parity(inversions(std::span<const int>(sigma)));
                        auto hj = SymbolicElement::basis_element(Basis::H, j);
                        Rational v = inner_product(hi, hj);
                        log.expect(v == unit * Rational(sum) && v == inner_product(hj, hi) &&
                                       v == unit * concrete.coefficient(j),
                                   [&] { return to_string(i) + ", " + to_string(j); });
                    }
                }
            }
        });
    add("p-orthogonality", 8, "⟨p_I,p_J⟩ = (-1)^{C(m,2)} n!/|μ(0̂,I)| δ_{I,J}", [](int d, CaseLog& log) {
        for (auto [n, m] : bidegrees_up_to(d + 1)) {
            auto idx = enumerate_set_superpartitions(n, m);
            const Rational unit = Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m);
            for (const auto& i : idx)
                for (const auto& j : idx) {
                    Rational v = inner_product(SymbolicElement::basis_element(Basis::P, i), SymbolicElement::basis_element(Basis::P, j));
                    Rational expected = i == j ? unit / Rational(abs(mobius_zero(i))) : Rational(0);
                    log.expect(v == expected, [&] { return to_string(i) + ", " + to_string(j); });
                }
        }
    });

    // -- Schur functions ---------------------------------------------------
    add("schur-display", 9, "S_(2,1;) = 2(m_({0,1,2},{0,3}) + m_({0,1,3},{0,2}) - m_({0,1},{0,2,3})), positive over "
                            "partial set supercompositions",
        [](int, CaseLog& log) {
            auto s = schur(parse_superpartition("(2,1;)"), TableauKind::First);
            log.expect(s == parse_element("2*m[({0,1,2},{0,3})] + 2*m[({0,1,3},{0,2})] - 2*m[({0,1},{0,2,3})]"),
                       [&] { return detail::show(s); });
            std::map<PartialSetSupercomposition, Rational> positive{
                {parse_composition("({0,1,2},{0,3})"), 2},
                {parse_composition("({0,1,3},{0,2})"), 2},
                {parse_composition("({0,2,3},{0,1})"), 2}};
            log.expect(positive_form(s) == positive, [&] { return positive_form_to_string(s); });
        });
    add("schur-elementary", 9, "S_(0;1^n) = e_({0,1,...,n})", [](int d, CaseLog& log) {
        for (int n = 0; n <= d; ++n) {
            auto s = schur(Superpartition({0}, std::vector<int>(static_cast<std::size_t>(n), 1)), TableauKind::First);
            auto e = SymbolicElement::basis_element(Basis::E, SetSuperpartition({Block::interval(0, n)}));
            log.expect(s == convert(e, Basis::M), [&] { return "n=" + std::to_string(n); });
        }
    });
    add("schur-bar-homogeneous-as-stated", 9,
        "ω(S̄_(n;)) = n! h_({0,1,...,n}); refuted for n ≥ 1 by the duality of S and S̄ together with S_(1;) = m_({0,1})",
        [](int d, CaseLog& log) {
            for (int n = 0; n <= std::min(d, 3); ++n) {
                auto sbar = schur(Superpartition({n}, {}), TableauKind::Second);
                auto h = SymbolicElement::basis_element(Basis::H, SetSuperpartition({Block::interval(0, n)}));
                auto got = convert(omega(sbar), Basis::H);
                log.expect(got == h * Rational(factorial(static_cast<unsigned>(n))),
                           [&] { return "n=" + std::to_string(n) + ": " + detail::show(got); });
            }
        },
        false);
    add("schur-bar-homogeneous", 9, "ω(S̄_(0;1^n)) = h_({0,1,...,n})", [](int d, CaseLog& log) {
        for (int n = 0; n <= d; ++n) {
            auto sbar = schur(Superpartition({0}, std::vector<int>(static_cast<std::size_t>(n), 1)), TableauKind::Second);
            auto h = SymbolicElement::basis_element(Basis::H, SetSuperpartition({Block::interval(0, n)}));
            log.expect(convert(omega(sbar), Basis::H) == h, [&] { return "n=" + std::to_string(n); });
        }
    });
    add("schur-symmetry-two-path", 9,
        "the tableau sums defining S_Λ and S̄_Λ are symmetric in deg+df+1 variables and equal the Kostka expansion",
        [](int d, CaseLog& log) {
            for (const auto& s : superpartitions_up_to(d))
                for (TableauKind kind : {TableauKind::First, TableauKind::Second}) {
                    auto direct = schur_direct(s, kind, s.degree() + s.fermionic_degree() + 1);
                    const bool sym = is_symmetric(direct);
                    log.expect(sym && decompose_monomial(direct) == schur(s, kind), [&] {
                        return std::string(kind == TableauKind::First ? "S" : "Sbar") + to_string(s) +
                               (sym ? " differs from the Kostka expansion" : " is not symmetric");
                    });
                }
        });
    add("schur-pairing-example", 9, "⟨S_(0;1), S_(1;)⟩ = -1 and ⟨s_(1;), s_(0;1)⟩ = -1", [](int, CaseLog& log) {
        auto a = parse_superpartition("(0;1)"), b = parse_superpartition("(1;)");
        Rational v = inner_product(schur(a, TableauKind::First), schur(b, TableauKind::First));
        log.expect(v == -1, [&] { return "sNCSym value " + to_string(v); });
        auto sa = schur_ssym(a, TableauKind::First), sb = schur_ssym(b, TableauKind::First);
        log.expect(inner_product(sb, sa) == -1, [&] { return "sSym value"; });
        log.expect(convert(sa, SSymBasis::H) == parse_ssym_element("2*h[(0;1)] - h[(1;)]") &&
                       sb == parse_ssym_element("m[(1;)]"),
                   [&] { return detail::show(convert(sa, SSymBasis::H)); });
    });
    add("schur-projection", 9, "ρ(S_Λ) = n! s_Λ, ρ(S̄_Λ) = n! s̄_Λ, ρ̃(n! s_Λ) = S_Λ, ⟨S_Λ,S_Ω⟩ = n!²⟨s_Λ,s_Ω⟩",
        [](int d, CaseLog& log) {
            for (int n = 0; n <= d; ++n)
                for (int m = 0; m <= n + 1; ++m) {
                    auto idx = enumerate_superpartitions(n, m);
                    const Rational nf(factorial(static_cast<unsigned>(n)));
                    std::vector<SymbolicElement> big;
                    std::vector<SSymElement> small;
                    for (const auto& s : idx) {
                        for (TableauKind kind : {TableauKind::First, TableauKind::Second}) {
                            auto S = schur(s, kind);
                            auto sm = schur_ssym(s, kind);
                            log.expect(rho(S) == sm * nf, [&] { return "rho at " + to_string(s); });
                            log.expect(lift(sm * nf) == S, [&] { return "lift at " + to_string(s); });
                        }
                        big.push_back(schur(s, TableauKind::First));
                        small.push_back(schur_ssym(s, TableauKind::First));
                    }
                    for (std::size_t a = 0; a < idx.size(); ++a)
                        for (std::size_t b = 0; b < idx.size(); ++b)
                            log.expect(inner_product(big[a], big[b]) == nf * nf * inner_product(small[a], small[b]),
                                       [&] { return "pairing " + to_string(idx[a]) + ", " + to_string(idx[b]); });
                }
        });
    add("schur-duality", 9, "⟨ω(S̄_Λ'), S_Ω⟩ = ⟨ω(S_Λ'), S̄_Ω⟩ = n!² (-1)^{C(m,2)} δ_{Λ,Ω}", [](int d, CaseLog& log) {
        for (int n = 0; n <= d; ++n)
            for (int m = 0; m <= n + 1; ++m) {
                auto idx = enumerate_superpartitions(n, m);
                std::vector<SymbolicElement> s, sbar, omega_s_conj, omega_sbar_conj;
                for (const auto& l : idx) {
                    s.push_back(schur(l, TableauKind::First));
                    sbar.push_back(schur(l, TableauKind::Second));
                    omega_s_conj.push_back(omega(schur(conjugate(l), TableauKind::First)));
                    omega_sbar_conj.push_back(omega(schur(conjugate(l), TableauKind::Second)));
                }
                for (std::size_t a = 0; a < idx.size(); ++a)
                    for (std::size_t b = 0; b < idx.size(); ++b) {
                        Rational expected = expected_duality(idx[a], idx[b]);
                        log.expect(inner_product(omega_sbar_conj[a], s[b]) == expected &&
                                       inner_product(omega_s_conj[a], sbar[b]) == expected,
                                   [&] { return to_string(idx[a]) + ", " + to_string(idx[b]); });
                    }
            }
    });
    return checks;
}

inline CheckResult run_check(const Check& c, int max_degree) {
    CheckResult r;
    r.id = c.id;
    r.criterion = c.criterion;
    r.description = c.description;
    r.expected_to_hold = c.expected_to_hold;
    CaseLog log(r);
    const auto start = std::chrono::steady_clock::now();
    try {
        c.body(max_degree, log);
    } catch (const std::exception& e) {
        r.holds = false;
        r.counterexample = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs every check; `on_result` sees each result as soon as it is ready.
inline std::vector<CheckResult> run_identity_suite(int max_degree,
                                                   const std::function<void(const CheckResult&)>& on_result = {}) {
    std::vector<CheckResult> out;
    for (const auto& c : identity_checks()) {
        out.push_back(run_check(c, max_degree));
        if (on_result) on_result(out.back());
    }
    return out;
}

inline nlohmann::json suite_report(int max_degree, const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        checks.push_back(to_json_value(r));
        all = all && r.passed();
    }
    return nlohmann::json{{"max_degree", max_degree}, {"passed", all}, {"checks", checks}};
}

}  // namespace sncsym
