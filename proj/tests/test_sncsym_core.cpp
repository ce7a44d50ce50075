#include "sncsym/sncsym.hpp"

#include <gtest/gtest.h>

using namespace sncsym;

namespace {

SymbolicElement el(const char* s) { return parse_element(s); }

std::vector<std::pair<int, int>> small_bidegrees(int max_nm) {
    std::vector<std::pair<int, int>> out;
    for (int n = 0; n <= max_nm; ++n)
        for (int m = 0; m <= n + 1 && n + m <= max_nm; ++m) out.emplace_back(n, m);
    return out;
}

}  // namespace

TEST(Element, TextAndJsonRoundTrip) {
    auto a = el("3/2*m[({0},{0,2},{1,3})] - m[({0,1},{0,2})]");
    EXPECT_EQ(to_string(a), "-m[({0,1},{0,2})] + 3/2*m[({0},{0,2},{1,3})]");
    EXPECT_EQ(parse_element(to_string(a)), a);
    EXPECT_EQ(element_from_json(to_json_value(a)), a);
    EXPECT_EQ(to_string(parse_element("0")), "0");
}

TEST(Element, NoncanonicalIndicesPickUpTheirSign) {
    EXPECT_EQ(el("m[({0,2},{0,1})]"), el("-m[({0,1},{0,2})]"));
    EXPECT_EQ(el("m[({0},{0},{1})]"), SymbolicElement(Basis::M));
}

TEST(Element, ParseErrors) {
    EXPECT_THROW(parse_element("m[({0},{0,1})] + p[({0},{1})]"), ParseError);
    EXPECT_THROW(parse_element("q[({0})]"), ParseError);
    EXPECT_THROW(parse_element("m[({0},{0,1})"), ParseError);
}

TEST(Transition, WorkedExpansionsOfOneMonomial) {
    auto m = el("m[({0},{0,1},{2})]");
    EXPECT_EQ(convert(m, Basis::P), el("p[({0},{0,1},{2})] - p[({0},{0,1,2})] + p[({0,1},{0,2})]"));
    EXPECT_EQ(convert(m, Basis::E),
              el("1/2*e[({0},{0,1},{2})] - 1/2*e[({0},{0,2},{1})] - 1/2*e[({0},{0,1,2})] + e[({0,1},{0,2})]"));
    EXPECT_EQ(convert(m, Basis::H),
              el("5/2*h[({0},{0,1},{2})] - 1/2*h[({0},{0,2},{1})] - 1/2*h[({0},{0,1,2})] + h[({0,1},{0,2})]"));
}

TEST(Transition, ElementaryAndHomogeneousDisplays) {
    EXPECT_EQ(convert(el("e[({0},{0,2},{1,3})]"), Basis::M),
              el("m[({0,1,2},{0,3})] - m[({0},{0,1,2},{3})] - m[({0,1},{0,2,3})] - m[({0},{0,2,3},{1})]"
                 " - m[({0},{0,2},{1},{3})] - m[({0,1},{0,2},{3})] + m[({0,2},{0,3},{1})]"));
    auto h = convert(el("h[({0},{0,2},{1,3})]"), Basis::M);
    EXPECT_EQ(h.terms().size(), 10u);
    EXPECT_EQ(h.coefficient(parse_set_superpartition("({0},{0,1,2,3})")), 2);
    EXPECT_EQ(h.coefficient(parse_set_superpartition("({0,1,2},{0,3})")), -1);
    EXPECT_EQ(h.coefficient(parse_set_superpartition("({0,1,3},{0,2})")), 2);
}

TEST(Transition, AgreesWithTheOracle) {
    for (auto [n, m] : small_bidegrees(4))
        for (const auto& i : enumerate_set_superpartitions(n, m))
            for (Basis b : {Basis::P, Basis::E, Basis::H}) {
                auto x = SymbolicElement::basis_element(b, i);
                ASSERT_EQ(expand(convert(x, Basis::M), n + m + 1), expand_basis(b, i, n + m + 1))
                    << basis_letter(b) << to_string(i);
            }
}

TEST(Transition, RoundTripsThroughEveryBasis) {
    for (auto [n, m] : small_bidegrees(4))
        for (const auto& i : enumerate_set_superpartitions(n, m))
            for (Basis from : {Basis::M, Basis::P, Basis::E, Basis::H})
                for (Basis via : {Basis::M, Basis::P, Basis::E, Basis::H}) {
                    auto x = SymbolicElement::basis_element(from, i);
                    ASSERT_EQ(convert(convert(x, via), from), x);
                }
}

TEST(Transition, HomogeneousIsANonnegativeSumOfPowerSums) {
    // h_I = Σ_{K⊑I} |μ(0̂,K)| p_K over partial set supercompositions; signs
    // appear only when K is rewritten as a canonical index
    for (auto [n, m] : small_bidegrees(5)) {
        for (const auto& i : enumerate_set_superpartitions(n, m)) {
            SymbolicElement expected(Basis::P);
            for (const auto& k : strong_downset(i)) expected.add(k, Rational(abs(mobius_zero(k))));
            ASSERT_EQ(convert(SymbolicElement::basis_element(Basis::H, i), Basis::P), expected) << to_string(i);
        }
    }
}

TEST(Transition, MatricesAreMutuallyInverse) {
    for (auto [n, m] : small_bidegrees(5))
        for (Basis b : {Basis::P, Basis::E, Basis::H}) {
            auto a = transition_matrix(n, m, Basis::M, b), c = transition_matrix(n, m, b, Basis::M);
            EXPECT_EQ(a * c, RationalMatrix::identity(a.rows()));
            EXPECT_EQ(a.inverse(), c);
        }
}

TEST(Product, SquareOfTheSimplestFermionicMonomial) {
    auto a = el("m[({0},{1})]");
    EXPECT_EQ(product(a, a), el("m[({0},{0,1},{2})] - m[({0},{0,2},{1})] - m[({0,1},{0,2})]"));
    EXPECT_NE(product(a, a), el("-m[({0,1},{0,2})]"));
}

TEST(Product, PowerSumsMultiplyByOverProduct) {
    EXPECT_EQ(product(el("p[({0,1})]"), el("p[({1})]")), el("p[({0,1},{2})]"));
}

TEST(Product, ShuffleSupportOfTheWorkedExample) {
    auto i = parse_set_superpartition("({0},{0,3},{1,2})"), j = parse_set_superpartition("({0,2},{1})");
    auto shuffles = shuffle_set(i, j);
    std::set<PartialSetSupercomposition> support(shuffles.begin(), shuffles.end());
    EXPECT_EQ(support.size(), 7u);
    EXPECT_EQ(shuffles.size(), 7u);
    EXPECT_TRUE(support.count(parse_composition("({0},{0,3},{0,5},{1,2},{4})")));
    EXPECT_TRUE(support.count(parse_composition("({0},{0,3,4},{0,1,2,5})")));
}

TEST(Product, MonomialProductMatchesOracle) {
    std::vector<SetSuperpartition> pool;
    for (auto [n, m] : small_bidegrees(3))
        for (auto& i : enumerate_set_superpartitions(n, m)) pool.push_back(i);
    for (const auto& i : pool)
        for (const auto& j : pool) {
            if (i.degree() + j.degree() > 3) continue;
            const int v = std::max(1, i.length() + j.length());
            auto sym = product(SymbolicElement::basis_element(Basis::M, i), SymbolicElement::basis_element(Basis::M, j));
            ASSERT_EQ(expand(sym, v), multiply(expand_monomial(i, v), expand_monomial(j, v)))
                << to_string(i) << " * " << to_string(j);
        }
}

TEST(Product, IsAssociative) {
    auto a = el("m[({0},{1})]"), b = el("m[({0,1})] + 2*m[({1})]"), c = el("m[({0})]");
    EXPECT_EQ(product(product(a, b), c), product(a, product(b, c)));
}

TEST(Omega, Involution) {
    for (auto [n, m] : small_bidegrees(4))
        for (const auto& i : enumerate_set_superpartitions(n, m))
            for (Basis b : {Basis::M, Basis::P, Basis::E, Basis::H}) {
                auto x = SymbolicElement::basis_element(b, i);
                ASSERT_EQ(omega(omega(x)), x);
            }
}

TEST(Omega, PowerSumSign) {
    EXPECT_EQ(omega(el("p[({0,1,2})]")), el("p[({0,1,2})]"));
    EXPECT_EQ(omega(el("p[({1,2})]")), el("-p[({1,2})]"));
}

TEST(Omega, SwapsElementaryAndHomogeneous) {
    auto e = el("e[({0},{0,2},{1,3})]"), h = el("h[({0},{0,2},{1,3})]");
    EXPECT_EQ(convert(omega(e), Basis::M), convert(h, Basis::M));
}

TEST(InnerProduct, MonomialHomogeneousPairing) {
    for (auto [n, m] : small_bidegrees(4)) {
        auto idx = enumerate_set_superpartitions(n, m);
        const Rational expected = Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m);
        for (const auto& i : idx)
            for (const auto& j : idx)
                ASSERT_EQ(inner_product(SymbolicElement::basis_element(Basis::M, i),
                                        SymbolicElement::basis_element(Basis::H, j)),
                          i == j ? expected : Rational(0));
    }
}

TEST(InnerProduct, HomogeneousFormulaAndSymmetry) {
    for (auto [n, m] : small_bidegrees(4)) {
        auto idx = enumerate_set_superpartitions(n, m);
        for (const auto& i : idx)
            for (const auto& j : idx) {
                Rational sum = 0;
                for (const auto& sigma : all_permutations(m))
                    sum += Rational(block_factorial(sigma_meet(i, sigma, j).blocks())) * sign_of_parity(inversions(sigma));
                sum *= Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m);
                auto hi = SymbolicElement::basis_element(Basis::H, i), hj = SymbolicElement::basis_element(Basis::H, j);
                ASSERT_EQ(inner_product(hi, hj), sum) << to_string(i) << " " << to_string(j);
                ASSERT_EQ(inner_product(hi, hj), inner_product(hj, hi));
            }
    }
}

TEST(InnerProduct, PowerSumsAreOrthogonal) {
    for (auto [n, m] : small_bidegrees(4)) {
        auto idx = enumerate_set_superpartitions(n, m);
        for (const auto& i : idx)
            for (const auto& j : idx) {
                Rational expected = 0;
                if (i == j) {
                    expected = Rational(factorial(static_cast<unsigned>(n))) * binom2_sign(m) /
                               Rational(abs(mobius_zero(i)));
                }
                ASSERT_EQ(inner_product(SymbolicElement::basis_element(Basis::P, i),
                                        SymbolicElement::basis_element(Basis::P, j)),
                          expected);
            }
    }
}
