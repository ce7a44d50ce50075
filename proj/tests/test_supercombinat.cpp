#include "sncsym/sncsym.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace sncsym;

namespace {

/// Set partitions of [n] by inserting n into an existing block or a new one.
std::set<std::set<std::set<int>>> brute_set_partitions(int n) {
    std::set<std::set<std::set<int>>> out;
    std::vector<std::set<int>> blocks;
    std::function<void(int)> rec = [&](int e) {
        if (e > n) {
            out.insert(std::set<std::set<int>>(blocks.begin(), blocks.end()));
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i].insert(e);
            rec(e + 1);
            blocks[i].erase(e);
        }
        blocks.push_back({e});
        rec(e + 1);
        blocks.pop_back();
    };
    rec(1);
    return out;
}

/// Stirling numbers of the second kind by the usual recurrence.
Integer stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n == 0 || k == 0) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

PartialSetSupercomposition psc(const char* s) { return parse_composition(s); }

}  // namespace

TEST(Block, IntervalAndAccessors) {
    Block b = Block::interval(0, 3);
    EXPECT_EQ(b.size(), 4);
    EXPECT_TRUE(b.fermionic());
    EXPECT_EQ(b.min(), 0);
    EXPECT_EQ(b.max(), 3);
    EXPECT_EQ(b.positive(), (Block{1, 2, 3}));
    EXPECT_TRUE(Block::interval(2, 1).empty());
    EXPECT_TRUE(Block{0}.is_zero_block());
    EXPECT_THROW(Block{64}, std::out_of_range);
}

TEST(Composition, ParseAndPrintRoundTrip) {
    for (const char* s : {"({0},{0,2},{1,3})", "({0,1},{0},{2})", "()", "({1,2},{3})"})
        EXPECT_EQ(to_string(parse_composition(s)), s);
    EXPECT_EQ(to_string(parse_composition(" ( {0} , {0, 2} ,{1,3} ) ")), "({0},{0,2},{1,3})");
}

TEST(Composition, ParseErrorsCarryPosition) {
    try {
        parse_composition("({0},{0,1]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    EXPECT_THROW(parse_composition("({1},{1})"), ParseError);      // not disjoint
    EXPECT_THROW(parse_composition("({0},{2})"), ParseError);      // does not cover [2]
    EXPECT_THROW(parse_composition("({2},{0,1})"), ParseError);    // fermionic blocks first
    EXPECT_THROW(parse_set_superpartition("({0,2},{0,1})"), ParseError);  // not ordered
}

TEST(Composition, BidegreeAndBlocks) {
    auto k = psc("({0},{0,2},{1,3})");
    EXPECT_EQ(k.degree(), 3);
    EXPECT_EQ(k.fermionic_degree(), 2);
    EXPECT_EQ(k.length(), 3);
    EXPECT_EQ(k.fermionic_blocks().size(), 2u);
    EXPECT_EQ(k.bosonic_blocks().size(), 1u);
    EXPECT_EQ(psc("({0},{0},{1})").zero_block_count(), 2);
    EXPECT_FALSE(psc("({0},{0},{1})").is_nontrivial());
}

TEST(Enumerate, SetPartitionsMatchInsertionBruteForce) {
    for (int n = 0; n <= 6; ++n) {
        auto brute = brute_set_partitions(n);
        auto got = enumerate_set_partitions(n);
        ASSERT_EQ(got.size(), brute.size()) << "n=" << n;
        std::set<std::set<std::set<int>>> mine;
        for (const auto& p : got) {
            std::set<std::set<int>> q;
            for (Block b : p) {
                auto el = b.elements();
                q.insert(std::set<int>(el.begin(), el.end()));
            }
            mine.insert(q);
        }
        EXPECT_EQ(mine, brute);
    }
    EXPECT_EQ(enumerate_set_partitions(4).size(), 15u);
    EXPECT_EQ(enumerate_set_partitions(0).size(), 1u);
    EXPECT_TRUE(enumerate_set_partitions(0).front().empty());
}

TEST(Enumerate, TwoBlockPartitionsFollowStirling) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            std::size_t count = 0;
            for (const auto& p : enumerate_set_partitions(n)) count += p.size() == static_cast<std::size_t>(k);
            EXPECT_EQ(Integer(static_cast<unsigned long>(count)), stirling2(n, k)) << n << "," << k;
        }
    std::size_t two = 0;
    for (const auto& p : enumerate_set_partitions(5)) two += p.size() == 2;
    EXPECT_EQ(two, 15u);
}

TEST(Enumerate, DegenerateSetSuperpartitions) {
    auto a = enumerate_set_superpartitions(0, 1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(to_string(a[0]), "({0})");
    auto b = enumerate_set_superpartitions(0, 0);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(to_string(b[0]), "()");
    EXPECT_TRUE(enumerate_set_superpartitions(1, 3).empty());
}

TEST(Enumerate, BidegreeTwoTwoHasFourSetSuperpartitions) {
    std::set<std::string> got;
    for (const auto& i : enumerate_set_superpartitions(2, 2)) got.insert(to_string(i));
    EXPECT_EQ(got, (std::set<std::string>{"({0},{0,1,2})", "({0,1},{0,2})", "({0},{0,2},{1})", "({0},{0,1},{2})"}));
}

TEST(Enumerate, SetSuperpartitionTotals) {
    const std::vector<std::size_t> expected{2, 4, 12, 44, 188, 908};
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(enumerate_set_superpartitions(n).size(), expected[static_cast<std::size_t>(n)]);
}

TEST(Enumerate, PartialSetSupercompositionsOfBidegreeTwoTwo) {
    auto all = enumerate_psc(2, 2);
    EXPECT_EQ(all.size(), 10u);
    std::set<PartialSetSupercomposition> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (const auto& k : all) {
        EXPECT_EQ(k.degree(), 2);
        EXPECT_EQ(k.fermionic_degree(), 2);
    }
    EXPECT_EQ(enumerate_psc(2, 0).size(), 2u);
}

TEST(Order, StrongOrderExamples) {
    auto zero = PartialSetSupercomposition::zero(2, 2);
    EXPECT_TRUE(is_strongly_coarser(zero, psc("({0},{0,1,2})")));
    EXPECT_FALSE(is_strongly_coarser(psc("({0},{0,1},{2})"), psc("({0,1},{0,2})")));
    for (const auto& k : enumerate_psc(2, 2)) EXPECT_TRUE(is_strongly_coarser(k, k));
}

TEST(Order, CoarseningExamples) {
    EXPECT_TRUE(is_coarser(psc("({0},{0,1},{2})"), psc("({0,1},{0,2})")));
    EXPECT_TRUE(is_coarser(psc("({1},{2},{3})"), psc("({1,2,3})")));
    EXPECT_FALSE(is_coarser(psc("({0,1},{0,2})"), psc("({0,1,2})")));
    for (const auto& i : enumerate_set_superpartitions(3, 2)) EXPECT_TRUE(is_coarser(i, i));
}

TEST(Order, MeetIsGreatestLowerBound) {
    EXPECT_EQ(meet(psc("({0,1},{0,2})"), psc("({0,2},{0,1})")), PartialSetSupercomposition::zero(2, 2));
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto all = enumerate_psc(n, m);
            for (const auto& k : all)
                for (const auto& l : all) {
                    auto w = meet(k, l);
                    ASSERT_TRUE(is_strongly_coarser(w, k) && is_strongly_coarser(w, l));
                    for (const auto& z : all)
                        if (is_strongly_coarser(z, k) && is_strongly_coarser(z, l)) ASSERT_TRUE(is_strongly_coarser(z, w));
                }
        }
}

TEST(Order, StandardizeExamples) {
    auto s = standardize(psc("({0,1},{0},{2})"));
    EXPECT_EQ(to_string(std::span<const Block>(s)), "({1,3},{2},{4})");
    auto t = standardize(psc("({0},{0,1,2})"));
    EXPECT_EQ(to_string(std::span<const Block>(t)), "({1},{2,3,4})");
    auto k = psc("({1,3},{2})");
    auto u = standardize(k);
    EXPECT_EQ(to_string(std::span<const Block>(u)), to_string(k));
}

TEST(Order, MobiusValues) {
    EXPECT_EQ(mobius_zero(psc("({0},{0,1,2})")), 2);
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= n + 1; ++m) EXPECT_EQ(mobius_zero(PartialSetSupercomposition::zero(n, m)), 1);
    EXPECT_EQ(mobius(psc("({0,1},{0,2})"), psc("({0},{0,1,2})")), 0);
}

TEST(Order, MobiusIsTheHallSumOfChains) {
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            auto all = enumerate_psc(n, m);
            for (const auto& k : all)
                for (const auto& l : all) {
                    if (!is_strongly_coarser(k, l)) continue;
                    Integer hall = 0;
                    for (const auto& c : chains(k, l)) hall += sign_of_parity(static_cast<long>(c.size()) - 1);
                    ASSERT_EQ(hall, mobius(k, l)) << to_string(k) << " " << to_string(l);
                }
        }
}

TEST(Order, ChainExampleHasFourChains) {
    auto cs = chains(PartialSetSupercomposition::zero(2, 2), psc("({0},{0,1,2})"));
    EXPECT_EQ(cs.size(), 4u);
}

TEST(Order, SigmaPermExample) {
    auto i = parse_set_superpartition("({0},{0,3},{0,5},{1},{2,4})");
    auto j = parse_set_superpartition("({0,1,5},{0,2,4},{0,3})");
    ASSERT_TRUE(is_coarser(i, j));
    EXPECT_EQ(sigma_perm(i, j), (std::vector<int>{1, 2, 0}));
    EXPECT_EQ(inv(i, j), 2);
    EXPECT_EQ(inv(i, i), 0);
}

TEST(Superpartition, TypeAndEpsilon) {
    auto a = parse_set_superpartition("({0,1,7},{0,5},{2},{3,4},{6})");
    ASSERT_TRUE(lambda_of(a));
    EXPECT_EQ(to_string(*lambda_of(a)), "(2,1;2,1,1)");
    EXPECT_EQ(*epsilon(a), 0);
    auto b = parse_set_superpartition("({0,2},{0,3,5},{1},{4},{6,7})");
    EXPECT_EQ(to_string(*lambda_of(b)), "(2,1;2,1,1)");
    EXPECT_EQ(*epsilon(b), 1);
    auto c = parse_set_superpartition("({1,2},{3})");
    EXPECT_EQ(to_string(*lambda_of(c)), "(;2,1)");
    EXPECT_EQ(*epsilon(c), 0);
    EXPECT_FALSE(lambda_of(parse_set_superpartition("({0,1},{0,2})")));
}

TEST(Superpartition, SuperBinomialCountsTypes) {
    auto s = parse_superpartition("(2,1;2,1,1)");
    EXPECT_EQ(super_binomial(s), 630);
    EXPECT_EQ(set_superpartitions_of_type(s).size(), 630u);
    EXPECT_EQ(super_binomial(parse_superpartition("(;2,1)")), 3);
    EXPECT_EQ(super_binomial(Superpartition({}, {1, 1, 1, 1})), 1);
}

TEST(Superpartition, ParseAndConjugate) {
    auto s = parse_superpartition("(3,1;2,1)");
    EXPECT_EQ(s.degree(), 7);
    EXPECT_EQ(s.fermionic_degree(), 2);
    EXPECT_EQ(to_string(s), "(3,1;2,1)");
    auto c = conjugate(s);
    // Λ⁺ = (3,2,1,1) and Λ^⊕ = (4,2,2,1) conjugate to (4,2,1) and (4,3,1,1)
    EXPECT_EQ(c.plus(), (std::vector<int>{4, 2, 1}));
    EXPECT_EQ(c.oplus(), (std::vector<int>{4, 3, 1, 1}));
    EXPECT_EQ(to_string(c), "(2,0;4,1)");
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= n + 1; ++m)
            for (const auto& x : enumerate_superpartitions(n, m)) EXPECT_EQ(conjugate(conjugate(x)), x);
    EXPECT_THROW(parse_superpartition("(1,1;)"), ParseError);
}

TEST(Composition, BarAndCanonicalIndex) {
    auto r = bar(psc("({0,2},{0,1})"));
    EXPECT_EQ(to_string(r.value), "({0,1},{0,2})");
    EXPECT_TRUE(r.odd);
    EXPECT_FALSE(canonical_index(psc("({0},{0},{1})")));
    auto c = canonical_index(psc("({0,3},{0,1},{2})"));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->second, -1);
}

TEST(Composition, ShiftAndRestrict) {
    auto k = psc("({0,1},{2})");
    EXPECT_EQ(to_string(std::span<const Block>(shift(k.blocks(), 2))), "({0,3},{4})");
    EXPECT_EQ(to_string(std::span<const Block>(restrict_blocks(k.blocks(), Block{2}))), "({0,1})");
    EXPECT_EQ(to_string(over_product(psc("({0,1})"), psc("({1})"))), "({0,1},{2})");
}
