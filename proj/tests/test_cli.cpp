#include "golden_cases.hpp"

#include "sncsym/sncsym.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>

using namespace sncsym;
using nlohmann::json;

namespace {

const std::string exe = SNCSYM_CLI_PATH;
const std::string golden_dir = SNCSYM_GOLDEN_DIR;

golden::RunResult cli(std::vector<std::string> args, bool merge = false) { return golden::run(exe, args, merge); }

json cli_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    auto r = cli(args);
    EXPECT_EQ(r.status, 0);
    return json::parse(r.out);
}

}  // namespace

TEST(Cli, GoldenOutputs) {
    const bool update = std::getenv("SNCSYM_UPDATE_GOLDEN") != nullptr;
    for (const auto& c : golden::cases()) {
        auto r = cli(c.args);
        ASSERT_EQ(r.status, 0) << c.name;
        const std::string path = golden_dir + "/" + c.name + ".txt";
        if (update) {
            std::ofstream(path, std::ios::binary) << r.out;
            continue;
        }
        EXPECT_EQ(r.out, golden::read_file(path)) << c.name;
    }
}

TEST(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(cli({}).status, 1);
    EXPECT_EQ(cli({"frobnicate"}).status, 1);
    EXPECT_EQ(cli({"enumerate"}).status, 1);
    EXPECT_EQ(cli({"enumerate", "--n", "2", "--m", "5"}).status, 1);
    EXPECT_EQ(cli({"convert", "--to", "q", "m[({0})]"}).status, 1);
    EXPECT_EQ(cli({"schur", "--kind", "3", "(1;)"}).status, 1);
    EXPECT_EQ(cli({"--format", "xml", "enumerate", "--n", "1"}).status, 1);
}

TEST(Cli, ParseErrorsReportPosition) {
    auto r = cli({"convert", "--to", "p", "m[({0},{0,1]"}, true);
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("at position 11"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("block tuple"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("^"), std::string::npos);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).status, 0); }

TEST(Cli, JsonElementRoundTrips) {
    auto j = cli_json({"convert", "--from", "m", "--to", "p", "m[({0},{0,1},{2})]"});
    EXPECT_EQ(element_from_json(j), parse_element("p[({0},{0,1},{2})] - p[({0},{0,1,2})] + p[({0,1},{0,2})]"));
    // the JSON document is accepted back as input
    auto back = cli({"convert", "--to", "m", j.dump()});
    EXPECT_EQ(back.status, 0);
    EXPECT_EQ(back.out, "m[({0},{0,1},{2})]\n");
}

TEST(Cli, JsonSSymRoundTrips) {
    auto j = cli_json({"project", "m[({0},{0,1},{2})]"});
    auto el = ssym_element_from_json(j);
    EXPECT_EQ(el, rho(parse_element("m[({0},{0,1},{2})]")));
    auto lifted = cli_json({"lift", j.dump()});
    EXPECT_EQ(element_from_json(lifted), lift(el));
}

TEST(Cli, JsonPolynomialsRoundTrip) {
    auto j = cli_json({"expand", "m[({0},{1})]"});
    EXPECT_EQ(oracle_polynomial_from_json(j), expand(parse_element("m[({0},{1})]"), 3));
    auto k = cli_json({"expand", "--num-vars", "2", "m[(0;1)]"});
    EXPECT_EQ(commuting_polynomial_from_json(k), expand_ssym(parse_ssym_element("m[(0;1)]"), 2));
}

TEST(Cli, JsonMatricesRoundTrip) {
    auto j = cli_json({"convert", "--n", "2", "--m", "1", "--from", "m", "--to", "e"});
    auto a = labelled_matrix_from_json(j);
    EXPECT_EQ(a.entries, transition_matrix(2, 1, Basis::M, Basis::E));
    auto idx = enumerate_set_superpartitions(2, 1);
    ASSERT_EQ(a.col_labels.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) EXPECT_EQ(parse_set_superpartition(a.col_labels[c]), idx[c]);

    auto g = labelled_matrix_from_json(cli_json({"inner", "--n", "2", "--m", "1", "--from", "p", "--to", "p"}));
    for (std::size_t r = 0; r < g.entries.rows(); ++r)
        for (std::size_t c = 0; c < g.entries.cols(); ++c)
            if (r != c) EXPECT_EQ(g.entries(r, c), 0);

    auto k = labelled_matrix_from_json(cli_json({"kostka", "--n", "2", "--m", "1"}));
    for (const auto& l : k.row_labels) EXPECT_NO_THROW(parse_superpartition(l));
}

TEST(Cli, JsonTableauxAndEnumerationRoundTrip) {
    auto j = cli_json({"kostka", "--kind", "2", "--list", "(2,0;3)", "(~2,~0,2,1)"});
    for (const auto& t : j.at("tableaux")) {
        auto tab = tableau_from_json(t);
        EXPECT_EQ(tab.sign(), t.at("sign").get<int>());
        EXPECT_EQ(tab.chain.back(), parse_superpartition("(2,0;3)"));
    }
    auto e = cli_json({"enumerate", "--n", "3", "--m", "2"});
    EXPECT_EQ(e.at("count").get<std::size_t>(), enumerate_set_superpartitions(3, 2).size());
    for (const auto& item : e.at("items")) EXPECT_NO_THROW(SetSuperpartition(blocks_from_json(item)));
    auto s = cli_json({"enumerate", "--n", "3", "--object", "superpartitions"});
    for (const auto& item : s.at("items")) EXPECT_NO_THROW(superpartition_from_json(item));
}

TEST(Cli, CsvMatrixHasHeaderInEnumerationOrder) {
    auto r = cli({"--format", "csv", "convert", "--n", "1", "--m", "1", "--from", "m", "--to", "h"});
    ASSERT_EQ(r.status, 0);
    std::string header = r.out.substr(0, r.out.find('\n'));
    std::string expected = "\"\"";
    for (const auto& i : enumerate_set_superpartitions(1, 1)) expected += ",\"" + to_string(i) + "\"";
    EXPECT_EQ(header, expected);
}

TEST(Cli, OutFileOption) {
    const std::string path = ::testing::TempDir() + "sncsym_out.txt";
    auto r = cli({"--out", path, "enumerate", "--n", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(golden::read_file(path).find("# 44 set superpartitions of degree 3"), std::string::npos);
}

TEST(Cli, ScalarsAndSchur) {
    EXPECT_EQ(cli({"inner", "m[({0},{1})]", "h[({0},{1})]"}).out, "1\n");
    EXPECT_EQ(cli({"mobius", "({0},{0},{1},{2})", "({0},{0,1,2})"}).out, "2\n");
    auto s = cli_json({"schur", "(0;1,1)"});
    EXPECT_EQ(element_from_json(s), schur(parse_superpartition("(0;1,1)"), TableauKind::First));
}
