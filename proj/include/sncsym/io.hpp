#pragma once

// JSON forms for the objects the command-line tool emits, with matching
// readers so that every emitted document can be parsed back.

#include "sncsym/element.hpp"
#include "sncsym/matrix.hpp"
#include "sncsym/oracle.hpp"
#include "sncsym/parse_util.hpp"
#include "sncsym/ssym.hpp"
#include "sncsym/superpartition.hpp"
#include "sncsym/tableau.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sncsym {

// ---------------------------------------------------------------------------
// Weights: "(~2,~0,2,1)", a '~' marking a barred entry.

inline std::vector<WeightEntry> parse_weight(std::string_view text) {
    static constexpr const char* grammar = "weight '(~a,b,...)'";
    detail::Cursor c(text);
    std::vector<WeightEntry> w;
    c.expect('(', grammar);
    if (c.peek() != ')') {
        do {
            bool barred = c.accept('~');
            w.push_back({c.integer(grammar), barred});
        } while (c.accept(','));
    }
    c.expect(')', grammar);
    if (!c.at_end()) c.fail("trailing characters after weight");
    return w;
}

inline TableauKind parse_tableau_kind(int k) {
    if (k == 1) return TableauKind::First;
    if (k == 2) return TableauKind::Second;
    throw ParseError("tableau kind must be 1 or 2", 0);
}

inline nlohmann::json to_json_value(const SuperTableau& t) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& p : t.chain) chain.push_back(to_string(p));
    return {{"kind", static_cast<int>(t.kind)},
            {"weight", to_string(t.weight)},
            {"chain", chain},
            {"boxes", t.boxes},
            {"circle_labels", t.circle_labels},
            {"circle_rows", t.circle_rows},
            {"sign", t.sign()}};
}

inline SuperTableau tableau_from_json(const nlohmann::json& j) {
    SuperTableau t;
    const int k = j.at("kind").get<int>();
    if (k < 1 || k > 3) throw ParseError("unknown tableau kind", 0);
    t.kind = static_cast<TableauKind>(k);
    t.weight = parse_weight(j.at("weight").get<std::string>());
    for (const auto& p : j.at("chain")) t.chain.push_back(parse_superpartition(p.get<std::string>()));
    t.boxes = j.at("boxes").get<std::vector<std::vector<int>>>();
    t.circle_labels = j.at("circle_labels").get<std::vector<int>>();
    t.circle_rows = j.at("circle_rows").get<std::vector<int>>();
    return t;
}

// ---------------------------------------------------------------------------
// Polynomials.

inline nlohmann::json to_json_value(const OraclePolynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [u, c] : f.terms()) {
        std::vector<int> theta(u.theta.begin(), u.theta.end()), x(u.x.begin(), u.x.end());
        terms.push_back({{"theta", theta}, {"x", x}, {"coeff", c.get_str()}});
    }
    return {{"num_vars", f.num_vars()}, {"terms", terms}};
}

namespace detail {

inline std::vector<std::uint8_t> small_indices(const nlohmann::json& j, int lo, int hi) {
    std::vector<std::uint8_t> out;
    for (const auto& v : j) {
        const int k = v.get<int>();
        if (k < lo || k > hi) throw ParseError("variable index out of range", 0);
        out.push_back(static_cast<std::uint8_t>(k));
    }
    return out;
}

}  // namespace detail

inline OraclePolynomial oracle_polynomial_from_json(const nlohmann::json& j) {
    const int n = j.at("num_vars").get<int>();
    if (n < 0 || n > 255) throw ParseError("num_vars out of range", 0);
    OraclePolynomial f(n);
    for (const auto& t : j.at("terms"))
        f.add(detail::small_indices(t.at("theta"), 1, n), detail::small_indices(t.at("x"), 1, n),
              rational_from_json(t.at("coeff")));
    return f;
}

inline nlohmann::json to_json_value(const CommutingPolynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [u, c] : f.terms()) {
        std::vector<int> theta(u.theta.begin(), u.theta.end()), e(u.exponents.begin(), u.exponents.end());
        terms.push_back({{"theta", theta}, {"exponents", e}, {"coeff", c.get_str()}});
    }
    return {{"num_vars", f.num_vars()}, {"terms", terms}};
}

inline CommutingPolynomial commuting_polynomial_from_json(const nlohmann::json& j) {
    const int n = j.at("num_vars").get<int>();
    if (n < 0 || n > 255) throw ParseError("num_vars out of range", 0);
    CommutingPolynomial f(n);
    for (const auto& t : j.at("terms"))
        f.add(detail::small_indices(t.at("theta"), 1, n), detail::small_indices(t.at("exponents"), 0, 255),
              rational_from_json(t.at("coeff")));
    return f;
}

// ---------------------------------------------------------------------------
// Matrices with row and column labels in text form.

struct LabelledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    RationalMatrix entries;
};

inline nlohmann::json to_json_value(const LabelledMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.entries.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < a.entries.cols(); ++c) row.push_back(a.entries(r, c).get_str());
        rows.push_back(row);
    }
    return {{"row_labels", a.row_labels}, {"col_labels", a.col_labels}, {"entries", rows}};
}

inline LabelledMatrix labelled_matrix_from_json(const nlohmann::json& j) {
    LabelledMatrix a;
    a.row_labels = j.at("row_labels").get<std::vector<std::string>>();
    a.col_labels = j.at("col_labels").get<std::vector<std::string>>();
    const auto& rows = j.at("entries");
    if (rows.size() != a.row_labels.size()) throw ParseError("matrix row count does not match its labels", 0);
    a.entries = RationalMatrix(a.row_labels.size(), a.col_labels.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != a.col_labels.size()) throw ParseError("matrix row has the wrong length", 0);
        for (std::size_t c = 0; c < rows[r].size(); ++c) a.entries(r, c) = rational_from_json(rows[r][c]);
    }
    return a;
}

/// CSV: a header row of column labels, then one row per row label.
inline std::string to_csv(const LabelledMatrix& a) {
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    std::string out = quote("");
    for (const auto& l : a.col_labels) out += "," + quote(l);
    out += "\n";
    for (std::size_t r = 0; r < a.entries.rows(); ++r) {
        out += quote(a.row_labels[r]);
        for (std::size_t c = 0; c < a.entries.cols(); ++c) out += "," + a.entries(r, c).get_str();
        out += "\n";
    }
    return out;
}

/// Aligned plain-text table.
inline std::string to_text(const LabelledMatrix& a) {
    std::vector<std::vector<std::string>> cells;
    cells.push_back({""});
    for (const auto& l : a.col_labels) cells.back().push_back(l);
    for (std::size_t r = 0; r < a.entries.rows(); ++r) {
        cells.push_back({a.row_labels[r]});
        for (std::size_t c = 0; c < a.entries.cols(); ++c) cells.back().push_back(a.entries(r, c).get_str());
    }
    std::vector<std::size_t> width(a.col_labels.size() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace sncsym
