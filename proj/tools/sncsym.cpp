// Command-line front end for the sncsym library.

#include "sncsym/sncsym.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace sncsym;
using nlohmann::json;

namespace {

/// Bad arguments detected after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Output {
    std::string text;
    json data;
    std::string csv;
};

// ---------------------------------------------------------------------------
// Argument parsing helpers. Every parse failure is reported against the
// argument it came from, with a caret under the failing position.

[[noreturn]] void report_parse_error(const std::string& what, const std::string& arg, const ParseError& e) {
    std::ostringstream os;
    os << "cannot parse " << what << ": " << e.what() << "\n  " << arg << "\n  "
       << std::string(std::min(e.position(), arg.size()), ' ') << "^";
    throw UsageError(os.str());
}

template <typename F>
auto parse_arg(const std::string& what, const std::string& arg, F&& parse) {
    try {
        return parse(arg);
    } catch (const ParseError& e) {
        report_parse_error(what, arg, e);
    } catch (const json::exception& e) {
        throw UsageError("cannot parse " + what + " as JSON: " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid " + what + ": " + e.what());
    }
}

bool looks_like_json(const std::string& s) {
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && s[p] == '{';
}

/// An sSym element names its basis s/sbar or indexes by superpartitions "(a;s)";
/// sNCSym indices start with "({" or "()".
bool looks_like_ssym(const std::string& s) {
    if (looks_like_json(s)) {
        try {
            auto j = json::parse(s);
            const auto b = j.at("basis").get<std::string>();
            if (b == "s" || b == "sbar") return true;
            for (const auto& t : j.at("terms")) return t.at("index").is_string() || t.at("index").is_object();
        } catch (const json::exception&) {
        }
        return false;
    }
    auto open = s.find('[');
    if (open == std::string::npos) return false;
    auto name_start = s.find_last_of(" +-*", open);
    std::string name = s.substr(name_start == std::string::npos ? 0 : name_start + 1, open - (name_start == std::string::npos ? 0 : name_start + 1));
    if (name == "s" || name == "sbar") return true;
    auto p = s.find_first_not_of(" \t", open + 1);
    if (p == std::string::npos || s[p] != '(') return false;
    auto q = s.find_first_not_of(" \t", p + 1);
    return q != std::string::npos && s[q] != '{' && s[q] != ')';
}

SymbolicElement read_element(const std::string& arg) {
    return parse_arg("element", arg, [](const std::string& s) {
        return looks_like_json(s) ? element_from_json(json::parse(s)) : parse_element(s);
    });
}

SSymElement read_ssym_element(const std::string& arg) {
    return parse_arg("sSym element", arg, [](const std::string& s) {
        return looks_like_json(s) ? ssym_element_from_json(json::parse(s)) : parse_ssym_element(s);
    });
}

PartialSetSupercomposition read_composition(const std::string& arg) {
    return parse_arg("partial set supercomposition", arg, [](const std::string& s) {
        return looks_like_json(s) ? PartialSetSupercomposition(blocks_from_json(json::parse(s))) : parse_composition(s);
    });
}

Superpartition read_superpartition(const std::string& arg) {
    return parse_arg("superpartition", arg, [](const std::string& s) {
        return looks_like_json(s) ? superpartition_from_json(json::parse(s)) : parse_superpartition(s);
    });
}

std::vector<WeightEntry> read_weight(const std::string& arg) {
    return parse_arg("weight", arg, [](const std::string& s) { return parse_weight(s); });
}

Basis read_basis(const std::string& arg) {
    return parse_arg("basis", arg, [](const std::string& s) { return parse_basis(s); });
}

SSymBasis read_ssym_basis(const std::string& arg) {
    return parse_arg("sSym basis", arg, [](const std::string& s) { return parse_ssym_basis(s); });
}

bool is_ssym_only_basis(const std::string& b) { return b == "s" || b == "sbar"; }

void require_bidegree(int n, int m) {
    if (n < 0 || m < 0) throw UsageError("--n and --m must be nonnegative");
    if (m > n + 1) throw UsageError("--m may not exceed n+1");
}

// ---------------------------------------------------------------------------
// Output builders.

Output element_output(const SymbolicElement& el) {
    Output o;
    o.text = to_string(el) + "\n";
    o.data = to_json_value(el);
    o.csv = "\"index\",\"coeff\"\n";
    for (const auto& [i, c] : el.terms()) o.csv += "\"" + to_string(i) + "\"," + c.get_str() + "\n";
    return o;
}

Output element_output(const SSymElement& el) {
    Output o;
    o.text = to_string(el) + "\n";
    o.data = to_json_value(el);
    o.csv = "\"index\",\"coeff\"\n";
    for (const auto& [s, c] : el.terms()) o.csv += "\"" + to_string(s) + "\"," + c.get_str() + "\n";
    return o;
}

Output scalar_output(const Rational& q) {
    Output o;
    o.text = q.get_str() + "\n";
    o.data = json{{"value", q.get_str()}};
    o.csv = "\"value\"\n" + q.get_str() + "\n";
    return o;
}

Output matrix_output(const LabelledMatrix& a, const std::string& title) {
    Output o;
    o.text = "# " + title + "\n" + to_text(a);
    o.data = to_json_value(a);
    o.data["title"] = title;
    o.csv = to_csv(a);
    return o;
}

template <typename T>
std::vector<std::string> labels(const std::vector<T>& items) {
    std::vector<std::string> out;
    for (const auto& x : items) out.push_back(to_string(x));
    return out;
}

std::string bidegree(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

// ---------------------------------------------------------------------------
// Verbs.

Output run_enumerate(int n, std::optional<int> m, const std::string& object) {
    if (n < 0) throw UsageError("--n must be nonnegative");
    if (m) require_bidegree(n, *m);
    Output o;
    json items = json::array();
    std::vector<std::string> rows;
    auto emit = [&](const std::string& text, json j) {
        rows.push_back(text);
        items.push_back(std::move(j));
    };
    std::string what;
    if (object == "set-partitions") {
        if (m) throw UsageError("--m does not apply to set partitions");
        what = "set partitions of [" + std::to_string(n) + "]";
        for (const auto& p : enumerate_set_partitions(n)) emit(to_string(std::span<const Block>(p)), blocks_to_json(p));
    } else if (object == "set-superpartitions") {
        what = m ? "set superpartitions of bidegree " + bidegree(n, *m) : "set superpartitions of degree " + std::to_string(n);
        for (const auto& i : m ? enumerate_set_superpartitions(n, *m) : enumerate_set_superpartitions(n))
            emit(to_string(i), to_json_value(static_cast<const PartialSetSupercomposition&>(i)));
    } else if (object == "psc") {
        if (!m) throw UsageError("--m is required for partial set supercompositions");
        what = "partial set supercompositions of bidegree " + bidegree(n, *m);
        for (const auto& k : enumerate_psc(n, *m)) emit(to_string(k), to_json_value(k));
    } else if (object == "superpartitions") {
        what = m ? "superpartitions of bidegree " + bidegree(n, *m) : "superpartitions of degree " + std::to_string(n);
        for (int mm = m.value_or(0); mm <= m.value_or(n + 1); ++mm)
            for (const auto& s : enumerate_superpartitions(n, mm)) emit(to_string(s), to_json_value(s));
    } else {
        throw UsageError("unknown --object '" + object + "'");
    }
    o.text = "# " + std::to_string(rows.size()) + " " + what + "\n";
    o.csv = "\"item\"\n";
    for (const auto& r : rows) {
        o.text += r + "\n";
        o.csv += "\"" + r + "\"\n";
    }
    o.data = json{{"object", object}, {"n", n}, {"count", rows.size()}, {"items", items}};
    if (m) o.data["m"] = *m;
    return o;
}

Output run_expand(const std::string& arg, std::optional<int> num_vars, bool force_ssym) {
    Output o;
    auto budget = [&](int n, int m) {
        const int v = num_vars.value_or(n + m + 1);
        if (v < 0 || v > 255) throw UsageError("--num-vars must lie in 0..255");
        return v;
    };
    if (force_ssym || looks_like_ssym(arg)) {
        const auto el = read_ssym_element(arg);
        int n = 0, m = 0;
        for (const auto& [s, c] : el.terms()) {
            n = std::max(n, s.degree());
            m = std::max(m, s.fermionic_degree());
        }
        const auto f = expand_ssym(el, budget(n, m));
        o.text = to_string(f);
        o.data = to_json_value(f);
        o.data["algebra"] = "ssym";
    } else {
        const auto el = read_element(arg);
        int n = 0, m = 0;
        for (const auto& [d, mm] : el.bidegrees()) {
            n = std::max(n, d);
            m = std::max(m, mm);
        }
        const auto f = expand(el, budget(n, m));
        o.text = to_string(f);
        o.data = to_json_value(f);
        o.data["algebra"] = "sncsym";
    }
    o.csv = "\"coeff\",\"monomial\"\n";
    std::istringstream lines(o.text);
    for (std::string line; std::getline(lines, line);) {
        auto star = line.find(" * ");
        if (star == std::string::npos) continue;
        o.csv += line.substr(0, star) + ",\"" + line.substr(star + 3) + "\"\n";
    }
    return o;
}

Output run_convert(const std::optional<std::string>& arg, const std::string& from, const std::string& to,
                   std::optional<int> n, std::optional<int> m, bool force_ssym) {
    if (to.empty()) throw UsageError("--to is required");
    const bool ssym = force_ssym || is_ssym_only_basis(to) || is_ssym_only_basis(from) || (arg && looks_like_ssym(*arg));
    if (arg) {
        if (n || m) throw UsageError("give either an element or --n/--m, not both");
        if (ssym) {
            auto el = read_ssym_element(*arg);
            if (!from.empty() && read_ssym_basis(from) != el.basis())
                throw UsageError("element is not in the --from basis " + from);
            return element_output(convert(el, read_ssym_basis(to)));
        }
        auto el = read_element(*arg);
        if (!from.empty() && read_basis(from) != el.basis()) throw UsageError("element is not in the --from basis " + from);
        return element_output(convert(el, read_basis(to)));
    }
    if (!n || !m || from.empty()) throw UsageError("matrix mode needs --n, --m, --from and --to");
    require_bidegree(*n, *m);
    LabelledMatrix a;
    std::string title = from + " -> " + to + " at bidegree " + bidegree(*n, *m) +
                        ": column j holds the coefficients of the image of the j-th index";
    if (ssym) {
        auto idx = labels(enumerate_superpartitions(*n, *m));
        a = {idx, idx, ssym_transition_matrix(*n, *m, read_ssym_basis(from), read_ssym_basis(to))};
    } else {
        auto idx = labels(enumerate_set_superpartitions(*n, *m));
        a = {idx, idx, transition_matrix(*n, *m, read_basis(from), read_basis(to))};
    }
    return matrix_output(a, title);
}

Output run_product(const std::string& a, const std::string& b, bool force_ssym) {
    if (force_ssym || looks_like_ssym(a) || looks_like_ssym(b))
        return element_output(product(read_ssym_element(a), read_ssym_element(b)));
    return element_output(product(read_element(a), read_element(b)));
}

Output run_inner(const std::vector<std::string>& args, const std::string& from, const std::string& to,
                 std::optional<int> n, std::optional<int> m, bool force_ssym) {
    if (!args.empty()) {
        if (args.size() != 2) throw UsageError("inner takes exactly two elements");
        if (force_ssym || looks_like_ssym(args[0]) || looks_like_ssym(args[1]))
            return scalar_output(inner_product(read_ssym_element(args[0]), read_ssym_element(args[1])));
        return scalar_output(inner_product(read_element(args[0]), read_element(args[1])));
    }
    if (!n || !m || from.empty() || to.empty()) throw UsageError("Gram mode needs --n, --m, --from and --to");
    require_bidegree(*n, *m);
    const bool ssym = force_ssym || is_ssym_only_basis(from) || is_ssym_only_basis(to);
    LabelledMatrix a;
    if (ssym) {
        const auto idx = enumerate_superpartitions(*n, *m);
        const auto fb = read_ssym_basis(from), tb = read_ssym_basis(to);
        a = {labels(idx), labels(idx), RationalMatrix(idx.size(), idx.size())};
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                a.entries(r, c) =
                    inner_product(SSymElement::basis_element(fb, idx[r]), SSymElement::basis_element(tb, idx[c]));
    } else {
        const auto idx = enumerate_set_superpartitions(*n, *m);
        const auto fb = read_basis(from), tb = read_basis(to);
        a = {labels(idx), labels(idx), RationalMatrix(idx.size(), idx.size())};
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c)
                a.entries(r, c) =
                    inner_product(SymbolicElement::basis_element(fb, idx[r]), SymbolicElement::basis_element(tb, idx[c]));
    }
    return matrix_output(a, "<" + from + "_I, " + to + "_J> at bidegree " + bidegree(*n, *m));
}

Output run_mobius(const std::vector<std::string>& args, std::optional<int> n, std::optional<int> m, bool list_chains) {
    if (!args.empty()) {
        if (args.size() != 2) throw UsageError("mobius takes two partial set supercompositions K and L");
        const auto k = read_composition(args[0]), l = read_composition(args[1]);
        if (!same_bidegree(k, l)) throw UsageError("K and L have different bidegrees");
        const Integer mu = mobius(k, l);
        Output o = scalar_output(Rational(mu));
        if (list_chains) {
            const auto cs = chains(k, l);
            json js = json::array();
            o.text = "mu = " + mu.get_str() + "\n# " + std::to_string(cs.size()) + " chains\n";
            for (const auto& c : cs) {
                std::string line;
                json jc = json::array();
                for (const auto& f : c) {
                    line += (line.empty() ? "" : " < ") + to_string(f);
                    jc.push_back(to_string(f));
                }
                o.text += line + "\n";
                js.push_back(jc);
            }
            o.data["chains"] = js;
        }
        return o;
    }
    if (!n || !m) throw UsageError("mobius needs K and L, or --n and --m for a table");
    require_bidegree(*n, *m);
    const auto idx = enumerate_psc(*n, *m);
    LabelledMatrix a{labels(idx), labels(idx), RationalMatrix(idx.size(), idx.size())};
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) a.entries(r, c) = Rational(mobius(idx[r], idx[c]));
    return matrix_output(a, "mu(K,L) on partial set supercompositions of bidegree " + bidegree(*n, *m));
}

Output run_schur(const std::string& shape_arg, int kind_arg, bool positive, bool ssym) {
    const auto shape = read_superpartition(shape_arg);
    const auto kind = parse_arg("--kind", std::to_string(kind_arg), [](const std::string& s) { return parse_tableau_kind(std::stoi(s)); });
    if (ssym) return element_output(schur_ssym(shape, kind));
    const auto el = schur(shape, kind);
    Output o = element_output(el);
    if (positive) {
        const auto pf = positive_form(el);
        o.text = positive_form_to_string(el) + "\n";
        json terms = json::array();
        o.csv = "\"index\",\"coeff\"\n";
        for (const auto& [k, c] : pf) {
            terms.push_back({{"index", to_json_value(k)}, {"coeff", c.get_str()}});
            o.csv += "\"" + to_string(k) + "\"," + c.get_str() + "\n";
        }
        o.data["positive_form"] = terms;
    }
    o.text = "# " + std::string(kind == TableauKind::First ? "S" : "Sbar") + to_string(shape) + "\n" +
             render_diagram(shape) + o.text;
    return o;
}

Output run_kostka(const std::vector<std::string>& args, int kind_arg, bool list, std::optional<int> n, std::optional<int> m) {
    const auto kind = parse_arg("--kind", std::to_string(kind_arg), [](const std::string& s) { return parse_tableau_kind(std::stoi(s)); });
    if (args.empty()) {
        if (!n || !m) throw UsageError("kostka needs SHAPE WEIGHT, or --n and --m for a table");
        require_bidegree(*n, *m);
        const auto idx = enumerate_superpartitions(*n, *m);
        LabelledMatrix a{labels(idx), labels(idx), RationalMatrix(idx.size(), idx.size())};
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t c = 0; c < idx.size(); ++c) a.entries(r, c) = Rational(kostka(idx[r], idx[c], kind));
        return matrix_output(a, std::string(kind == TableauKind::First ? "K" : "Kbar") +
                                    "(shape, weight) at bidegree " + bidegree(*n, *m) + ", rows are shapes");
    }
    if (args.size() != 2) throw UsageError("kostka takes a shape and a weight");
    const auto shape = read_superpartition(args[0]);
    // A weight may be written as a superpartition Ω or as an explicit letter list.
    const bool is_super = args[1].find(';') != std::string::npos;
    const auto weight = is_super ? kostka_weight(read_superpartition(args[1])) : read_weight(args[1]);
    const auto tableaux = enumerate_tableaux(shape, weight, kind);
    Integer k = 0;
    for (const auto& t : tableaux) k += t.sign();
    Output o = scalar_output(Rational(k));
    o.data["shape"] = to_string(shape);
    o.data["weight"] = to_string(weight);
    o.data["kind"] = kind_arg;
    o.data["tableaux_count"] = tableaux.size();
    if (list) {
        json ts = json::array();
        o.text = "# " + std::to_string(tableaux.size()) + " tableaux, signed sum " + k.get_str() + "\n";
        o.csv = "\"chain\",\"sign\"\n";
        for (const auto& t : tableaux) {
            o.text += render_chain(t) + "   sign " + (t.sign() > 0 ? "+1" : "-1") + "\n" + render_filling(t) + "\n";
            o.csv += "\"" + render_chain(t) + "\"," + std::to_string(t.sign()) + "\n";
            ts.push_back(to_json_value(t));
        }
        o.data["tableaux"] = ts;
    }
    return o;
}

Output run_verify(int max_degree, bool& all_passed) {
    if (max_degree < 0 || max_degree > 6) throw UsageError("--max-degree must lie in 0..6");
    const auto results = run_identity_suite(max_degree);
    Output o;
    o.data = suite_report(max_degree, results);
    all_passed = o.data.at("passed").get<bool>();
    o.csv = "\"id\",\"criterion\",\"expected\",\"holds\",\"passed\",\"cases\"\n";
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed() ? "PASS " : "FAIL ") << r.id << " [" << r.criterion << "] " << r.description << " ("
           << r.cases << " cases" << (r.expected_to_hold ? "" : ", expected to be refuted") << ")\n";
        if (!r.counterexample.empty())
            os << "     " << (r.expected_to_hold ? "counterexample: " : "refuted by: ") << r.counterexample << "\n";
        o.csv += "\"" + r.id + "\"," + std::to_string(r.criterion) + "," + (r.expected_to_hold ? "holds" : "refuted") +
                 "," + (r.holds ? "true" : "false") + "," + (r.passed() ? "true" : "false") + "," +
                 std::to_string(r.cases) + "\n";
    }
    os << (all_passed ? "all identities verified" : "VERIFICATION FAILED") << " up to degree " << max_degree << "\n";
    o.text = os.str();
    return o;
}

void emit(const Output& o, Format f, const std::string& out_path) {
    std::string body;
    switch (f) {
        case Format::Text: body = o.text; break;
        case Format::Json: body = o.data.dump(2) + "\n"; break;
        case Format::Csv: body = o.csv; break;
    }
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + out_path);
    file << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions in noncommuting variables in superspace"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", out_path;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "Write the output to this file");

    std::optional<int> n, m, num_vars;
    int max_degree = 4, kind = 1;
    std::string from, to, object = "set-superpartitions";
    std::vector<std::string> args;
    bool ssym = false, positive = false, list = false;

    auto bidegree_opts = [&](CLI::App* c) {
        c->add_option("--n", n, "Degree n");
        c->add_option("--m", m, "Fermionic degree m");
    };

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List index objects of a given (bi)degree");
    bidegree_opts(enumerate_cmd);
    enumerate_cmd->get_option("--n")->required();
    enumerate_cmd->add_option("--object", object, "set-partitions, set-superpartitions, psc or superpartitions")
        ->check(CLI::IsMember({"set-partitions", "set-superpartitions", "psc", "superpartitions"}));

    auto* expand_cmd = app.add_subcommand("expand", "Expand an element as a polynomial in x and theta");
    expand_cmd->add_option("element", args, "Element in text or JSON form")->required()->expected(1);
    expand_cmd->add_option("--num-vars", num_vars, "Number of variables (default n+m+1)");
    expand_cmd->add_flag("--ssym", ssym, "Treat the element as commuting (sSym)");

    auto* convert_cmd = app.add_subcommand("convert", "Change basis, or print a transition matrix");
    convert_cmd->add_option("element", args, "Element in text or JSON form")->expected(0, 1);
    convert_cmd->add_option("--from,--basis", from, "Source basis");
    convert_cmd->add_option("--to", to, "Target basis")->required();
    bidegree_opts(convert_cmd);
    convert_cmd->add_flag("--ssym", ssym, "Work in sSym");

    auto* product_cmd = app.add_subcommand("product", "Multiply two elements");
    product_cmd->add_option("elements", args, "Two elements")->required()->expected(2);
    product_cmd->add_flag("--ssym", ssym, "Work in sSym");

    auto* project_cmd = app.add_subcommand("project", "Project an sNCSym element to sSym");
    project_cmd->add_option("element", args, "Element in text or JSON form")->required()->expected(1);

    auto* lift_cmd = app.add_subcommand("lift", "Lift an sSym element to sNCSym (monomial basis)");
    lift_cmd->add_option("element", args, "sSym element in text or JSON form")->required()->expected(1);

    auto* inner_cmd = app.add_subcommand("inner", "Scalar product of two elements, or a Gram matrix");
    inner_cmd->add_option("elements", args, "Two elements")->expected(0, 2);
    inner_cmd->add_option("--from,--basis", from, "Row basis for the Gram matrix");
    inner_cmd->add_option("--to", to, "Column basis for the Gram matrix");
    bidegree_opts(inner_cmd);
    inner_cmd->add_flag("--ssym", ssym, "Work in sSym");

    auto* mobius_cmd = app.add_subcommand("mobius", "Möbius function of the strong order");
    mobius_cmd->add_option("pair", args, "K and L")->expected(0, 2);
    bidegree_opts(mobius_cmd);
    mobius_cmd->add_flag("--chains", list, "List the chains from K to L");

    auto* schur_cmd = app.add_subcommand("schur", "Tableau-defined Schur function of a superpartition");
    schur_cmd->add_option("shape", args, "Superpartition")->required()->expected(1);
    schur_cmd->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
    schur_cmd->add_flag("--positive", positive, "Render over partial set supercompositions without signs");
    schur_cmd->add_flag("--ssym", ssym, "The commuting Schur function");

    auto* kostka_cmd = app.add_subcommand("kostka", "Kostka numbers and their tableaux");
    kostka_cmd->add_option("shape_weight", args, "Shape and weight")->expected(0, 2);
    kostka_cmd->add_option("--kind", kind, "1 or 2")->check(CLI::IsMember({1, 2}));
    kostka_cmd->add_flag("--list", list, "List the tableaux");
    bidegree_opts(kostka_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite");
    verify_cmd->add_option("--max-degree", max_degree, "Degree bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\nrun with --help for usage\n";
        return 1;
    }

    const Format fmt = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
    try {
        Output out;
        int status = 0;
        if (*enumerate_cmd) {
            out = run_enumerate(*n, m, object);
        } else if (*expand_cmd) {
            out = run_expand(args.at(0), num_vars, ssym);
        } else if (*convert_cmd) {
            out = run_convert(args.empty() ? std::nullopt : std::optional(args[0]), from, to, n, m, ssym);
        } else if (*product_cmd) {
            out = run_product(args.at(0), args.at(1), ssym);
        } else if (*project_cmd) {
            out = element_output(rho(read_element(args.at(0))));
        } else if (*lift_cmd) {
            out = element_output(lift(read_ssym_element(args.at(0))));
        } else if (*inner_cmd) {
            out = run_inner(args, from, to, n, m, ssym);
        } else if (*mobius_cmd) {
            out = run_mobius(args, n, m, list);
        } else if (*schur_cmd) {
            out = run_schur(args.at(0), kind, positive, ssym);
        } else if (*kostka_cmd) {
            out = run_kostka(args, kind, list, n, m);
        } else if (*verify_cmd) {
            bool ok = true;
            out = run_verify(max_degree, ok);
            status = ok ? 0 : 2;
        }
        emit(out, fmt, out_path);
        return status;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
