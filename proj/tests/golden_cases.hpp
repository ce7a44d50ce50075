#pragma once

// Worked examples whose CLI text output is pinned under tests/golden/.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
};

inline const std::vector<Case>& cases() {
    static const std::vector<Case> all{
        {"enumerate_2_2", {"enumerate", "--n", "2", "--m", "2"}},
        {"convert_m_to_p", {"convert", "--from", "m", "--to", "p", "m[({0},{0,1},{2})]"}},
        {"convert_m_to_e", {"convert", "--from", "m", "--to", "e", "m[({0},{0,1},{2})]"}},
        {"convert_m_to_h", {"convert", "--from", "m", "--to", "h", "m[({0},{0,1},{2})]"}},
        {"convert_e_to_m", {"convert", "--to", "m", "e[({0},{0,2},{1,3})]"}},
        {"convert_h_to_m", {"convert", "--to", "m", "h[({0},{0,2},{1,3})]"}},
        {"product_square", {"product", "m[({0},{1})]", "m[({0},{1})]"}},
        {"mobius_chains", {"mobius", "--chains", "({0},{0},{1},{2})", "({0},{0,1,2})"}},
        {"schur_2_1", {"schur", "(2,1;)"}},
        {"schur_2_1_positive", {"schur", "--positive", "(2,1;)"}},
        {"schur_ssym_0_1", {"schur", "--ssym", "(0;1)"}},
        {"kostka_2_0_3", {"kostka", "--kind", "2", "--list", "(2,0;3)", "(~2,~0,2,1)"}},
        {"project_m", {"project", "m[({0,1,7},{0,5},{2},{3,4},{6})]"}},
        {"inner_m_h", {"inner", "--n", "2", "--m", "1", "--from", "m", "--to", "h"}},
    };
    return all;
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

struct RunResult {
    int status = -1;
    std::string out;
};

/// Runs the tool with the given arguments, capturing stdout.
inline RunResult run(const std::string& exe, const std::vector<std::string>& args, bool merge_stderr = false) {
    std::string cmd = shell_quote(exe);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = raw >= 0 && (raw & 0x7f) == 0 ? (raw >> 8) & 0xff : -1;
    return r;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace golden
