#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sharecalc/cli/cli.hpp"

namespace golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
};

struct Outcome {
    std::string name;
    bool matched = false;
    std::string expected;
    std::string actual;
};

inline std::vector<Case> load_cases(const std::filesystem::path& dir) {
    std::ifstream in(dir / "cases.json");
    if (!in) throw std::runtime_error("cannot open " + (dir / "cases.json").string());
    auto j = nlohmann::json::parse(in);
    std::vector<Case> out;
    for (const auto& c : j) out.push_back({c.at("name"), c.at("args").get<std::vector<std::string>>()});
    return out;
}

// Transcript layout: the command line, stdout, stderr (if any), exit code.
inline std::string transcript(const Case& c) {
    std::istringstream in;
    std::ostringstream out, err;
    int code = sharecalc::cli::run_cli(c.args, in, out, err);
    std::string t = "$ sharecalc";
    for (const auto& a : c.args) t += " " + nlohmann::json(a).dump();
    t += "\n" + out.str();
    if (!err.str().empty()) t += "--- stderr\n" + err.str();
    t += "--- exit " + std::to_string(code) + "\n";
    return t;
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return {};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::vector<Outcome> run_all(const std::filesystem::path& dir, bool update = false) {
    std::vector<Outcome> res;
    for (const auto& c : load_cases(dir)) {
        auto file = dir / "transcripts" / (c.name + ".txt");
        Outcome o{c.name, false, slurp(file), transcript(c)};
        if (update) {
            std::ofstream(file, std::ios::binary) << o.actual;
            o.expected = o.actual;
        }
        o.matched = o.expected == o.actual;
        res.push_back(std::move(o));
    }
    return res;
}

}  // namespace golden
