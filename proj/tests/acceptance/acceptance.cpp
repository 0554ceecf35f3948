// One PASS/FAIL line per acceptance criterion.  Optional arguments select
// criteria by number, e.g. `acceptance 1 13`.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "../golden/golden.hpp"
#include "sharecalc/mscll/formula.hpp"
#include "sharecalc/oracle/properties.hpp"
#include "sharecalc/oracle/suites.hpp"

using namespace sharecalc;
using oracle::PropertyReport;

namespace {

std::string indented(const PropertyReport& r) {
    std::string s = oracle::report_text(r);
    while (!s.empty() && s.back() == '\n') s.pop_back();
    std::string out = "    ";
    for (char c : s) out += c == '\n' ? std::string("\n    ") : std::string(1, c);
    return out + "\n";
}

using Clock = std::chrono::steady_clock;

struct Outcome {
    PropertyReport report;
    std::string detail;
};

Outcome suites(const std::vector<std::string>& names) {
    Outcome o;
    for (const auto& n : names)
        for (const auto& e : oracle::suite_entries(n)) {
            PropertyReport r = oracle::run_entry(e, e.default_size);
            o.report.merge(r);
            o.detail += indented(r);
        }
    return o;
}

mscll::FKind dual(mscll::FKind k) {
    using mscll::FKind;
    switch (k) {
    case FKind::atom: return FKind::natom;
    case FKind::natom: return FKind::atom;
    case FKind::tensor: return FKind::par;
    case FKind::par: return FKind::tensor;
    case FKind::ofcourse: return FKind::whynot;
    case FKind::whynot: return FKind::ofcourse;
    case FKind::grant: return FKind::demand;
    case FKind::demand: return FKind::grant;
    }
    return k;
}

// De Morgan duality checked node by node, plus involution.
bool dual_of(const mscll::Formula& a, const mscll::Formula& n) {
    if (n.kind() != dual(a.kind())) return false;
    switch (a.kind()) {
    case mscll::FKind::atom:
    case mscll::FKind::natom: return a.name() == n.name();
    case mscll::FKind::tensor:
    case mscll::FKind::par: return dual_of(a.left(), n.left()) && dual_of(a.right(), n.right());
    default: return dual_of(a.left(), n.left());
    }
}

Outcome negation() {
    Outcome o;
    auto start = Clock::now();
    auto visit = [&](const mscll::Formula& a) {
        ++o.report.checked;
        mscll::Formula n = mscll::neg(a);
        if (!(mscll::neg(n) == a) || !dual_of(a, n))
            o.report.fail(mscll::print_formula(a), "involutive De Morgan dual", mscll::print_formula(n));
    };
    oracle::each_formula({"a"}, 3, 5, visit);
    oracle::each_formula({"a", "b"}, 2, 2, visit);
    o.report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    o.report.id = "negation-involution";
    o.detail = indented(o.report);
    return o;
}

Outcome transcripts(const std::filesystem::path& dir) {
    Outcome o;
    for (const auto& r : golden::run_all(dir)) {
        ++o.report.checked;
        if (!r.matched) o.report.fail(r.name, r.expected, r.actual);
    }
    return o;
}

struct Criterion {
    int number;
    std::string title;
    double budget;  // seconds
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path golden_dir = GOLDEN_DIR;
    std::vector<Criterion> all = {
        {1, "left inverse of the translations, size <= 8", 60, [] { return suites({"left-inverse"}); }},
        {2, "simulation step bounds, size <= 7", 120, [] { return suites({"simulation"}); }},
        {3, "image closure and inverse simulation, size <= 6", 120, [] { return suites({"inverse"}); }},
        {4, "normal form preservation, size <= 8", 60, [] { return suites({"nf-preservation"}); }},
        {5, "normal form grammar adequacy, size <= 9", 120, [] { return suites({"nf-adequacy"}); }},
        {6, "subject reduction, size <= 8", 120, [] { return suites({"subject-reduction"}); }},
        {7, "confluence modulo flattening, size <= 8", 180, [] { return suites({"confluence"}); }},
        {8, "flattening bisimulation and gc postponement", 120,
         [] { return suites({"bisimulation", "postponement"}); }},
        {9, "strong normalization and its simulation", 180, [] { return suites({"sn", "sn-simulation"}); }},
        {10, "weak evaluation containment and simulation, size <= 7", 120, [] { return suites({"weak"}); }},
        {11, "Bang full/simplified mutual simulation, size <= 7", 60, [] { return suites({"bang"}); }},
        {12, "negation involution and logical soundness", 60,
         [] {
             Outcome o = negation();
             Outcome l = suites({"logic"});
             o.report.merge(l.report);
             o.detail += l.detail;
             return o;
         }},
        {13, "golden CLI transcripts", 10, [&] { return transcripts(golden_dir); }},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.number)) continue;
        auto start = Clock::now();
        Outcome o;
        std::string error;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const auto& r = o.report;
        bool pass = error.empty() && r.ok() && r.checked > 0 && secs <= c.budget;
        if (!pass) ++failed;
        char timing[48];
        std::snprintf(timing, sizeof timing, "%.1fs of %.0fs", secs, c.budget);
        std::cout << (pass ? "PASS " : "FAIL ") << c.number << ". " << c.title << ": " << r.checked << " checked, "
                  << r.failure_count << " failed, " << r.inconclusive << " inconclusive (" << timing << ")\n";
        if (!error.empty()) std::cout << "    error: " << error << "\n";
        std::cout << o.detail;
        if (o.detail.empty())
            for (const auto& f : r.failures)
                std::cout << "    counterexample: " << f.input << "\n      expected: " << f.expected
                          << "\n      actual:   " << f.actual << "\n";
        std::cout.flush();
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
