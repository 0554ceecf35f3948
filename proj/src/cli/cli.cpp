#include "sharecalc/cli/cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sharecalc/bang/bang.hpp"
#include "sharecalc/lsc/typing.hpp"
#include "sharecalc/lsc/weak.hpp"
#include "sharecalc/mscll/derivation.hpp"
#include "sharecalc/oracle/suites.hpp"
#include "sharecalc/sharing/flatten.hpp"
#include "sharecalc/sharing/normal_forms.hpp"
#include "sharecalc/sharing/typing.hpp"
#include "sharecalc/sharing/weak.hpp"
#include "sharecalc/syntax/text.hpp"
#include "sharecalc/translations/translate.hpp"

namespace sharecalc::cli {

namespace {

// Reported with exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCalculi = {"cbn", "cbv", "cbs", "cbnd", "sharing", "bang", "bang-full"};

Language calculus_language(const std::string& c) {
    if (c == "sharing") return Language::sharing;
    if (c == "bang" || c == "bang-full") return Language::bang;
    return Language::lsc;
}

Language language_from_name(const std::string& s) {
    if (s == "lsc") return Language::lsc;
    if (s == "bang") return Language::bang;
    return Language::sharing;
}

std::string read_term_text(const std::string& arg, std::istream& in) {
    if (arg != "-") return arg;
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

std::string path_text(const Path& p) {
    if (p.empty()) return "root";
    std::string s;
    for (auto i : p) s += (s.empty() ? "" : ".") + std::to_string(i);
    return s;
}

struct Move {
    std::string label;
    Term result;
    Path pos;
};

std::vector<Move> full_moves(const Term& t, const std::string& calc) {
    std::vector<Move> out;
    if (calc == "sharing") {
        for (auto& s : sharing::redexes(t)) out.push_back({sharing::rule_name(s.rule), s.reduct, s.position});
    } else if (calc == "bang" || calc == "bang-full") {
        bool simplified = calc == "bang";
        if (simplified && !bang::is_simplified(t)) throw DomainError("der is not a simplified Bang term; use bang-full");
        for (auto& s : bang::redexes(t, simplified)) out.push_back({bang::rule_name(s.rule), s.reduct, s.position});
    } else {
        for (auto& s : lsc::redexes(t, *lsc::calculus_from_name(calc)))
            out.push_back({lsc::rule_name(s.rule), s.reduct, s.position});
    }
    return out;
}

std::vector<Move> weak_moves(const Term& t, const std::string& calc) {
    std::vector<Move> out;
    if (calc == "sharing") {
        for (auto& s : sharing::weak_eval(t)) out.push_back({sharing::to_string(s.name), s.result, s.position});
    } else if (calc == "cbn" || calc == "cbv" || calc == "cbs") {
        for (auto& s : lsc::weak_eval_steps(t, *lsc::calculus_from_name(calc)))
            out.push_back({lsc::to_string(s.name), s.result, s.position});
    } else {
        throw DomainError("no weak evaluation for " + calc);
    }
    return out;
}

// Follows the first step until none is left or the budget is spent.
void run_steps(const Term& t, const std::string& calc, bool weak, std::size_t max_steps, bool trace,
               std::ostream& out) {
    Term cur = t;
    if (trace) out << print_term(cur) << "\n";
    for (std::size_t i = 0; i < max_steps; ++i) {
        std::vector<Move> ms = weak ? weak_moves(cur, calc) : full_moves(cur, calc);
        if (ms.empty()) break;
        cur = ms.front().result;
        if (trace) out << "  -" << ms.front().label << "-> " << print_term(cur) << "\n";
    }
    if (!trace) out << print_term(cur) << "\n";
}

std::string context_text(const sharing::Context& delta, const sharing::Context& gamma) {
    auto join = [](const sharing::Context& c) {
        std::string s;
        for (auto& [x, a] : c) s += (s.empty() ? "" : ", ") + x.str() + " : " + print_type(a, TypeSyntax::sharing);
        return s;
    };
    std::string d = join(delta), g = join(gamma);
    return (d.empty() ? "" : d + " ") + ";" + (g.empty() ? "" : " " + g);
}

template <class Env>
std::string env_text(const Env& env, TypeSyntax syn) {
    std::string s;
    for (auto& [x, a] : env) s += (s.empty() ? "" : ", ") + x.str() + " : " + print_type(a, syn);
    return s;
}

nlohmann::json report_json(const oracle::PropertyReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (auto& f : r.failures) fails.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"id", r.id},          {"checked", r.checked}, {"failed", r.failure_count},
            {"inconclusive", r.inconclusive}, {"seconds", r.seconds}, {"failures", fails}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for the sharing calculus, LSC, Bang and MSCLL", "sharecalc"};
    app.require_subcommand(1);

    std::string term_arg, lang = "sharing", calc = "sharing", strategy = "full", kind, suite;
    std::size_t max_steps = 1;
    std::uint32_t size = 0;
    bool ast = false, trace = false, deterministic = false, list = false, inverse = false, image = false,
         as_type = false, mscll = false, cls = false, json_summary = false;

    auto lang_opt = [&](CLI::App* s) {
        s->add_option("--lang", lang, "Object language")->check(CLI::IsMember({"lsc", "sharing", "bang"}));
    };
    auto calc_opt = [&](CLI::App* s) {
        s->add_option("--calculus", calc, "Reduction relation")->check(CLI::IsMember(kCalculi));
    };
    auto term_pos = [&](CLI::App* s, bool required = true) {
        auto* o = s->add_option("term", term_arg, "Term, or - for standard input");
        if (required) o->required();
    };

    auto* parse = app.add_subcommand("parse", "Parse and print a term");
    lang_opt(parse);
    parse->add_flag("--ast", ast, "Print the structured-text AST");
    term_pos(parse);

    auto* reduce = app.add_subcommand("reduce", "Contract the first redex, repeatedly");
    calc_opt(reduce);
    reduce->add_option("--strategy", strategy, "full or weak")->check(CLI::IsMember({"full", "weak"}));
    reduce->add_option("--max-steps", max_steps, "Number of steps (default 1)");
    reduce->add_flag("--trace", trace, "Print every intermediate term");
    reduce->add_flag("--list", list, "List every redex of the term instead");
    reduce->add_flag("--deterministic", deterministic, "Accepted for symmetry; reduce always takes the first redex");
    term_pos(reduce);

    auto* eval = app.add_subcommand("eval", "Weak evaluation steps");
    calc_opt(eval);
    eval->add_flag("--deterministic", deterministic, "Evaluate with the first step instead of listing");
    eval->add_flag("--trace", trace, "With --deterministic, print every step");
    eval->add_option("--max-steps", max_steps, "Step budget with --deterministic (default 1000)");
    term_pos(eval);

    auto* translate = app.add_subcommand("translate", "Translations into the sharing calculus");
    translate->add_option("--kind", kind, "cbn, cbv, cbs or bang")
        ->required()
        ->check(CLI::IsMember({"cbn", "cbv", "cbs", "bang"}));
    translate->add_flag("--inverse", inverse, "Translate an image term back");
    translate->add_flag("--image", image, "Decide image membership");
    translate->add_flag("--type", as_type, "The argument is a type");
    term_pos(translate);

    auto* typecheck = app.add_subcommand("typecheck", "Principal typing");
    lang_opt(typecheck);
    typecheck->add_flag("--mscll", mscll, "Also print and check the compiled MSCLL derivation");
    term_pos(typecheck);

    auto* nf = app.add_subcommand("nf", "Normal-form classification");
    calc_opt(nf);
    nf->add_flag("--class", cls, "Print the flattening class instead");
    term_pos(nf);

    auto* check = app.add_subcommand("check", "Run a property suite");
    check->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(oracle::suite_names()));
    check->add_option("--size", size, "Largest enumerated size (default per property)");
    check->add_flag("--json-summary", json_summary, "Machine-readable report");
    term_pos(check, false);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }
    if (eval->parsed() && max_steps == 1 && eval->count("--max-steps") == 0) max_steps = 1000;

    try {
        std::string text = read_term_text(term_arg, in);
        if (parse->parsed()) {
            Term t = parse_term(text, language_from_name(lang));
            out << (ast ? ast_text(t) : print_term(t) + "\n");
        } else if (reduce->parsed()) {
            Term t = parse_term(text, calculus_language(calc));
            bool weak = strategy == "weak";
            if (list) {
                for (auto& m : weak ? weak_moves(t, calc) : full_moves(t, calc))
                    out << m.label << " @" << path_text(m.pos) << "  " << print_term(m.result) << "\n";
            } else {
                run_steps(t, calc, weak, max_steps, trace, out);
            }
        } else if (eval->parsed()) {
            Term t = parse_term(text, calculus_language(calc));
            if (deterministic) {
                run_steps(t, calc, true, max_steps, trace, out);
            } else {
                for (auto& m : weak_moves(t, calc)) out << m.label << "  " << print_term(m.result) << "\n";
            }
        } else if (translate->parsed()) {
            auto k = *translations::kind_from_name(kind);
            Language src = translations::source_language(k);
            TypeSyntax src_syn = src == Language::bang ? TypeSyntax::bang : TypeSyntax::simple;
            if (as_type) {
                Type a = parse_type(text, inverse ? TypeSyntax::sharing : src_syn);
                if (inverse) throw DomainError("types have no inverse translation");
                out << print_type(translations::translate_type(a, k), TypeSyntax::sharing) << "\n";
            } else if (image) {
                auto m = translations::in_image(parse_term(text, Language::sharing), k);
                if (!m) throw DomainError(std::string("not a member of the ") + kind + " image");
                std::string w;
                for (auto& p : m->witness) w += (w.empty() ? "" : ", ") + p;
                out << "member: " << w << "\n";
            } else if (inverse) {
                out << print_term(translations::inverse(parse_term(text, Language::sharing), k)) << "\n";
            } else {
                out << print_term(translations::translate(parse_term(text, src), k)) << "\n";
            }
        } else if (typecheck->parsed()) {
            Language l = language_from_name(lang);
            Term t = parse_term(text, l);
            if (l == Language::sharing) {
                sharing::TypingResult r = sharing::infer_principal(t);
                const auto& root = r.derivation;
                if (!t.fv().empty()) out << context_text(root.delta, root.gamma) << " |- ";
                out << print_type(r.type, TypeSyntax::sharing) << "\n";
                if (mscll) {
                    mscll::Derivation d = mscll::compile_typing(root);
                    out << mscll::derivation_text(d);
                    auto errors = mscll::check_derivation(d);
                    for (auto& e : errors) out << "error: " << mscll::print_error(e) << "\n";
                    if (!errors.empty()) return 1;
                    auto n = mscll::derivation_size(d);
                    out << "derivation ok, " << n << (n == 1 ? " rule\n" : " rules\n");
                }
            } else {
                if (mscll) throw DomainError("--mscll needs a sharing term");
                if (l == Language::lsc) {
                    auto p = lsc::infer_principal(t);
                    if (!p.env.empty()) out << env_text(p.env, TypeSyntax::simple) << " |- ";
                    out << print_type(p.type, TypeSyntax::simple) << "\n";
                } else {
                    auto p = bang::infer_principal(t);
                    if (!p.env.empty()) out << env_text(p.env, TypeSyntax::bang) << " |- ";
                    out << print_type(p.type, TypeSyntax::bang) << "\n";
                }
            }
        } else if (nf->parsed()) {
            Term t = parse_term(text, calculus_language(calc));
            if (cls) {
                if (calc != "sharing") throw DomainError("flattening classes are for sharing terms");
                for (const Term& c : sharing::flatten_class(t)) out << print_term(c) << "\n";
            } else if (calc == "sharing") {
                auto tag = sharing::classify_nf(t);
                out << (tag ? sharing::tag_name(*tag) : "none") << "\n";
            } else {
                out << (full_moves(t, calc).empty() ? "normal" : "reducible") << "\n";
            }
        } else if (check->parsed()) {
            auto entries = oracle::suite_entries(suite);
            std::vector<oracle::PropertyReport> reports;
            for (auto& e : entries) {
                if (term_arg.empty()) {
                    reports.push_back(oracle::run_entry(e, size ? size : e.default_size));
                    continue;
                }
                Term t;
                try {
                    t = parse_term(text, e.lang);
                } catch (const SortError&) {
                    continue;  // entry for another language
                } catch (const ParseError&) {
                    continue;
                }
                if (e.lang == Language::bang && e.simplified && !bang::is_simplified(t)) continue;
                oracle::PropertyReport r = e.check(t);
                r.id = e.id;
                reports.push_back(r);
            }
            if (reports.empty()) throw DomainError("the term belongs to no language of suite " + suite);
            bool ok = true;
            for (auto& r : reports) ok = ok && r.ok();
            if (json_summary) {
                nlohmann::json j = {{"suite", suite}, {"ok", ok}, {"reports", nlohmann::json::array()}};
                for (auto& r : reports) j["reports"].push_back(report_json(r));
                out << j.dump(2) << "\n";
            } else {
                for (auto& r : reports) out << oracle::report_text(r, term_arg.empty());
                out << (ok ? "ok" : "FAILED") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const SortError& e) {
        err << "sort error: " << e.what() << "\n";
        return 1;
    } catch (const TypeError& e) {
        err << "type error: " << e.what() << "\n";
        return 1;
    } catch (const translations::TranslationError& e) {
        err << "translation error: " << e.what() << "\n";
        return 1;
    } catch (const bang::SimplifiedError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sharecalc::cli
