#include "sharecalc/syntax/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace sharecalc {

namespace {

enum class Tok { ident, lident, lambda, dot, lparen, rparen, lbrack, rbrack, assign, bang, tilde, hash, kw_open, kw_der, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto is_id0 = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_id = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < s.size()) {
        char c = s[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        int l = line, cl = col;
        auto single = [&](Tok k) {
            out.push_back({k, std::string(1, c), l, cl});
            ++i;
            ++col;
        };
        switch (c) {
        case '\\': single(Tok::lambda); continue;
        case '.': single(Tok::dot); continue;
        case '(': single(Tok::lparen); continue;
        case ')': single(Tok::rparen); continue;
        case '[': single(Tok::lbrack); continue;
        case ']': single(Tok::rbrack); continue;
        case '!': single(Tok::bang); continue;
        case '~': single(Tok::tilde); continue;
        case '#': single(Tok::hash); continue;
        case ':':
            if (i + 1 < s.size() && s[i + 1] == '=') {
                out.push_back({Tok::assign, ":=", l, cl});
                i += 2;
                col += 2;
                continue;
            }
            throw ParseError(l, cl, "expected ':='");
        default: break;
        }
        bool linear = false;
        std::size_t j = i;
        if (c == '\'') {
            linear = true;
            ++j;
        }
        if (j < s.size() && is_id0(s[j])) {
            std::size_t k = j;
            while (k < s.size() && is_id(s[k])) ++k;
            std::string id = s.substr(j, k - j);
            Tok kind = linear ? Tok::lident : Tok::ident;
            if (!linear && id == "open") kind = Tok::kw_open;
            if (!linear && id == "der") kind = Tok::kw_der;
            out.push_back({kind, id, l, cl});
            col += static_cast<int>(k - i);
            i = k;
            continue;
        }
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, Language lang, bool allow_hole)
        : toks_(lex(text)), lang_(lang), allow_hole_(allow_hole) {}

    Term run() {
        Term t = term();
        if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
        if (allow_hole_ && holes_ != 1) fail("a context needs exactly one hole");
        return t;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    Language lang_;
    bool allow_hole_;
    int holes_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, peek().col, msg); }
    [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++pos_;
    }

    VarName variable(const Token& t) {
        if (t.kind == Tok::lident) {
            if (lang_ != Language::sharing)
                fail_at(t, "linear variable '" + t.text + " outside a sharing term");
            return var_from_ident(Sort::linear, t.text);
        }
        return var_from_ident(lang_ == Language::sharing ? Sort::unrestricted : Sort::plain, t.text);
    }

    bool starts_operand(Tok k) const {
        switch (k) {
        case Tok::ident: case Tok::lident: case Tok::lparen: case Tok::bang: case Tok::tilde:
        case Tok::hash: case Tok::kw_open: case Tok::kw_der:
            return true;
        default: return false;
        }
    }

    Term term() {
        if (peek().kind == Tok::lambda) return lambda();
        Term t = prefix();
        while (true) {
            if (starts_operand(peek().kind)) {
                t = Term::app(t, prefix());
            } else if (peek().kind == Tok::lambda) {
                t = Term::app(t, lambda());
                break;
            } else {
                break;
            }
        }
        return t;
    }

    Term lambda() {
        expect(Tok::lambda, "'\\'");
        Token b = next();
        if (b.kind != Tok::ident && b.kind != Tok::lident) fail_at(b, "expected a binder after '\\'");
        VarName x = variable(b);
        if (lang_ == Language::sharing && x.sort != Sort::linear)
            fail_at(b, "abstraction must bind a linear variable ('" + b.text + ")");
        expect(Tok::dot, "'.'");
        return Term::abs(x, term());
    }

    Term prefix() {
        Token t = peek();
        if (t.kind == Tok::bang || t.kind == Tok::tilde) {
            ++pos_;
            if (t.kind == Tok::bang && lang_ == Language::lsc) fail_at(t, "'!' is not part of LSC terms");
            if (t.kind == Tok::tilde && lang_ != Language::sharing) fail_at(t, "'~' only occurs in sharing terms");
            Term c = peek().kind == Tok::lambda ? lambda() : prefix();
            return t.kind == Tok::bang ? Term::prom(c) : Term::grant(c);
        }
        return postfix();
    }

    Term postfix() {
        Term a = atom();
        while (peek().kind == Tok::lbrack) {
            ++pos_;
            Token b = next();
            if (b.kind != Tok::ident && b.kind != Tok::lident) fail_at(b, "expected a variable after '['");
            VarName x = variable(b);
            if (x.sort == Sort::linear) fail_at(b, "explicit substitutions bind unrestricted variables");
            expect(Tok::assign, "':='");
            Term s = term();
            expect(Tok::rbrack, "']'");
            a = Term::es(a, x, s);
        }
        return a;
    }

    Term atom() {
        Token t = next();
        switch (t.kind) {
        case Tok::ident:
        case Tok::lident: return Term::var(variable(t));
        case Tok::lparen: {
            Term inner = term();
            expect(Tok::rparen, "')'");
            return inner;
        }
        case Tok::kw_open:
        case Tok::kw_der: {
            if (t.kind == Tok::kw_open && lang_ != Language::sharing) fail_at(t, "'open' only occurs in sharing terms");
            if (t.kind == Tok::kw_der && lang_ != Language::bang) fail_at(t, "'der' only occurs in Bang terms");
            expect(Tok::lparen, "'('");
            Term inner = term();
            expect(Tok::rparen, "')'");
            return t.kind == Tok::kw_open ? Term::request(inner) : Term::der(inner);
        }
        case Tok::hash:
            if (!allow_hole_) fail_at(t, "hole outside a context");
            ++holes_;
            return Term::hole();
        case Tok::end: fail_at(t, "unexpected end of input");
        default: fail_at(t, "unexpected '" + t.text + "'");
        }
    }
};

enum class Lvl { top, fn, arg, prefix, under_grant, es_body };

void print_rec(const Term& t, Lvl lvl, std::string& out) {
    auto wrap = [&](bool paren, auto&& body) {
        if (paren) out += '(';
        body();
        if (paren) out += ')';
    };
    switch (t.kind()) {
    case Kind::var: out += t.name().str(); return;
    case Kind::hole: out += '#'; return;
    case Kind::abs:
        wrap(lvl != Lvl::top, [&] {
            out += '\\';
            out += t.name().str();
            out += ". ";
            print_rec(t.body(), Lvl::top, out);
        });
        return;
    case Kind::app:
        wrap(lvl == Lvl::arg || lvl == Lvl::prefix || lvl == Lvl::under_grant || lvl == Lvl::es_body, [&] {
            print_rec(t.fn(), Lvl::fn, out);
            out += ' ';
            print_rec(t.arg(), Lvl::arg, out);
        });
        return;
    case Kind::es:
        print_rec(t.body(), Lvl::es_body, out);
        out += '[';
        out += t.name().str();
        out += " := ";
        print_rec(t.arg(), Lvl::top, out);
        out += ']';
        return;
    case Kind::request:
    case Kind::der:
        out += t.kind() == Kind::request ? "open(" : "der(";
        print_rec(t.child(), Lvl::top, out);
        out += ')';
        return;
    case Kind::grant:
    case Kind::prom: {
        bool paren = lvl == Lvl::fn || lvl == Lvl::arg || lvl == Lvl::es_body ||
                     (lvl == Lvl::under_grant && t.kind() == Kind::prom);
        wrap(paren, [&] {
            out += t.kind() == Kind::grant ? '~' : '!';
            print_rec(t.child(), t.kind() == Kind::grant ? Lvl::under_grant : Lvl::prefix, out);
        });
        return;
    }
    }
}

void ast_rec(const Term& t, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    if (t.kind() == Kind::var) {
        switch (t.name().sort) {
        case Sort::plain: out += "Var "; break;
        case Sort::linear: out += "LVar "; break;
        case Sort::unrestricted: out += "UVar "; break;
        }
        out += t.name().str();
        out += '\n';
        return;
    }
    out += kind_name(t.kind());
    if (t.is_binder()) {
        out += ' ';
        out += t.name().str();
    }
    out += '\n';
    for (int i = 0; i < t.arity(); ++i) ast_rec(t.at(i), depth + 1, out);
}

struct AstLine {
    int depth;
    std::string head, name;
    int lineno;
};

VarName ast_var(const std::string& s, Sort sort) {
    if (sort == Sort::linear) {
        if (s.empty() || s[0] != '\'') throw std::invalid_argument("linear variable needs a quote: " + s);
        return var_from_ident(Sort::linear, s.substr(1));
    }
    return var_from_ident(sort, s);
}

Sort binder_sort(const std::string& s, Sort dflt) {
    if (!s.empty() && s[0] == '\'') return Sort::linear;
    return dflt;
}

Term ast_build(const std::vector<AstLine>& lines, std::size_t& i, int depth, Sort plainish) {
    if (i >= lines.size()) throw ParseError(static_cast<int>(i) + 1, 1, "truncated AST");
    const AstLine& l = lines[i];
    if (l.depth != depth) throw ParseError(l.lineno, 1, "bad indentation");
    ++i;
    auto sub = [&]() { return ast_build(lines, i, depth + 1, plainish); };
    if (l.head == "Var") return Term::var(ast_var(l.name, Sort::plain));
    if (l.head == "LVar") return Term::var(ast_var(l.name, Sort::linear));
    if (l.head == "UVar") return Term::var(ast_var(l.name, Sort::unrestricted));
    if (l.head == "Hole") return Term::hole();
    if (l.head == "Abs" || l.head == "ES") {
        if (l.name.empty()) throw ParseError(l.lineno, 1, "binder missing");
        if (l.head == "Abs") {
            // binder sort is recovered from the quote, or from the body's occurrences
            Term body = sub();
            Sort s = binder_sort(l.name, plainish);
            std::string nm = s == Sort::linear ? l.name.substr(1) : l.name;
            return Term::abs(var_from_ident(s, nm), body);
        }
        Term body = sub();
        Term arg = sub();
        return Term::es(body, var_from_ident(plainish, l.name), arg);
    }
    if (l.head == "App") {
        Term f = sub();
        Term a = sub();
        return Term::app(f, a);
    }
    if (l.head == "Grant") return Term::grant(sub());
    if (l.head == "Request") return Term::request(sub());
    if (l.head == "Prom") return Term::prom(sub());
    if (l.head == "Der") return Term::der(sub());
    throw ParseError(l.lineno, 1, "unknown constructor " + l.head);
}

}  // namespace

Term parse_term(const std::string& text, Language lang) { return Parser(text, lang, false).run(); }
Term parse_context(const std::string& text, Language lang) { return Parser(text, lang, true).run(); }

std::string print_term(const Term& t) {
    std::string out;
    print_rec(t, Lvl::top, out);
    return out;
}

std::string ast_text(const Term& t) {
    std::string out;
    ast_rec(t, 0, out);
    return out;
}

Term parse_ast_text(const std::string& text) {
    std::vector<AstLine> lines;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool sharing = false;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.find_first_not_of(' ') == std::string::npos) continue;
        std::size_t ind = raw.find_first_not_of(' ');
        if (ind % 2 != 0) throw ParseError(lineno, 1, "odd indentation");
        std::istringstream ls(raw.substr(ind));
        AstLine l{static_cast<int>(ind / 2), "", "", lineno};
        ls >> l.head >> l.name;
        if (l.head == "LVar" || l.head == "UVar" || l.head == "Grant" || l.head == "Request") sharing = true;
        lines.push_back(l);
    }
    std::size_t i = 0;
    Term t = ast_build(lines, i, 0, sharing ? Sort::unrestricted : Sort::plain);
    if (i != lines.size()) throw ParseError(lines[i].lineno, 1, "trailing AST lines");
    return t;
}

void validate(const Term& t, Language lang, bool allow_hole) {
    auto want = lang == Language::sharing ? Sort::unrestricted : Sort::plain;
    switch (t.kind()) {
    case Kind::hole:
        if (!allow_hole) throw SortError("hole outside a context");
        return;
    case Kind::var:
        if (lang == Language::sharing ? t.name().sort == Sort::plain : t.name().sort != Sort::plain)
            throw SortError("variable " + t.name().str() + " has the wrong sort for a " + language_name(lang) + " term");
        return;
    case Kind::abs:
        if (lang == Language::sharing ? t.name().sort != Sort::linear : t.name().sort != Sort::plain)
            throw SortError("abstraction binder " + t.name().str() + " has the wrong sort");
        break;
    case Kind::es:
        if (t.name().sort != want) throw SortError("substitution binder " + t.name().str() + " has the wrong sort");
        break;
    case Kind::grant:
    case Kind::request:
        if (lang != Language::sharing) throw SortError(std::string(kind_name(t.kind())) + " outside a sharing term");
        break;
    case Kind::prom:
        if (lang == Language::lsc) throw SortError("promotion inside an LSC term");
        break;
    case Kind::der:
        if (lang != Language::bang) throw SortError("dereliction outside a Bang term");
        break;
    case Kind::app: break;
    }
    for (int i = 0; i < t.arity(); ++i) validate(t.at(i), lang, allow_hole);
}

bool conforms(const Term& t, Language lang) {
    try {
        validate(t, lang);
        return true;
    } catch (const SortError&) {
        return false;
    }
}

const char* language_name(Language lang) {
    switch (lang) {
    case Language::lsc: return "lsc";
    case Language::sharing: return "sharing";
    case Language::bang: return "bang";
    }
    return "?";
}

}  // namespace sharecalc
