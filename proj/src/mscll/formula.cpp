#include "sharecalc/mscll/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace sharecalc::mscll {

Formula make_formula(FKind k, std::string name, Formula a, Formula b) {
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    n->name = std::move(name);
    std::uint32_t da = a ? a.depth() + 1 : 0, db = b ? b.depth() + 1 : 0;
    n->depth = std::max(da, db);
    n->a = std::move(a);
    n->b = std::move(b);
    return Formula(std::move(n));
}

Formula Formula::atom(std::string name) { return make_formula(FKind::atom, std::move(name), {}, {}); }
Formula Formula::natom(std::string name) { return make_formula(FKind::natom, std::move(name), {}, {}); }
Formula Formula::tensor(Formula a, Formula b) { return make_formula(FKind::tensor, {}, std::move(a), std::move(b)); }
Formula Formula::par(Formula a, Formula b) { return make_formula(FKind::par, {}, std::move(a), std::move(b)); }
Formula Formula::ofcourse(Formula a) { return make_formula(FKind::ofcourse, {}, std::move(a), {}); }
Formula Formula::whynot(Formula a) { return make_formula(FKind::whynot, {}, std::move(a), {}); }
Formula Formula::grant(Formula a) { return make_formula(FKind::grant, {}, std::move(a), {}); }
Formula Formula::demand(Formula a) { return make_formula(FKind::demand, {}, std::move(a), {}); }
Formula Formula::unary(FKind k, Formula a) { return make_formula(k, {}, std::move(a), {}); }
Formula Formula::binary(FKind k, Formula a, Formula b) { return make_formula(k, {}, std::move(a), std::move(b)); }

bool Formula::is_unary() const {
    FKind k = kind();
    return k == FKind::ofcourse || k == FKind::whynot || k == FKind::grant || k == FKind::demand;
}

int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.is_atomic()) return a.name().compare(b.name());
    if (int c = compare(a.left(), b.left())) return c;
    return a.is_unary() ? 0 : compare(a.right(), b.right());
}

bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

Formula neg(const Formula& a) {
    switch (a.kind()) {
    case FKind::atom: return Formula::natom(a.name());
    case FKind::natom: return Formula::atom(a.name());
    case FKind::tensor: return Formula::par(neg(a.left()), neg(a.right()));
    case FKind::par: return Formula::tensor(neg(a.left()), neg(a.right()));
    case FKind::ofcourse: return Formula::whynot(neg(a.child()));
    case FKind::whynot: return Formula::ofcourse(neg(a.child()));
    case FKind::grant: return Formula::demand(neg(a.child()));
    case FKind::demand: return Formula::grant(neg(a.child()));
    }
    return a;
}

namespace {

const char* prefix_of(FKind k) {
    switch (k) {
    case FKind::ofcourse: return "!";
    case FKind::whynot: return "?";
    case FKind::grant: return "~";
    case FKind::demand: return "@";
    default: return "";
    }
}

void print_rec(const Formula& a, bool nested, std::string& out) {
    switch (a.kind()) {
    case FKind::atom: out += a.name(); return;
    case FKind::natom: out += a.name() + "^"; return;
    case FKind::tensor:
    case FKind::par:
        if (nested) out += "(";
        print_rec(a.left(), true, out);
        out += a.kind() == FKind::tensor ? " * " : " | ";
        print_rec(a.right(), true, out);
        if (nested) out += ")";
        return;
    default:
        out += prefix_of(a.kind());
        print_rec(a.child(), true, out);
    }
}

// formula ::= unary ((* | '|') unary)?   binary operands must be parenthesized
// unary   ::= (! | ? | ~ | @) unary | ident ^? | ( formula )
struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("formula: column " + std::to_string(i + 1) + ": " + msg);
    }
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    Formula formula() {
        Formula a = unary();
        ws();
        if (i < s.size() && (s[i] == '*' || s[i] == '|')) {
            FKind k = s[i] == '*' ? FKind::tensor : FKind::par;
            ++i;
            return Formula::binary(k, a, unary());
        }
        return a;
    }
    Formula unary() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        switch (c) {
        case '!': ++i; return Formula::ofcourse(unary());
        case '?': ++i; return Formula::whynot(unary());
        case '~': ++i; return Formula::grant(unary());
        case '@': ++i; return Formula::demand(unary());
        case '(': {
            ++i;
            Formula a = formula();
            ws();
            if (i >= s.size() || s[i] != ')') fail("expected ')'");
            ++i;
            return a;
        }
        default: break;
        }
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) fail(std::string("unexpected '") + c + "'");
        std::string name = s.substr(start, i - start);
        if (i < s.size() && s[i] == '^') {
            ++i;
            return Formula::natom(name);
        }
        return Formula::atom(name);
    }
};

}  // namespace

std::string print_formula(const Formula& a) {
    std::string out;
    print_rec(a, false, out);
    return out;
}

Formula parse_formula(const std::string& text) {
    Parser p{text};
    Formula a = p.formula();
    p.ws();
    if (p.i != text.size()) p.fail("trailing input");
    return a;
}

Formula embed_mell(const Formula& a) {
    switch (a.kind()) {
    case FKind::atom:
    case FKind::natom: return a;
    case FKind::tensor:
    case FKind::par: return Formula::binary(a.kind(), embed_mell(a.left()), embed_mell(a.right()));
    case FKind::ofcourse: return Formula::ofcourse(Formula::grant(embed_mell(a.child())));
    case FKind::whynot: return Formula::whynot(Formula::demand(embed_mell(a.child())));
    case FKind::grant:
    case FKind::demand: break;
    }
    throw std::invalid_argument("not a MELL formula: " + print_formula(a));
}

Formula type_to_formula(const Type& a) {
    switch (a.kind()) {
    case TypeKind::atom: return Formula::atom(a.name());
    case TypeKind::meta: return type_to_formula(freeze_metas(a));
    case TypeKind::lolli: return Formula::par(neg(type_to_formula(a.left())), type_to_formula(a.right()));
    case TypeKind::grant: return Formula::grant(type_to_formula(a.child()));
    case TypeKind::bang: return Formula::ofcourse(type_to_formula(a.child()));
    case TypeKind::arrow: break;
    }
    throw std::invalid_argument("not a sharing type");
}

Sequent::Sequent(std::vector<Formula> fs) : fs_(std::move(fs)) { std::sort(fs_.begin(), fs_.end()); }

bool Sequent::contains(const Formula& f) const { return std::binary_search(fs_.begin(), fs_.end(), f); }

Sequent Sequent::plus(const Formula& f) const {
    Sequent r = *this;
    r.fs_.insert(std::upper_bound(r.fs_.begin(), r.fs_.end(), f), f);
    return r;
}

Sequent Sequent::plus(const Sequent& o) const {
    std::vector<Formula> all = fs_;
    all.insert(all.end(), o.fs_.begin(), o.fs_.end());
    return Sequent(std::move(all));
}

Sequent Sequent::minus(const Formula& f, bool* ok) const {
    Sequent r = *this;
    auto it = std::lower_bound(r.fs_.begin(), r.fs_.end(), f);
    bool found = it != r.fs_.end() && *it == f;
    if (found) r.fs_.erase(it);
    if (ok) *ok = found;
    return r;
}

std::string print_sequent(const Sequent& s) {
    std::string out = "|-";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : " ") + print_formula(s.formulas()[k]);
    return out;
}

}  // namespace sharecalc::mscll
