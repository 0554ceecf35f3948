#include "sharecalc/syntax/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharecalc {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const Term& null_term() {
    static const Term t;
    return t;
}

}  // namespace

Term Term::var(VarName x) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::var;
    n->size = 1;
    n->hole = false;
    n->hash = mix(1, VarNameHash{}(x));
    n->fv = {x};
    n->var = std::move(x);
    return Term(std::move(n));
}

Term Term::hole() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::hole;
    n->size = 1;
    n->hole = true;
    n->hash = 0x51ed27;
    return Term(std::move(n));
}

Term Term::abs(VarName x, Term body) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::abs;
    n->size = body.size() + 1;
    n->hole = body.has_hole();
    n->hash = mix(mix(2, VarNameHash{}(x)), body.hash());
    n->fv = body.fv();
    if (auto it = std::lower_bound(n->fv.begin(), n->fv.end(), x); it != n->fv.end() && *it == x) n->fv.erase(it);
    n->var = std::move(x);
    n->c0 = std::move(body);
    return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::app;
    n->size = fn.size() + arg.size() + 1;
    n->hole = fn.has_hole() || arg.has_hole();
    n->hash = mix(mix(3, fn.hash()), arg.hash());
    n->fv = arg.fv().empty() ? fn.fv() : fn.fv().empty() ? arg.fv() : set_union(fn.fv(), arg.fv());
    n->c0 = std::move(fn);
    n->c1 = std::move(arg);
    return Term(std::move(n));
}

Term Term::es(Term body, VarName x, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::es;
    n->size = body.size() + arg.size() + 1;
    n->hole = body.has_hole() || arg.has_hole();
    n->hash = mix(mix(mix(4, body.hash()), VarNameHash{}(x)), arg.hash());
    VarSet bfv = body.fv();
    if (auto it = std::lower_bound(bfv.begin(), bfv.end(), x); it != bfv.end() && *it == x) bfv.erase(it);
    n->fv = set_union(bfv, arg.fv());
    n->var = std::move(x);
    n->c0 = std::move(body);
    n->c1 = std::move(arg);
    return Term(std::move(n));
}

Term Term::unary(Kind k, Term t) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->size = t.size() + 1;
    n->hole = t.has_hole();
    n->hash = mix(10 + static_cast<std::size_t>(k), t.hash());
    n->fv = t.fv();
    n->c0 = std::move(t);
    return Term(std::move(n));
}

Term Term::grant(Term t) { return unary(Kind::grant, std::move(t)); }
Term Term::request(Term t) { return unary(Kind::request, std::move(t)); }
Term Term::prom(Term t) { return unary(Kind::prom, std::move(t)); }
Term Term::der(Term t) { return unary(Kind::der, std::move(t)); }

Kind Term::kind() const { return node_->kind; }
const VarName& Term::name() const { return node_->var; }
const Term& Term::body() const { return node_->c0; }
const Term& Term::fn() const { return node_->c0; }
const Term& Term::arg() const { return node_->c1; }
const Term& Term::child() const { return node_->c0; }
const Term& Term::at(int i) const { return i == 0 ? node_->c0 : i == 1 ? node_->c1 : null_term(); }
std::uint32_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }
const VarSet& Term::fv() const { return node_->fv; }
bool Term::has_hole() const { return node_->hole; }

bool Term::is_unary() const {
    switch (kind()) {
    case Kind::grant: case Kind::request: case Kind::prom: case Kind::der: return true;
    default: return false;
    }
}

int Term::arity() const {
    switch (kind()) {
    case Kind::var: case Kind::hole: return 0;
    case Kind::app: case Kind::es: return 2;
    default: return 1;
    }
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
    switch (a.kind()) {
    case Kind::var: return a.name() == b.name();
    case Kind::hole: return true;
    case Kind::abs: return a.name() == b.name() && a.body() == b.body();
    case Kind::es: return a.name() == b.name() && a.body() == b.body() && a.arg() == b.arg();
    case Kind::app: return a.fn() == b.fn() && a.arg() == b.arg();
    default: return a.child() == b.child();
    }
}

Term with_children(const Term& t, const Term& c0, const Term& c1) {
    switch (t.kind()) {
    case Kind::var: case Kind::hole: return t;
    case Kind::abs: return c0.same_node(t.body()) ? t : Term::abs(t.name(), c0);
    case Kind::app: return c0.same_node(t.fn()) && c1.same_node(t.arg()) ? t : Term::app(c0, c1);
    case Kind::es:
        return c0.same_node(t.body()) && c1.same_node(t.arg()) ? t : Term::es(c0, t.name(), c1);
    default: return c0.same_node(t.child()) ? t : Term::unary(t.kind(), c0);
    }
}

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::var: return "Var";
    case Kind::abs: return "Abs";
    case Kind::app: return "App";
    case Kind::es: return "ES";
    case Kind::grant: return "Grant";
    case Kind::request: return "Request";
    case Kind::prom: return "Prom";
    case Kind::der: return "Der";
    case Kind::hole: return "Hole";
    }
    throw std::logic_error("bad kind");
}

}  // namespace sharecalc
