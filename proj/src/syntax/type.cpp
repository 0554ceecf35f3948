#include "sharecalc/syntax/type.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace sharecalc {

Type Type::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::atom;
    n->name = std::move(name);
    return Type(std::move(n));
}

Type Type::meta(std::uint32_t id) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::meta;
    n->id = id;
    n->has_meta = true;
    return Type(std::move(n));
}

Type Type::arrow(Type a, Type b) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::arrow;
    n->has_meta = a.has_meta() || b.has_meta();
    n->a = std::move(a);
    n->b = std::move(b);
    return Type(std::move(n));
}

Type Type::lolli(Type a, Type b) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::lolli;
    n->has_meta = a.has_meta() || b.has_meta();
    n->a = std::move(a);
    n->b = std::move(b);
    return Type(std::move(n));
}

Type Type::grant(Type a) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::grant;
    n->has_meta = a.has_meta();
    n->a = std::move(a);
    return Type(std::move(n));
}

Type Type::bang(Type a) {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::bang;
    n->has_meta = a.has_meta();
    n->a = std::move(a);
    return Type(std::move(n));
}

namespace {

Type binary(TypeKind k, Type a, Type b) { return k == TypeKind::arrow ? Type::arrow(a, b) : Type::lolli(a, b); }

Type rebuild(const Type& t, const Type& a, const Type& b) {
    switch (t.kind()) {
    case TypeKind::arrow:
    case TypeKind::lolli: return binary(t.kind(), a, b);
    case TypeKind::grant: return Type::grant(a);
    case TypeKind::bang: return Type::bang(a);
    default: return t;
    }
}

std::string meta_letter(std::size_t i) {
    std::string s(1, static_cast<char>('A' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

void print_rec(const Type& t, TypeSyntax syn, bool left_of_arrow, std::map<std::uint32_t, std::size_t>& metas,
               std::string& out, bool under_grant) {
    switch (t.kind()) {
    case TypeKind::atom: out += t.name(); return;
    case TypeKind::meta: {
        auto it = metas.try_emplace(t.meta_id(), metas.size()).first;
        out += meta_letter(it->second);
        return;
    }
    case TypeKind::arrow:
    case TypeKind::lolli: {
        bool paren = left_of_arrow || under_grant;
        if (paren) out += '(';
        print_rec(t.left(), syn, true, metas, out, false);
        out += t.kind() == TypeKind::arrow ? " -> " : " -o ";
        print_rec(t.right(), syn, false, metas, out, false);
        if (paren) out += ')';
        return;
    }
    case TypeKind::grant:
    case TypeKind::bang: {
        bool paren = under_grant && t.kind() == TypeKind::bang;
        if (paren) out += '(';
        out += t.kind() == TypeKind::grant ? '~' : '!';
        print_rec(t.child(), syn, false, metas, out, true);
        if (paren) out += ')';
        return;
    }
    }
}

class TypeParser {
public:
    TypeParser(const std::string& s, TypeSyntax syn) : s_(s), syn_(syn) {}

    Type run() {
        Type t = arrow();
        skip();
        if (i_ != s_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    const std::string& s_;
    TypeSyntax syn_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& m) const {
        throw TypeError("type syntax at offset " + std::to_string(i_) + ": " + m);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(const char* tok) {
        skip();
        std::size_t n = std::char_traits<char>::length(tok);
        if (s_.compare(i_, n, tok) == 0) {
            i_ += n;
            return true;
        }
        return false;
    }

    Type arrow() {
        Type a = prefix();
        if (eat("->")) {
            if (syn_ == TypeSyntax::sharing) fail("'->' in a sharing type; use '-o'");
            Type b = arrow();
            if (syn_ == TypeSyntax::bang && a.kind() != TypeKind::bang) fail("Bang arrow domain must be !A");
            return Type::arrow(a, b);
        }
        if (eat("-o")) {
            if (syn_ != TypeSyntax::sharing) fail("'-o' outside a sharing type");
            return Type::lolli(a, arrow());
        }
        return a;
    }

    Type prefix() {
        if (eat("!")) {
            if (syn_ == TypeSyntax::simple) fail("'!' in a simple type");
            return Type::bang(prefix());
        }
        if (eat("~")) {
            if (syn_ != TypeSyntax::sharing) fail("'~' outside a sharing type");
            return Type::grant(prefix());
        }
        if (eat("(")) {
            Type t = arrow();
            if (!eat(")")) fail("expected ')'");
            return t;
        }
        skip();
        std::size_t j = i_;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        if (j == i_) fail("expected a type");
        std::string name = s_.substr(i_, j - i_);
        i_ = j;
        return Type::atom(name);
    }
};

void collect_order(const Type& t, std::map<std::uint32_t, std::uint32_t>& m) {
    switch (t.kind()) {
    case TypeKind::meta: m.try_emplace(t.meta_id(), static_cast<std::uint32_t>(m.size())); return;
    case TypeKind::atom: return;
    default:
        collect_order(t.left(), m);
        if (t.right()) collect_order(t.right(), m);
    }
}

Type map_metas(const Type& t, const std::map<std::uint32_t, std::uint32_t>& m, bool freeze) {
    if (!t.has_meta()) return t;
    if (t.kind() == TypeKind::meta) {
        auto k = m.at(t.meta_id());
        return freeze ? Type::atom(meta_letter(k)) : Type::meta(k);
    }
    return rebuild(t, map_metas(t.left(), m, freeze), t.right() ? map_metas(t.right(), m, freeze) : Type());
}

}  // namespace

bool operator==(const Type& a, const Type& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_ || a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TypeKind::atom: return a.name() == b.name();
    case TypeKind::meta: return a.meta_id() == b.meta_id();
    case TypeKind::grant:
    case TypeKind::bang: return a.child() == b.child();
    default: return a.left() == b.left() && a.right() == b.right();
    }
}

std::string print_type(const Type& t, TypeSyntax syn) {
    std::map<std::uint32_t, std::size_t> metas;
    std::string out;
    print_rec(t, syn, false, metas, out, false);
    return out;
}

Type parse_type(const std::string& text, TypeSyntax syn) { return TypeParser(text, syn).run(); }

Type Unifier::fresh() { return Type::meta(next_++); }

Type Unifier::shallow(Type t) const {
    while (t.kind() == TypeKind::meta) {
        auto it = subst_.find(t.meta_id());
        if (it == subst_.end()) break;
        t = it->second;
    }
    return t;
}

Type Unifier::resolve(const Type& t) const {
    if (!t.has_meta()) return t;
    Type s = shallow(t);
    switch (s.kind()) {
    case TypeKind::meta:
    case TypeKind::atom: return s;
    case TypeKind::grant:
    case TypeKind::bang: return rebuild(s, resolve(s.child()), Type());
    default: return rebuild(s, resolve(s.left()), resolve(s.right()));
    }
}

bool Unifier::occurs(std::uint32_t id, const Type& t) const {
    if (!t.has_meta()) return false;
    Type s = shallow(t);
    switch (s.kind()) {
    case TypeKind::meta: return s.meta_id() == id;
    case TypeKind::atom: return false;
    case TypeKind::grant:
    case TypeKind::bang: return occurs(id, s.child());
    default: return occurs(id, s.left()) || occurs(id, s.right());
    }
}

bool Unifier::try_unify(const Type& a0, const Type& b0) {
    Type a = shallow(a0), b = shallow(b0);
    if (a.kind() == TypeKind::meta && b.kind() == TypeKind::meta && a.meta_id() == b.meta_id()) return true;
    if (a.kind() == TypeKind::meta) {
        if (occurs(a.meta_id(), b)) return false;
        subst_[a.meta_id()] = b;
        return true;
    }
    if (b.kind() == TypeKind::meta) return try_unify(b, a);
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TypeKind::atom: return a.name() == b.name();
    case TypeKind::grant:
    case TypeKind::bang: return try_unify(a.child(), b.child());
    default: return try_unify(a.left(), b.left()) && try_unify(a.right(), b.right());
    }
}

void Unifier::unify(const Type& a, const Type& b, const std::string& what) {
    if (!try_unify(a, b)) throw TypeError(what);
}

Type normalize_metas(const Type& t) {
    std::map<std::uint32_t, std::uint32_t> m;
    collect_order(t, m);
    return map_metas(t, m, false);
}

Type freeze_metas(const Type& t) {
    if (!t.has_meta()) return t;
    if (t.kind() == TypeKind::meta) return Type::atom(meta_letter(t.meta_id()));
    return rebuild(t, freeze_metas(t.left()), t.right() ? freeze_metas(t.right()) : Type());
}

}  // namespace sharecalc
