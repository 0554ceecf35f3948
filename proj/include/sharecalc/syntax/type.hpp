#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sharecalc {

enum class TypeKind : std::uint8_t { atom, meta, arrow, lolli, grant, bang };

// Types of the three disciplines share one representation:
//   simple (LSC)   atom | arrow
//   sharing        atom | lolli | grant (~A) | bang (!A)
//   Bang           atom | bang | arrow whose domain is a bang
// Metavariables only appear during inference.
class Type {
public:
    Type() = default;
    static Type atom(std::string name);
    static Type meta(std::uint32_t id);
    static Type arrow(Type a, Type b);
    static Type lolli(Type a, Type b);
    static Type grant(Type a);
    static Type bang(Type a);

    explicit operator bool() const { return node_ != nullptr; }
    TypeKind kind() const;
    const std::string& name() const;
    std::uint32_t meta_id() const;
    const Type& left() const;
    const Type& right() const;
    const Type& child() const { return left(); }
    bool has_meta() const;

    friend bool operator==(const Type& a, const Type& b);

    struct Node;

private:
    explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Type::Node {
    TypeKind kind;
    std::string name;
    std::uint32_t id = 0;
    Type a, b;
    bool has_meta = false;
};

inline TypeKind Type::kind() const { return node_->kind; }
inline const std::string& Type::name() const { return node_->name; }
inline std::uint32_t Type::meta_id() const { return node_->id; }
inline const Type& Type::left() const { return node_->a; }
inline const Type& Type::right() const { return node_->b; }
inline bool Type::has_meta() const { return node_->has_meta; }

enum class TypeSyntax { simple, sharing, bang };

// Printing: `->` for simple and Bang arrows, `-o` for sharing.  Metas print as
// A, B, C, ... in order of first occurrence.
std::string print_type(const Type& t, TypeSyntax syn);
Type parse_type(const std::string& text, TypeSyntax syn);

struct TypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Union-find free substitution on metavariables with occurs check.
class Unifier {
public:
    Type fresh();
    Type resolve(const Type& t) const;  // deep application of the substitution
    // Throws TypeError with `what` on failure.
    void unify(const Type& a, const Type& b, const std::string& what);
    bool try_unify(const Type& a, const Type& b);

private:
    Type shallow(Type t) const;
    bool occurs(std::uint32_t id, const Type& t) const;
    std::uint32_t next_ = 0;
    std::unordered_map<std::uint32_t, Type> subst_;
};

// Renames metas to 0, 1, ... in order of first occurrence (for comparing
// principal types up to meta renaming).
Type normalize_metas(const Type& t);
// Replaces meta k by the atom printed for the k-th meta (A, B, ...).
Type freeze_metas(const Type& t);

}  // namespace sharecalc
