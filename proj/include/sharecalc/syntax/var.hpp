#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sharecalc {

enum class Sort : std::uint8_t { plain, linear, unrestricted };

// A variable: sort, base name and optional freshness index ("x", "x2", "'a1").
struct VarName {
    Sort sort = Sort::plain;
    std::string name;
    std::optional<std::uint32_t> index;

    VarName() = default;
    VarName(Sort s, std::string n, std::optional<std::uint32_t> i = std::nullopt)
        : sort(s), name(std::move(n)), index(i) {}

    static VarName plain(std::string n) { return {Sort::plain, std::move(n)}; }
    static VarName linear(std::string n) { return {Sort::linear, std::move(n)}; }
    static VarName unrestricted(std::string n) { return {Sort::unrestricted, std::move(n)}; }

    // Identifier text without the linear sigil.
    std::string ident() const;
    // Printed form; linear variables carry a leading quote.
    std::string str() const;

    friend bool operator==(const VarName&, const VarName&) = default;
    friend std::strong_ordering operator<=>(const VarName& a, const VarName& b);
};

struct VarNameHash {
    std::size_t operator()(const VarName& v) const noexcept;
};

// Sorted, duplicate-free set of variables.
using VarSet = std::vector<VarName>;

bool contains(const VarSet& s, const VarName& v);
void insert(VarSet& s, const VarName& v);
VarSet set_union(const VarSet& a, const VarSet& b);

// Smallest-index variant of `base` (same sort and name) rejected by neither
// `taken` nor the set.  The unindexed name is tried first.
VarName fresh_var(const VarName& base, const std::function<bool(const VarName&)>& taken);
VarName fresh_var(const VarName& base, const VarSet& avoid);

// Splits "x12" into ("x", 12); identifiers without trailing digits get no index.
VarName var_from_ident(Sort sort, const std::string& ident);

}  // namespace sharecalc
