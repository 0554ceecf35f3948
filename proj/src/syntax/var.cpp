#include "sharecalc/syntax/var.hpp"

#include <algorithm>
#include <cctype>

namespace sharecalc {

std::string VarName::ident() const {
    if (!index) return name;
    return name + std::to_string(*index);
}

std::string VarName::str() const {
    if (sort == Sort::linear) return "'" + ident();
    return ident();
}

std::strong_ordering operator<=>(const VarName& a, const VarName& b) {
    if (auto c = a.sort <=> b.sort; c != 0) return c;
    if (auto c = a.name.compare(b.name); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.index <=> b.index;
}

std::size_t VarNameHash::operator()(const VarName& v) const noexcept {
    std::size_t h = std::hash<std::string>{}(v.name);
    h ^= (static_cast<std::size_t>(v.sort) + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
    std::size_t i = v.index ? *v.index + 1 : 0;
    h ^= (i + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
    return h;
}

bool contains(const VarSet& s, const VarName& v) { return std::binary_search(s.begin(), s.end(), v); }

void insert(VarSet& s, const VarName& v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || !(*it == v)) s.insert(it, v);
}

VarSet set_union(const VarSet& a, const VarSet& b) {
    VarSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VarName fresh_var(const VarName& base, const std::function<bool(const VarName&)>& taken) {
    VarName v{base.sort, base.name};
    if (!taken(v)) return v;
    // "x0" + index 1 would print as "x01" and re-read differently
    if (!v.name.empty() && std::isdigit(static_cast<unsigned char>(v.name.back()))) v.name += '_';
    for (std::uint32_t i = 1;; ++i) {
        v.index = i;
        if (!taken(v)) return v;
    }
}

VarName fresh_var(const VarName& base, const VarSet& avoid) {
    return fresh_var(base, [&](const VarName& v) { return contains(avoid, v); });
}

VarName var_from_ident(Sort sort, const std::string& ident) {
    std::size_t cut = ident.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(ident[cut - 1]))) --cut;
    // keep identifiers that are all digits after the first char intact, and
    // leading zeros would not round-trip, so they stay in the name
    if (cut == ident.size() || cut == 0 || ident[cut] == '0' || ident.size() - cut > 9)
        return {sort, ident};
    return {sort, ident.substr(0, cut), static_cast<std::uint32_t>(std::stoul(ident.substr(cut)))};
}

}  // namespace sharecalc
