#pragma once

#include <cstdint>
#include <vector>

namespace okore {

/// Generator letters are 1-based: 1..n.
using Letter = std::uint32_t;
using Path = std::vector<Letter>;

/// s_nu s_mu* with nu, mu multi-indices over {1..n}. Either side may be empty;
/// the empty/empty word is the unit.
struct Word {
    Path nu, mu;

    int degree() const { return static_cast<int>(nu.size()) - static_cast<int>(mu.size()); }
    std::size_t length() const { return nu.size() > mu.size() ? nu.size() : mu.size(); }
    bool is_unit() const { return nu.empty() && mu.empty(); }

    /// Canonical-basis condition: nu and mu may not both end with letter n.
    bool canonical(std::uint32_t n) const {
        return !(!nu.empty() && !mu.empty() && nu.back() == n && mu.back() == n);
    }

    friend bool operator==(const Word& a, const Word& b) {
        return a.nu == b.nu && a.mu == b.mu;
    }
};

/// Total order (degree, |mu|, nu, mu); this is also the serialization order.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.mu.size() != b.mu.size()) return a.mu.size() < b.mu.size();
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.mu < b.mu;
    }
};

inline std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

/// Lexicographic rank of a path among paths of the same length, letter 1
/// smallest, first letter most significant.
inline std::uint64_t path_index(const Path& p, std::uint32_t n) {
    std::uint64_t idx = 0;
    for (Letter a : p) idx = idx * n + (a - 1);
    return idx;
}

inline Path path_from_index(std::uint64_t idx, std::size_t len, std::uint32_t n) {
    Path p(len);
    for (std::size_t k = len; k-- > 0;) {
        p[k] = static_cast<Letter>(idx % n) + 1;
        idx /= n;
    }
    return p;
}

inline Path path_concat(Path a, const Path& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline bool path_is_prefix(const Path& pre, const Path& p) {
    if (pre.size() > p.size()) return false;
    for (std::size_t k = 0; k < pre.size(); ++k)
        if (pre[k] != p[k]) return false;
    return true;
}

}  // namespace okore
