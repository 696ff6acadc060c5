#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "okore/scalar.hpp"

namespace okore {

/// x += a * y, pruning zero entries.
template <class Vec>
void vec_axpy(Vec& x, const Scalar& a, const Vec& y) {
    if (a.is_zero()) return;
    for (const auto& [k, c] : y) {
        auto [it, fresh] = x.try_emplace(k, a * c);
        if (!fresh) {
            it->second += a * c;
            if (it->second.is_zero()) x.erase(it);
        }
    }
}

/// Incremental row-echelon structure over an ordered key type. Pivot rows are
/// normalized to leading coefficient 1 and stored keyed by their pivot, so a
/// single forward pass fully reduces any vector: eliminating the current
/// smallest key only introduces larger keys.
template <class Key, class Less = std::less<Key>>
class Echelon {
  public:
    using Vec = std::map<Key, Scalar, Less>;

    Vec reduce(Vec v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            Scalar c = it->second;
            vec_axpy(v, -c, p->second);
            it = v.upper_bound(p->first);
        }
        return v;
    }

    /// Inserts v if independent of the current span; returns true when the
    /// rank grew.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar lead = v.begin()->second;
        Scalar inv = lead.inverse();
        for (auto& [k, c] : v) c *= inv;
        Key pivot = v.begin()->first;
        rows_.emplace(std::move(pivot), std::move(v));
        return true;
    }

    bool contains(const Vec& v) const { return reduce(v).empty(); }
    std::size_t rank() const { return rows_.size(); }
    const std::map<Key, Vec, Less>& rows() const { return rows_; }

  private:
    std::map<Key, Vec, Less> rows_;
};

using IndexVec = std::map<std::size_t, Scalar>;

/// Exact basis of {x : E x = 0} for the sparse equation rows over unknowns
/// 0..num_vars-1. Free variables are set to 1 one at a time and pivot
/// variables read off the reduced echelon form.
inline std::vector<IndexVec> nullspace(std::size_t num_vars, const std::vector<IndexVec>& eqs) {
    Echelon<std::size_t> ech;
    for (const auto& row : eqs) ech.insert(row);

    // Back-eliminate so every pivot row is reduced against later pivots.
    std::map<std::size_t, IndexVec> reduced;
    for (auto it = ech.rows().rbegin(); it != ech.rows().rend(); ++it) {
        IndexVec row = it->second;
        for (const auto& [pivot, prow] : reduced) {
            auto found = row.find(pivot);
            if (found == row.end()) continue;
            Scalar c = found->second;
            vec_axpy(row, -c, prow);
        }
        reduced.emplace(it->first, std::move(row));
    }

    std::vector<IndexVec> basis;
    for (std::size_t var = 0; var < num_vars; ++var) {
        if (reduced.count(var)) continue;
        IndexVec sol;
        sol[var] = Scalar(1);
        for (const auto& [pivot, row] : reduced) {
            auto found = row.find(var);
            if (found != row.end()) sol[pivot] = -found->second;
        }
        basis.push_back(std::move(sol));
    }
    return basis;
}

}  // namespace okore
