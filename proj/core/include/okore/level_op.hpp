#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "okore/element.hpp"

namespace okore {

/// Exact matrix realizing a degree-k morphism at level r: rows indexed by
/// paths of length k+r, columns by paths of length r, both lexicographic with
/// letter 1 smallest. Stored sparsely; shapes at the interesting degrees grow
/// like n^(k+r) x n^r.
class LevelOperator {
  public:
    using Entry = std::pair<std::uint64_t, std::uint64_t>;
    using EntryMap = std::map<Entry, Scalar>;

    LevelOperator(std::uint32_t n, int k, std::uint32_t r);
    static LevelOperator identity(std::uint32_t n, std::uint32_t r);

    std::uint32_t gen_count() const { return n_; }
    int degree() const { return k_; }
    std::uint32_t level() const { return r_; }
    std::uint64_t rows() const { return pow_u64(n_, static_cast<std::uint32_t>(k_ + static_cast<int>(r_))); }
    std::uint64_t cols() const { return pow_u64(n_, r_); }

    const EntryMap& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    Scalar entry(std::uint64_t row, std::uint64_t col) const;
    void add(std::uint64_t row, std::uint64_t col, const Scalar& c);

    LevelOperator operator-() const;
    LevelOperator& operator+=(const LevelOperator& o);
    LevelOperator& operator-=(const LevelOperator& o);
    friend LevelOperator operator+(LevelOperator a, const LevelOperator& b) { return a += b; }
    friend LevelOperator operator-(LevelOperator a, const LevelOperator& b) { return a -= b; }
    friend LevelOperator operator*(const Scalar& c, const LevelOperator& m);

    friend bool operator==(const LevelOperator& a, const LevelOperator& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.r_ == b.r_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const LevelOperator& a, const LevelOperator& b) { return !(a == b); }

    /// Conjugate transpose; a degree-k level-r operator becomes degree -k at
    /// level k+r.
    LevelOperator adjoint() const;

    /// Composition this . rhs; requires level() == rhs.degree() + rhs.level().
    LevelOperator compose(const LevelOperator& rhs) const;

    /// Inclusion T -> T (x) id: appends one tensor factor on the right of both
    /// index sets. Isometric for the T*S inner product.
    LevelOperator iota() const;
    LevelOperator iota_power(std::uint32_t j) const;

  private:
    std::uint32_t n_;
    int k_;
    std::uint32_t r_;
    EntryMap entries_;
};

/// Per-degree matrix images of x at level r: s_nu s_mu* -> |nu><mu| (x) I.
/// Requires r >= |mu| for every term (LevelError otherwise).
std::map<int, LevelOperator> embed_word(const Element& x, std::uint32_t r);

/// Image of the degree-k component alone (zero operator if x has none).
LevelOperator embed_degree(const Element& x, int k, std::uint32_t r);

/// Inverse of embed_word on its image: reads the operator as a combination of
/// words s_row s_col* and canonicalizes.
Element dr_to_word(const LevelOperator& m);

/// Rank-one |eta><xi| from sparse coordinate vectors over paths of lengths
/// k+r and r.
LevelOperator frobenius(std::uint32_t n, int k, std::uint32_t r,
                        const std::map<std::uint64_t, Scalar>& eta,
                        const std::map<std::uint64_t, Scalar>& xi);

/// Composition after aligning levels: the operand sitting at the lower level
/// is padded on the right with iota until the composite is defined.
LevelOperator compose_padded(const LevelOperator& t, const LevelOperator& s);

}  // namespace okore
