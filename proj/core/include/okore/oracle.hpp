#pragma once

#include <cstdint>
#include <vector>

#include "okore/level_op.hpp"

namespace okore {

struct CommutantResult {
    std::size_t dimension;
    std::vector<LevelOperator> basis;
};

/// Exact commutant of the given square degree-0 operators inside the full
/// level-R matrix algebra: solves [x, g] = 0 for all generators.
CommutantResult commutant(const std::vector<LevelOperator>& generators);

/// Embeddings of lambda(w) at level R for every degree-0 canonical word w of
/// length <= R-1: the canonical generator set whose commutant realizes the
/// finite shadow of lambda[A]' within A.
std::vector<LevelOperator> lambda_core_generators(std::uint32_t n, std::uint32_t R);

/// Finite-level intertwiner data between the degree-k and degree-l towers.
///
/// At a fixed level r, maps commuting with the right action of every embedded
/// degree-0 word are exactly left multiplications T -> G T, so the bimodular
/// maps are parameterized by matrices G intertwining the two left actions
/// (per_level_dims counts those). Compatibility with the inclusion forces
/// G_{r+1} = G_r (x) id, so an iota-compatible tower is determined by its
/// bottom matrix subject to the intertwining constraints of every level up to
/// the horizon; horizon_dims[j] is the tower-space dimension with horizon
/// bottom+j. The invariant reported is the dimension at the full horizon,
/// flagged as stabilized when the last two horizons agree.
struct TowerReport {
    std::uint32_t n;
    int k, l;
    std::uint32_t bottom_level, max_level;
    std::vector<std::size_t> per_level_dims;
    std::vector<std::size_t> horizon_dims;
    std::size_t stabilized_dim;
    bool stabilized;
};

TowerReport intertwiner_tower(std::uint32_t n, int k, int l, std::uint32_t max_level);

struct SpanCheck {
    std::size_t target_count = 0;
    std::size_t covered = 0;
    bool full = false;
};

/// Do products of degree-k words (length <= len) with degree-l words span the
/// degree-(k+l) truncation at length <= len?
SpanCheck fusion_span_check(std::uint32_t n, int k, int l, std::size_t len);

/// Product of two pure-degree elements, checked to land in degree k+l.
Element fusion_product(const Element& x, const Element& y);

struct TensoratorReport {
    std::size_t samples = 0;
    bool inner_products_ok = false;
    SpanCheck range;
    bool passed() const { return inner_products_ok && range.full; }
};

/// Verifies (T.S)*(T'.S') = S*(T*T')S' on random exact operators after
/// iota-padding, plus the bounded-level dense-range surrogate for the
/// composition map.
TensoratorReport tensorator_check(std::uint32_t n, int k, int l, std::uint32_t r,
                                  std::size_t samples, std::uint64_t seed);

/// Numerical PSD check of a square degree-0 operator: smallest eigenvalue of
/// the Hermitian part >= -tol.
bool is_psd(const LevelOperator& op, double tol);

/// Number of canonical degree-k words with |mu| <= r (the embeddable ones).
std::size_t canonical_word_count(std::uint32_t n, int k, std::uint32_t r);

/// Rank of the level-r images of those words; equality with
/// canonical_word_count certifies that the matrix model annihilates exactly
/// the relation span.
std::size_t canonical_image_rank(std::uint32_t n, int k, std::uint32_t r);

}  // namespace okore
