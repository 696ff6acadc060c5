#pragma once

#include <optional>
#include <vector>

#include "okore/element.hpp"
#include "okore/linalg.hpp"

namespace okore {

/// Names a twisted sub-bimodule of the core: the full module (left action
/// through lambda), one of its corners cut by s_i s_i*, an iterated corner cut
/// by s_i^m (s_i*)^m with the left action twisted m times, or a left block
/// generated by a single word s_j s_i*.
struct BimoduleDescriptor {
    enum class Kind { full, corner, corner_power };

    Kind kind;
    std::uint32_t n;
    Letter index = 1;        // i for corner kinds
    std::uint32_t power = 1; // m for corner_power
    Element generator;

    static BimoduleDescriptor full_module(std::uint32_t n);
    /// A (left-multiplied by) the single word s_j s_i*: a left module only.
    static BimoduleDescriptor left_block(std::uint32_t n, Letter j, Letter i);
    static BimoduleDescriptor corner(std::uint32_t n, Letter i);
    static BimoduleDescriptor corner_power(std::uint32_t n, Letter i, std::uint32_t m);

    bool is_left_block() const;
};

/// Exact carrier membership: degree 0, fixed by the descriptor's range
/// projection, and for left blocks reconstructible from the generator.
bool in_carrier(const BimoduleDescriptor& desc, const Element& x);

/// Left A-valued inner product of the descriptor's module: the transfer
/// operator applied to the corner expectation of eta xi*, with both maps
/// twisted to match the descriptor. CarrierError when an argument leaves the
/// module.
Element left_inner(const BimoduleDescriptor& desc, const Element& eta, const Element& xi);

/// Trivial right-module inner product eta* xi.
Element right_inner(const Element& eta, const Element& xi);

/// Coefficients of x against the left basis {s_j s_i*} and the exact
/// reconstruction sum_{i,j} lambda(<x, s_j s_i*>) s_j s_i*.
struct PPExpansion {
    std::uint32_t n;
    std::vector<std::vector<Element>> coeff;  // coeff[j-1][i-1] = <x, s_j s_i*>
    Element reconstruction;
    bool exact;
};
PPExpansion pp_expand_left(const Element& x);

/// left  = sum of right inner products over the left Pimsner-Popa basis,
/// right = left inner product over the right basis, total = right * left.
/// Left blocks are left modules only, so right/total are absent there.
struct WatataniIndex {
    Element left;
    std::optional<Element> right, total;
};
WatataniIndex watatani_index(const BimoduleDescriptor& desc);

/// [(i, s_i s_i* x)] for i = 1..n; the pieces sum to x and are pairwise
/// orthogonal for both inner products.
std::vector<std::pair<Letter, Element>> corner_decompose(const Element& x);

enum class Direction { L, R };

/// The corner-power unitaries: L maps xi to (s_1*)^m xi, R maps the conjugate
/// vector to xi* s_1^m. Requires s_1^m (s_1*)^m xi = xi.
Element corner_unitary(std::uint32_t m, const Element& xi, Direction dir);

/// Exact span of lambda(a) xi b over degree-0 canonical words a, b of length
/// <= r, tested against every canonical word of xi's degree supported on the
/// corner i with length <= r-2.
struct CyclicReport {
    bool certified = false;
    int degree = 0;
    std::size_t target_count = 0;
    std::vector<Word> missing;
    std::size_t span_rank = 0;
    std::size_t products_used = 0;
};
CyclicReport cyclic_generate(Letter i, const Element& xi, std::uint32_t r);

/// Echelon basis of a span of elements, serialized as the union word support
/// plus one coefficient row per basis vector.
struct SpanReport {
    std::vector<Word> support;
    std::vector<std::vector<Scalar>> rows;
};
SpanReport span_report(const Echelon<Word, WordLess>& ech);

/// Bounded-length probe of the bimodule A x A. Per degree component it builds
/// the exact span of a x b over degree-0 words of length <= r and searches for
/// single-word members u_1..u_t whose range projections sum to a projection p
/// acting as the identity on the span. p == 1 certifies a finite right
/// Pimsner-Popa basis outright (the expansion xi = sum u_t (u_t* xi) then holds
/// identically in the algebra); otherwise p is re-checked against the spans one
/// length increment deeper before certifying. Inconclusive is returned rather
/// than any refutation.
struct PqnReport {
    enum class Status { certified, inconclusive };
    Status status = Status::inconclusive;
    std::vector<Element> basis;
    std::map<int, SpanReport> spans;
    bool certified() const { return status == Status::certified; }
};
PqnReport pqn_probe(const Element& x, std::uint32_t r);

}  // namespace okore
