#pragma once

#include <cstdint>
#include <random>

#include "okore/element.hpp"
#include "okore/level_op.hpp"

namespace okore {

/// Deterministic generator for randomized suites. mt19937_64 output is fully
/// specified by the standard, so fixed seeds reproduce across platforms; draws
/// use modular reduction rather than std distributions for the same reason.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    std::uint64_t below(std::uint64_t bound) { return bound ? eng_() % bound : 0; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool chance(double p) { return static_cast<double>(eng_()) < p * 18446744073709551615.0; }

    /// Small nonzero rational with |num| <= 3, den <= 3.
    Rational small_rational();
    /// Nonzero Gaussian rational with small components; imaginary part present
    /// about half the time.
    Scalar small_scalar();

    Path path(std::uint32_t n, std::size_t len);
    /// Canonical word of the given degree with length <= maxlen (resampled
    /// until canonical).
    Word canonical_word(std::uint32_t n, int degree, std::size_t maxlen);
    /// Random element: up to `terms` canonical words of degree drawn from
    /// [-maxdeg, maxdeg], lengths <= maxlen, small nonzero coefficients.
    Element element(std::uint32_t n, std::size_t terms, std::size_t maxlen, int maxdeg);
    /// Degree-0 element.
    Element core_element(std::uint32_t n, std::size_t terms, std::size_t maxlen);
    /// Raw unreduced expression: up to `monomials` products of up to `letters`
    /// generator/adjoint factors.
    RawExpression raw_expression(std::uint32_t n, std::size_t monomials, std::size_t letters);
    /// Sparse exact operator with about `density` random entries.
    LevelOperator level_operator(std::uint32_t n, int k, std::uint32_t r, std::size_t density);

  private:
    std::mt19937_64 eng_;
};

}  // namespace okore
