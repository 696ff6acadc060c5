#pragma once

#include "okore/element.hpp"

namespace okore {

/// Conditional expectation onto the gauge-fixed core: kills every component of
/// nonzero degree. Idempotent, unital, bimodular over the core.
Element expect_core(const Element& x);

/// Gauge automorphism at z: scales the degree-k component by z^k. Only the
/// 4th roots of unity are exactly representable; anything else raises
/// UnsupportedScalarError.
Element gauge(const Element& x, const Scalar& z);

/// lambda(a) = sum_i s_i a s_i*. Unital *-endomorphism on the core.
Element endo_lambda(const Element& a);

/// E(a) = sum_i s_i s_i* a s_i s_i*. lambda[A]-bimodular expectation on the core.
Element exel_expect(const Element& a);

/// L(a) = sum_i s_i* a s_i. Transfer operator: L(lambda(a) b) = a L(b).
Element transfer(const Element& a);

Element corner_lambda(Letter i, const Element& a);    // s_i a s_i*
Element corner_expect(Letter i, const Element& a);    // s_i s_i* a s_i s_i*
Element corner_transfer(Letter i, const Element& a);  // s_i* a s_i

struct CornerMaps {
    Element lambda, expect, transfer;
};
CornerMaps corner_maps(Letter i, const Element& a);

/// s_i^m, as an element.
Element iterated_isometry(std::uint32_t n, Letter i, std::uint32_t m);
/// Range projection s_i^m (s_i*)^m.
Element range_projection(std::uint32_t n, Letter i, std::uint32_t m = 1);

}  // namespace okore
