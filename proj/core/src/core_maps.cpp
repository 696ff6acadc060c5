#include "okore/core_maps.hpp"

#include "okore/errors.hpp"

namespace okore {

Element expect_core(const Element& x) { return x.degree_component(0); }

Element gauge(const Element& x, const Scalar& z) {
    if (!is_fourth_root_of_unity(z))
        throw UnsupportedScalarError("gauge: z must be one of 1, i, -1, -i; got " + z.str());
    Element out(x.gen_count());
    for (const auto& [w, c] : x.terms()) out.add_term(w, z.pow(w.degree()) * c);
    return out;
}

Element endo_lambda(const Element& a) {
    const std::uint32_t n = a.gen_count();
    Element out(n);
    // s_i s_nu s_mu* s_i* = s_{i nu} s_{i mu}*; no relation can fire.
    for (const auto& [w, c] : a.terms()) {
        for (Letter i = 1; i <= n; ++i) {
            Word v;
            v.nu.reserve(w.nu.size() + 1);
            v.mu.reserve(w.mu.size() + 1);
            v.nu.push_back(i);
            v.nu.insert(v.nu.end(), w.nu.begin(), w.nu.end());
            v.mu.push_back(i);
            v.mu.insert(v.mu.end(), w.mu.begin(), w.mu.end());
            out.add_term(std::move(v), c);
        }
    }
    return out;
}

Element exel_expect(const Element& a) {
    const std::uint32_t n = a.gen_count();
    Element out(n);
    for (Letter i = 1; i <= n; ++i) out += corner_expect(i, a);
    return out;
}

Element transfer(const Element& a) {
    const std::uint32_t n = a.gen_count();
    Element out(n);
    for (Letter i = 1; i <= n; ++i) out += corner_transfer(i, a);
    return out;
}

Element corner_lambda(Letter i, const Element& a) {
    const std::uint32_t n = a.gen_count();
    return mul(mul(Element::generator(n, i), a), Element::generator_adjoint(n, i));
}

Element corner_expect(Letter i, const Element& a) {
    const Element p = range_projection(a.gen_count(), i);
    return mul(mul(p, a), p);
}

Element corner_transfer(Letter i, const Element& a) {
    const std::uint32_t n = a.gen_count();
    return mul(mul(Element::generator_adjoint(n, i), a), Element::generator(n, i));
}

CornerMaps corner_maps(Letter i, const Element& a) {
    if (i < 1 || i > a.gen_count())
        throw MalformedInputError("corner index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(a.gen_count()));
    return CornerMaps{corner_lambda(i, a), corner_expect(i, a), corner_transfer(i, a)};
}

Element iterated_isometry(std::uint32_t n, Letter i, std::uint32_t m) {
    Word w;
    w.nu.assign(m, i);
    return Element::from_word(n, w);
}

Element range_projection(std::uint32_t n, Letter i, std::uint32_t m) {
    Word w;
    w.nu.assign(m, i);
    w.mu.assign(m, i);
    return Element::from_word(n, w);
}

}  // namespace okore
