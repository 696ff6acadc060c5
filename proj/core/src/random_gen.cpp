#include "okore/random_gen.hpp"

namespace okore {

Rational Rng::small_rational() {
    long num = range(1, 3) * (chance(0.5) ? 1 : -1);
    long den = range(1, 3);
    return Rational(num, den);
}

Scalar Rng::small_scalar() {
    if (chance(0.5)) return Scalar(small_rational());
    if (chance(0.3)) return Scalar(Rational(0), small_rational());
    return Scalar(small_rational(), small_rational());
}

Path Rng::path(std::uint32_t n, std::size_t len) {
    Path p(len);
    for (auto& a : p) a = static_cast<Letter>(below(n)) + 1;
    return p;
}

Word Rng::canonical_word(std::uint32_t n, int degree, std::size_t maxlen) {
    for (;;) {
        std::size_t lo = static_cast<std::size_t>(degree >= 0 ? degree : -degree);
        std::size_t len = lo + below(maxlen >= lo ? maxlen - lo + 1 : 1);
        std::size_t nu_len, mu_len;
        if (degree >= 0) {
            nu_len = len;
            mu_len = len - static_cast<std::size_t>(degree);
        } else {
            mu_len = len;
            nu_len = len - static_cast<std::size_t>(-degree);
        }
        Word w{path(n, nu_len), path(n, mu_len)};
        if (w.canonical(n)) return w;
    }
}

Element Rng::element(std::uint32_t n, std::size_t terms, std::size_t maxlen, int maxdeg) {
    Element out(n);
    std::size_t count = 1 + below(terms);
    for (std::size_t t = 0; t < count; ++t) {
        int d = static_cast<int>(range(-maxdeg, maxdeg));
        out.add_term(canonical_word(n, d, maxlen), small_scalar());
    }
    return out;
}

Element Rng::core_element(std::uint32_t n, std::size_t terms, std::size_t maxlen) {
    Element out(n);
    std::size_t count = 1 + below(terms);
    for (std::size_t t = 0; t < count; ++t)
        out.add_term(canonical_word(n, 0, maxlen), small_scalar());
    return out;
}

RawExpression Rng::raw_expression(std::uint32_t n, std::size_t monomials, std::size_t letters) {
    RawExpression raw;
    std::size_t count = 1 + below(monomials);
    for (std::size_t m = 0; m < count; ++m) {
        RawMonomial mono;
        mono.coeff = small_scalar();
        std::size_t flen = below(letters + 1);
        for (std::size_t f = 0; f < flen; ++f)
            mono.factors.push_back(
                GeneratorFactor{static_cast<Letter>(below(n)) + 1, chance(0.5)});
        raw.push_back(std::move(mono));
    }
    return raw;
}

LevelOperator Rng::level_operator(std::uint32_t n, int k, std::uint32_t r, std::size_t density) {
    LevelOperator out(n, k, r);
    for (std::size_t e = 0; e < density; ++e)
        out.add(below(out.rows()), below(out.cols()), small_scalar());
    return out;
}

}  // namespace okore
