#include "okore/element.hpp"

#include <algorithm>

#include "okore/errors.hpp"

namespace okore {

namespace {

void require_letters(std::uint32_t n, const Path& p) {
    for (Letter a : p)
        if (a < 1 || a > n)
            throw MalformedInputError("generator letter " + std::to_string(a) +
                                      " outside 1.." + std::to_string(n));
}

}  // namespace

Element::Element(std::uint32_t n) : n_(n) {
    if (n < 2) throw MalformedInputError("generator count must be >= 2");
}

Element Element::from_word(std::uint32_t n, const Word& w, const Scalar& c) {
    Element x(n);
    require_letters(n, w.nu);
    require_letters(n, w.mu);
    x.add_term(w, c);
    return x;
}

Element Element::generator(std::uint32_t n, Letter i) {
    return from_word(n, Word{Path{i}, Path{}});
}

Element Element::generator_adjoint(std::uint32_t n, Letter i) {
    return from_word(n, Word{Path{}, Path{i}});
}

Scalar Element::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::size_t canonicalize_word(std::uint32_t n, Word w, const Scalar& c,
                              std::vector<std::pair<Word, Scalar>>& out) {
    std::size_t steps = 0;
    while (!w.canonical(n)) {
        w.nu.pop_back();
        w.mu.pop_back();
        // The spawned words end in a letter < n, hence are canonical.
        for (Letter i = 1; i < n; ++i) {
            Word v = w;
            v.nu.push_back(i);
            v.mu.push_back(i);
            out.emplace_back(std::move(v), -c);
        }
        ++steps;
    }
    out.emplace_back(std::move(w), c);
    return steps;
}

std::size_t Element::add_term(Word w, Scalar c) {
    if (c.is_zero()) return 0;
    std::vector<std::pair<Word, Scalar>> expanded;
    std::size_t steps = canonicalize_word(n_, std::move(w), c, expanded);
    for (auto& [v, a] : expanded) {
        auto [it, fresh] = terms_.try_emplace(std::move(v), a);
        if (!fresh) {
            it->second += a;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return steps;
}

Element Element::operator-() const {
    Element out(n_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Element& Element::operator+=(const Element& o) {
    if (n_ != o.n_) throw ArityError("adding elements over different generator counts");
    for (const auto& [w, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element operator*(const Scalar& c, const Element& x) {
    Element out(x.n_);
    if (c.is_zero()) return out;
    for (const auto& [w, a] : x.terms_) out.terms_.emplace(w, c * a);
    return out;
}

Element Element::degree_component(int k) const {
    Element out(n_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == k) out.terms_.emplace(w, c);
    return out;
}

std::map<int, Element> Element::degree_split() const {
    std::map<int, Element> out;
    for (const auto& [w, c] : terms_) {
        auto [it, fresh] = out.try_emplace(w.degree(), Element(n_));
        it->second.terms_.emplace(w, c);
    }
    return out;
}

std::set<int> Element::degrees() const {
    std::set<int> out;
    for (const auto& [w, c] : terms_) out.insert(w.degree());
    return out;
}

std::optional<int> Element::pure_degree() const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree();
    for (const auto& [w, c] : terms_)
        if (w.degree() != d) return std::nullopt;
    return d;
}

std::size_t Element::max_word_length() const {
    std::size_t m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.length());
    return m;
}

std::optional<Word> word_mul(const Word& x, const Word& y) {
    // (s_nu s_mu*)(s_al s_be*): cancel s_mu* against s_al.
    if (x.mu.size() <= y.nu.size()) {
        if (!path_is_prefix(x.mu, y.nu)) return std::nullopt;
        Word out;
        out.nu = x.nu;
        out.nu.insert(out.nu.end(), y.nu.begin() + static_cast<long>(x.mu.size()), y.nu.end());
        out.mu = y.mu;
        return out;
    }
    if (!path_is_prefix(y.nu, x.mu)) return std::nullopt;
    Word out;
    out.nu = x.nu;
    out.mu = y.mu;
    out.mu.insert(out.mu.end(), x.mu.begin() + static_cast<long>(y.nu.size()), x.mu.end());
    return out;
}

Element mul(const Element& x, const Element& y) {
    if (x.gen_count() != y.gen_count())
        throw ArityError("multiplying elements over different generator counts");
    Element out(x.gen_count());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            if (auto w = word_mul(wx, wy)) out.add_term(std::move(*w), cx * cy);
    return out;
}

Element adjoint(const Element& x) {
    Element out(x.gen_count());
    for (const auto& [w, c] : x.terms()) out.add_term(Word{w.mu, w.nu}, c.conj());
    return out;
}

Element linear_combine(const std::vector<std::pair<Scalar, Element>>& parts) {
    if (parts.empty()) throw MalformedInputError("linear_combine: empty input");
    Element out(parts.front().second.gen_count());
    for (const auto& [c, x] : parts) out += c * x;
    return out;
}

Element degree_component(const Element& x, int k) { return x.degree_component(k); }

Element reduce(std::uint32_t n, const RawExpression& raw) {
    Element out(n);
    for (const auto& mono : raw) {
        Element acc = Element::unit(n);
        for (const GeneratorFactor& f : mono.factors) {
            if (f.letter < 1 || f.letter > n)
                throw MalformedInputError("generator letter " + std::to_string(f.letter) +
                                          " outside 1.." + std::to_string(n));
            acc = mul(acc, f.adjoint ? Element::generator_adjoint(n, f.letter)
                                     : Element::generator(n, f.letter));
        }
        out += mono.coeff * acc;
    }
    return out;
}

namespace {

void all_paths_rec(std::uint32_t n, std::size_t len, Path& cur, std::vector<Path>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (Letter a = 1; a <= n; ++a) {
        cur.push_back(a);
        all_paths_rec(n, len, cur, out);
        cur.pop_back();
    }
}

std::vector<Path> all_paths(std::uint32_t n, std::size_t len) {
    std::vector<Path> out;
    out.reserve(pow_u64(n, static_cast<std::uint32_t>(len)));
    Path cur;
    all_paths_rec(n, len, cur, out);
    return out;
}

}  // namespace

std::vector<Word> canonical_words_of_degree(std::uint32_t n, int k, std::size_t maxlen) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= maxlen; ++len) {
        // The longer side has length len; skip shapes where the shorter side
        // would be negative.
        std::size_t nu_len, mu_len;
        if (k >= 0) {
            if (static_cast<long>(len) - k < 0) continue;
            nu_len = len;
            mu_len = len - static_cast<std::size_t>(k);
        } else {
            if (static_cast<long>(len) + k < 0) continue;
            mu_len = len;
            nu_len = len - static_cast<std::size_t>(-k);
        }
        for (const Path& nu : all_paths(n, nu_len))
            for (const Path& mu : all_paths(n, mu_len)) {
                Word w{nu, mu};
                if (w.canonical(n)) out.push_back(std::move(w));
            }
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return WordLess{}(a, b);
    });
    return out;
}

std::vector<Word> degree0_words(std::uint32_t n, std::size_t maxlen) {
    return canonical_words_of_degree(n, 0, maxlen);
}

namespace {

std::string path_token(const Path& p) {
    bool wide = false;
    for (Letter a : p)
        if (a > 9) wide = true;
    std::string out = "s";
    if (!wide) {
        for (Letter a : p) out += static_cast<char>('0' + a);
        return out;
    }
    out += "[";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(p[k]);
    }
    return out + "]";
}

std::string word_token(const Word& w) {
    if (w.is_unit()) return "1";
    std::string out;
    if (!w.nu.empty()) out += path_token(w.nu);
    if (!w.mu.empty()) {
        if (!out.empty()) out += " ";
        out += path_token(w.mu) + "*";
    }
    return out;
}

}  // namespace

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        bool negative = false;
        std::string coeff;
        if (c.is_real()) {
            Rational re = c.real();
            negative = re < 0;
            Rational mag = negative ? Rational(-re) : re;
            if (mag != 1 || w.is_unit()) coeff = Scalar::rational_to_string(mag);
        } else if (c.real() == 0) {
            Rational im = c.imag();
            negative = im < 0;
            Rational mag = negative ? Rational(-im) : im;
            coeff = (mag == 1 ? std::string("i")
                              : Scalar::rational_to_string(mag) + " i");
        } else {
            // Mixed real+imaginary coefficients are parenthesized verbatim.
            std::string re = Scalar::rational_to_string(c.real());
            Rational im = c.imag();
            std::string ims = im < 0 ? " - " + Scalar::rational_to_string(Rational(-im))
                                     : " + " + Scalar::rational_to_string(im);
            coeff = "(" + re + ims + " i)";
        }
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string token = word_token(w);
        if (!coeff.empty() && !w.is_unit())
            out += coeff + " " + token;
        else if (!coeff.empty())
            out += coeff;
        else
            out += token;
    }
    return out;
}

}  // namespace okore
