#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "okore/scalar.hpp"
#include "okore/word.hpp"

namespace okore {

/// One generator or adjoint generator in a raw (unreduced) monomial.
struct GeneratorFactor {
    Letter letter;
    bool adjoint;
};

struct RawMonomial {
    Scalar coeff;
    std::vector<GeneratorFactor> factors;
};

using RawExpression = std::vector<RawMonomial>;

/// Finite linear combination of canonical words s_nu s_mu* over the Gaussian
/// rationals. The representation is unique: only canonical-basis words are
/// stored and zero coefficients are pruned, so operator== decides equality in
/// the algebra. Values are immutable in practice; all operations return new
/// elements.
class Element {
  public:
    using TermMap = std::map<Word, Scalar, WordLess>;

    /// Zero element of the word algebra on n generators; n >= 2 required.
    explicit Element(std::uint32_t n);

    static Element unit(std::uint32_t n) { return from_word(n, Word{}, Scalar(1)); }
    static Element scalar(std::uint32_t n, const Scalar& c) { return from_word(n, Word{}, c); }
    /// Validates letters and canonicalizes; the word need not satisfy the
    /// basis condition.
    static Element from_word(std::uint32_t n, const Word& w, const Scalar& c = Scalar(1));
    static Element generator(std::uint32_t n, Letter i);
    static Element generator_adjoint(std::uint32_t n, Letter i);

    std::uint32_t gen_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coefficient(const Word& w) const;

    /// Accumulates c * s_nu s_mu* into this element, rewriting until every
    /// stored word satisfies the canonical-basis condition. Returns the number
    /// of completeness-relation rewrite steps taken.
    std::size_t add_term(Word w, Scalar c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& c, const Element& x);

    friend bool operator==(const Element& a, const Element& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    Element degree_component(int k) const;
    std::map<int, Element> degree_split() const;
    std::set<int> degrees() const;
    /// Degree when all terms share one; 0 for the zero element; nullopt when mixed.
    std::optional<int> pure_degree() const;
    std::size_t max_word_length() const;

    /// Canonical text form; parse() inverts it.
    std::string str() const;

  private:
    std::uint32_t n_;
    TermMap terms_;
};

/// Product of two canonical words under s_i* s_j = delta_ij. Returns nullopt
/// when the product vanishes; the resulting word may violate the basis
/// condition and still needs canonicalization.
std::optional<Word> word_mul(const Word& x, const Word& y);

/// Expands c * s_nu s_mu* in the canonical basis. The oriented rewrite
/// s_{nu n} s_{mu n}* -> s_nu s_mu* - sum_{i<n} s_{nu i} s_{mu i}* strictly
/// shortens the violating word, so this terminates after at most
/// min(|nu|,|mu|) steps; the step count is returned.
std::size_t canonicalize_word(std::uint32_t n, Word w, const Scalar& c,
                              std::vector<std::pair<Word, Scalar>>& out);

/// Canonical form of a raw linear combination of generator products.
Element reduce(std::uint32_t n, const RawExpression& raw);

Element mul(const Element& x, const Element& y);
Element adjoint(const Element& x);
Element linear_combine(const std::vector<std::pair<Scalar, Element>>& parts);
Element degree_component(const Element& x, int k);

/// All canonical words of the given degree with length <= maxlen, in canonical
/// order. Degree 0 with maxlen >= 0 includes the unit.
std::vector<Word> canonical_words_of_degree(std::uint32_t n, int k, std::size_t maxlen);
/// Degree-0 canonical words of length <= maxlen (the unit included).
std::vector<Word> degree0_words(std::uint32_t n, std::size_t maxlen);

}  // namespace okore
