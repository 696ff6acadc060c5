#include "okore/bimodule.hpp"

#include <algorithm>
#include <set>

#include "okore/core_maps.hpp"
#include "okore/errors.hpp"

namespace okore {

BimoduleDescriptor BimoduleDescriptor::full_module(std::uint32_t n) {
    return BimoduleDescriptor{Kind::full, n, 1, 1, Element::unit(n)};
}

BimoduleDescriptor BimoduleDescriptor::left_block(std::uint32_t n, Letter j, Letter i) {
    return BimoduleDescriptor{Kind::full, n, 1, 1,
                              Element::from_word(n, Word{Path{j}, Path{i}})};
}

BimoduleDescriptor BimoduleDescriptor::corner(std::uint32_t n, Letter i) {
    if (i < 1 || i > n) throw MalformedInputError("corner index outside 1..n");
    return BimoduleDescriptor{Kind::corner, n, i, 1, range_projection(n, i)};
}

BimoduleDescriptor BimoduleDescriptor::corner_power(std::uint32_t n, Letter i, std::uint32_t m) {
    if (i < 1 || i > n) throw MalformedInputError("corner index outside 1..n");
    if (m < 1) throw MalformedInputError("corner power must be >= 1");
    return BimoduleDescriptor{Kind::corner_power, n, i, m, range_projection(n, i, m)};
}

bool BimoduleDescriptor::is_left_block() const {
    return kind == Kind::full && !(generator == Element::unit(n));
}

bool in_carrier(const BimoduleDescriptor& desc, const Element& x) {
    if (x.is_zero()) return true;
    if (x.pure_degree() != std::optional<int>(0)) return false;
    switch (desc.kind) {
        case BimoduleDescriptor::Kind::full: {
            if (!desc.is_left_block()) return true;
            // x in lambda[A] g with g orthonormal: lambda(<x,g>) g == x.
            Element coeff = left_inner(BimoduleDescriptor::full_module(desc.n), x, desc.generator);
            return mul(endo_lambda(coeff), desc.generator) == x;
        }
        case BimoduleDescriptor::Kind::corner:
            return mul(range_projection(desc.n, desc.index), x) == x;
        case BimoduleDescriptor::Kind::corner_power:
            return mul(range_projection(desc.n, desc.index, desc.power), x) == x;
    }
    return false;
}

namespace {

Element power_expect(const BimoduleDescriptor& desc, const Element& a) {
    const Element p = range_projection(desc.n, desc.index, desc.power);
    return mul(mul(p, a), p);
}

Element power_transfer(const BimoduleDescriptor& desc, const Element& a) {
    const Element v = iterated_isometry(desc.n, desc.index, desc.power);
    return mul(mul(adjoint(v), a), v);
}

}  // namespace

Element left_inner(const BimoduleDescriptor& desc, const Element& eta, const Element& xi) {
    if (!in_carrier(desc, eta) || !in_carrier(desc, xi))
        throw CarrierError("left_inner: argument outside the module carrier");
    const Element prod = mul(eta, adjoint(xi));
    switch (desc.kind) {
        case BimoduleDescriptor::Kind::full:
            return transfer(exel_expect(prod));
        case BimoduleDescriptor::Kind::corner:
            return corner_transfer(desc.index, corner_expect(desc.index, prod));
        case BimoduleDescriptor::Kind::corner_power:
            return power_transfer(desc, power_expect(desc, prod));
    }
    throw UnsupportedDescriptorError("left_inner: unknown descriptor kind");
}

Element right_inner(const Element& eta, const Element& xi) { return mul(adjoint(eta), xi); }

PPExpansion pp_expand_left(const Element& x) {
    const std::uint32_t n = x.gen_count();
    if (x.pure_degree() != std::optional<int>(0))
        throw CarrierError("pp_expand_left: element must be degree-0");
    const auto full = BimoduleDescriptor::full_module(n);
    PPExpansion out{n, {}, Element(n), false};
    out.coeff.assign(n, std::vector<Element>());
    for (Letter j = 1; j <= n; ++j) {
        for (Letter i = 1; i <= n; ++i) {
            Element basis_word = Element::from_word(n, Word{Path{j}, Path{i}});
            Element c = left_inner(full, x, basis_word);
            out.reconstruction += mul(endo_lambda(c), basis_word);
            out.coeff[j - 1].push_back(std::move(c));
        }
    }
    out.exact = out.reconstruction == x;
    return out;
}

WatataniIndex watatani_index(const BimoduleDescriptor& desc) {
    const std::uint32_t n = desc.n;
    WatataniIndex out{Element(n), std::nullopt, std::nullopt};
    switch (desc.kind) {
        case BimoduleDescriptor::Kind::full: {
            if (desc.is_left_block()) {
                // Single-element left basis {g}; no right module structure.
                out.left = right_inner(desc.generator, desc.generator);
                return out;
            }
            for (Letter j = 1; j <= n; ++j)
                for (Letter i = 1; i <= n; ++i) {
                    Element u = Element::from_word(n, Word{Path{j}, Path{i}});
                    out.left += right_inner(u, u);
                }
            Element one = Element::unit(n);
            out.right = left_inner(desc, one, one);
            out.total = mul(*out.right, out.left);
            return out;
        }
        case BimoduleDescriptor::Kind::corner: {
            // Left basis {s_i s_j*}_j, right basis {s_i s_i*}.
            for (Letter j = 1; j <= n; ++j) {
                Element u = Element::from_word(n, Word{Path{desc.index}, Path{j}});
                out.left += right_inner(u, u);
            }
            Element p = range_projection(n, desc.index);
            out.right = left_inner(desc, p, p);
            out.total = mul(*out.right, out.left);
            return out;
        }
        case BimoduleDescriptor::Kind::corner_power:
            throw UnsupportedDescriptorError(
                "watatani_index: iterated corners carry their structure through the corner "
                "unitaries; no index is defined here");
    }
    throw UnsupportedDescriptorError("watatani_index: unknown descriptor kind");
}

std::vector<std::pair<Letter, Element>> corner_decompose(const Element& x) {
    if (x.pure_degree() != std::optional<int>(0))
        throw CarrierError("corner_decompose: element must be degree-0");
    const std::uint32_t n = x.gen_count();
    std::vector<std::pair<Letter, Element>> out;
    out.reserve(n);
    for (Letter i = 1; i <= n; ++i) out.emplace_back(i, mul(range_projection(n, i), x));
    return out;
}

Element corner_unitary(std::uint32_t m, const Element& xi, Direction dir) {
    const std::uint32_t n = xi.gen_count();
    const Element p = range_projection(n, 1, m);
    if (!(mul(p, xi) == xi))
        throw CarrierError("corner_unitary: xi is not fixed by s_1^m (s_1*)^m");
    const Element v = iterated_isometry(n, 1, m);
    if (dir == Direction::L) return mul(adjoint(v), xi);
    return mul(adjoint(xi), v);
}

namespace {

/// lambda(a) for a single word: n words s_{i a_nu} s_{i a_mu}*, canonicalized.
Element lambda_word(std::uint32_t n, const Word& w) {
    return endo_lambda(Element::from_word(n, w));
}

}  // namespace

CyclicReport cyclic_generate(Letter i, const Element& xi, std::uint32_t r) {
    const std::uint32_t n = xi.gen_count();
    if (i < 1 || i > n) throw MalformedInputError("corner index outside 1..n");
    if (xi.is_zero()) throw CarrierError("cyclic_generate: xi must be nonzero");
    auto deg = xi.pure_degree();
    if (!deg) throw CarrierError("cyclic_generate: xi must have pure degree");
    if (!(mul(range_projection(n, i), xi) == xi))
        throw CarrierError("cyclic_generate: xi is not supported on the corner");

    CyclicReport report;
    report.degree = *deg;

    // Corner words of matching degree up to the report length bound.
    std::vector<Word> targets;
    if (r >= 2) {
        for (const Word& w : canonical_words_of_degree(n, *deg, r - 2))
            if (!w.nu.empty() && w.nu.front() == i) targets.push_back(w);
    }
    report.target_count = targets.size();

    const auto words = degree0_words(n, r);
    std::vector<Element> lambda_gens;
    lambda_gens.reserve(words.size());
    for (const Word& a : words) lambda_gens.push_back(lambda_word(n, a));

    Echelon<Word, WordLess> span;
    std::vector<bool> covered(targets.size(), false);
    std::size_t missing = targets.size();

    // Sweep pairs in increasing combined length so certificates close early.
    std::vector<std::size_t> order(words.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return words[a].length() < words[b].length();
    });

    for (std::size_t ai : order) {
        for (std::size_t bi : order) {
            Element v = mul(mul(lambda_gens[ai], xi), Element::from_word(n, words[bi]));
            ++report.products_used;
            if (v.is_zero()) continue;
            if (!span.insert(v.terms())) continue;
            for (std::size_t t = 0; t < targets.size() && missing; ++t) {
                if (covered[t]) continue;
                if (span.contains(Element::from_word(n, targets[t]).terms())) {
                    covered[t] = true;
                    --missing;
                }
            }
            if (!missing) break;
        }
        if (!missing) break;
    }

    report.span_rank = span.rank();
    for (std::size_t t = 0; t < targets.size(); ++t)
        if (!covered[t]) report.missing.push_back(targets[t]);
    report.certified = report.missing.empty();
    return report;
}

SpanReport span_report(const Echelon<Word, WordLess>& ech) {
    SpanReport out;
    std::set<Word, WordLess> support;
    for (const auto& [pivot, row] : ech.rows())
        for (const auto& [w, c] : row) support.insert(w);
    out.support.assign(support.begin(), support.end());
    for (const auto& [pivot, row] : ech.rows()) {
        std::vector<Scalar> coords;
        coords.reserve(out.support.size());
        for (const Word& w : out.support) {
            auto it = row.find(w);
            coords.push_back(it == row.end() ? Scalar(0) : it->second);
        }
        out.rows.push_back(std::move(coords));
    }
    return out;
}

namespace {

struct DegreeProbe {
    Echelon<Word, WordLess> span;
    std::vector<Word> member_words;  // single canonical words known to lie in the span
};

/// Span of a x b over degree-0 canonical words of length <= r. For a
/// single-word x every product is (a multiple of) one raw word, which is
/// deduplicated before canonicalization; otherwise products feed the echelon
/// directly.
DegreeProbe build_span(const Element& x, std::uint32_t r) {
    const std::uint32_t n = x.gen_count();
    const auto words = degree0_words(n, r);
    DegreeProbe probe;
    std::set<Word, WordLess> member_set;

    const bool single = x.term_count() == 1;
    if (single) {
        const Word& w = x.terms().begin()->first;
        std::set<std::pair<Path, Path>> seen;
        for (const Word& a : words) {
            auto left = word_mul(a, w);
            if (!left) continue;
            for (const Word& b : words) {
                auto raw = word_mul(*left, b);
                if (!raw) continue;
                if (!seen.emplace(raw->nu, raw->mu).second) continue;
                Element v = Element::from_word(n, *raw);
                if (v.term_count() == 1 && v.terms().begin()->second == Scalar(1))
                    member_set.insert(v.terms().begin()->first);
                probe.span.insert(v.terms());
            }
        }
    } else {
        std::set<std::string> seen;
        for (const Word& a : words) {
            Element left = mul(Element::from_word(n, a), x);
            if (left.is_zero()) continue;
            for (const Word& b : words) {
                Element v = mul(left, Element::from_word(n, b));
                if (v.is_zero()) continue;
                std::string key = v.str();
                if (!seen.emplace(std::move(key)).second) continue;
                if (v.term_count() == 1) member_set.insert(v.terms().begin()->first);
                probe.span.insert(v.terms());
            }
        }
    }
    probe.member_words.assign(member_set.begin(), member_set.end());
    return probe;
}

/// Tries to assemble p = sum s_nu s_nu* over member words with distinct nu of
/// one fixed length until p acts as the identity on the deeper span. Returns
/// the chosen basis words, or nothing.
std::optional<std::vector<Word>> find_projection_basis(std::uint32_t n, const DegreeProbe& at_r,
                                                       const DegreeProbe& deeper) {
    std::size_t max_nu = 0;
    for (const Word& w : at_r.member_words) max_nu = std::max(max_nu, w.nu.size());

    for (std::size_t len = 0; len <= max_nu; ++len) {
        std::map<Path, Word> chosen;
        for (const Word& w : at_r.member_words)
            if (w.nu.size() == len) chosen.try_emplace(w.nu, w);
        if (chosen.empty()) continue;

        Element p(n);
        for (const auto& [nu, w] : chosen) p.add_term(Word{nu, nu}, Scalar(1));

        if (p == Element::unit(n)) {
            std::vector<Word> basis;
            for (const auto& [nu, w] : chosen) basis.push_back(w);
            return basis;
        }
        // p is a proper projection: accept only if it fixes the deeper span.
        bool fixes = true;
        for (const auto& [pivot, row] : deeper.span.rows()) {
            Element v(n);
            for (const auto& [w, c] : row) v.add_term(w, c);
            if (!(mul(p, v) == v)) {
                fixes = false;
                break;
            }
        }
        if (fixes) {
            std::vector<Word> basis;
            for (const auto& [nu, w] : chosen) basis.push_back(w);
            return basis;
        }
    }
    return std::nullopt;
}

}  // namespace

PqnReport pqn_probe(const Element& x, std::uint32_t r) {
    const std::uint32_t n = x.gen_count();
    PqnReport report;
    if (x.is_zero()) {
        report.status = PqnReport::Status::certified;
        return report;
    }

    bool all_certified = true;
    for (const auto& [deg, comp] : x.degree_split()) {
        DegreeProbe at_r = build_span(comp, r);
        report.spans.emplace(deg, span_report(at_r.span));

        // First try certificates that need no deeper span: p == 1.
        auto basis = find_projection_basis(n, at_r, at_r);
        bool need_deeper = true;
        if (basis) {
            Element p(n);
            for (const Word& w : *basis) p.add_term(Word{w.nu, w.nu}, Scalar(1));
            need_deeper = !(p == Element::unit(n));
        }
        if (basis && need_deeper) {
            // Proper projection: re-derive against the one-increment-deeper span.
            DegreeProbe deeper = build_span(comp, r + 1);
            basis = find_projection_basis(n, at_r, deeper);
        }
        if (!basis) {
            all_certified = false;
            continue;
        }
        for (const Word& w : *basis) report.basis.push_back(Element::from_word(n, w));
    }
    report.status =
        all_certified ? PqnReport::Status::certified : PqnReport::Status::inconclusive;
    return report;
}

}  // namespace okore
