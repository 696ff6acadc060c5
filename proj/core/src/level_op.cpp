#include "okore/level_op.hpp"

#include <vector>

#include "okore/errors.hpp"

namespace okore {

LevelOperator::LevelOperator(std::uint32_t n, int k, std::uint32_t r) : n_(n), k_(k), r_(r) {
    if (n < 2) throw MalformedInputError("generator count must be >= 2");
    if (k + static_cast<int>(r) < 0)
        throw ShapeError("level operator needs k + r >= 0; got k=" + std::to_string(k) +
                         ", r=" + std::to_string(r));
}

LevelOperator LevelOperator::identity(std::uint32_t n, std::uint32_t r) {
    LevelOperator out(n, 0, r);
    const std::uint64_t dim = out.cols();
    for (std::uint64_t d = 0; d < dim; ++d) out.entries_.emplace(Entry{d, d}, Scalar(1));
    return out;
}

Scalar LevelOperator::entry(std::uint64_t row, std::uint64_t col) const {
    auto it = entries_.find(Entry{row, col});
    return it == entries_.end() ? Scalar(0) : it->second;
}

void LevelOperator::add(std::uint64_t row, std::uint64_t col, const Scalar& c) {
    if (c.is_zero()) return;
    if (row >= rows() || col >= cols()) throw ShapeError("entry outside operator shape");
    auto [it, fresh] = entries_.try_emplace(Entry{row, col}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

LevelOperator LevelOperator::operator-() const {
    LevelOperator out(n_, k_, r_);
    for (const auto& [pos, c] : entries_) out.entries_.emplace(pos, -c);
    return out;
}

LevelOperator& LevelOperator::operator+=(const LevelOperator& o) {
    if (n_ != o.n_ || k_ != o.k_ || r_ != o.r_)
        throw ShapeError("adding operators of different shapes");
    for (const auto& [pos, c] : o.entries_) {
        auto [it, fresh] = entries_.try_emplace(pos, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

LevelOperator& LevelOperator::operator-=(const LevelOperator& o) { return *this += -o; }

LevelOperator operator*(const Scalar& c, const LevelOperator& m) {
    LevelOperator out(m.n_, m.k_, m.r_);
    if (c.is_zero()) return out;
    for (const auto& [pos, a] : m.entries_) out.entries_.emplace(pos, c * a);
    return out;
}

LevelOperator LevelOperator::adjoint() const {
    LevelOperator out(n_, -k_, static_cast<std::uint32_t>(k_ + static_cast<int>(r_)));
    for (const auto& [pos, c] : entries_)
        out.entries_.emplace(Entry{pos.second, pos.first}, c.conj());
    return out;
}

LevelOperator LevelOperator::compose(const LevelOperator& rhs) const {
    if (n_ != rhs.n_) throw ArityError("composing operators over different generator counts");
    if (static_cast<int>(r_) != rhs.k_ + static_cast<int>(rhs.r_))
        throw ShapeError("compose: domain level " + std::to_string(r_) +
                         " does not match codomain level " +
                         std::to_string(rhs.k_ + static_cast<int>(rhs.r_)));
    LevelOperator out(n_, k_ + rhs.k_, rhs.r_);
    // Group rhs entries by row for the sparse product.
    std::map<std::uint64_t, std::vector<std::pair<std::uint64_t, Scalar>>> by_row;
    for (const auto& [pos, c] : rhs.entries_) by_row[pos.first].emplace_back(pos.second, c);
    for (const auto& [pos, a] : entries_) {
        auto it = by_row.find(pos.second);
        if (it == by_row.end()) continue;
        for (const auto& [col, b] : it->second) out.add(pos.first, col, a * b);
    }
    return out;
}

LevelOperator LevelOperator::iota() const {
    LevelOperator out(n_, k_, r_ + 1);
    for (const auto& [pos, c] : entries_)
        for (std::uint64_t a = 0; a < n_; ++a)
            out.entries_.emplace(Entry{pos.first * n_ + a, pos.second * n_ + a}, c);
    return out;
}

LevelOperator LevelOperator::iota_power(std::uint32_t j) const {
    LevelOperator out = *this;
    while (j--) out = out.iota();
    return out;
}

std::map<int, LevelOperator> embed_word(const Element& x, std::uint32_t r) {
    const std::uint32_t n = x.gen_count();
    std::map<int, LevelOperator> out;
    for (const auto& [w, c] : x.terms()) {
        if (w.mu.size() > r)
            throw LevelError("embed level " + std::to_string(r) + " too small for |mu| = " +
                             std::to_string(w.mu.size()));
        const int k = w.degree();
        auto [it, fresh] = out.try_emplace(k, LevelOperator(n, k, r));
        const std::uint32_t tail = r - static_cast<std::uint32_t>(w.mu.size());
        const std::uint64_t tails = pow_u64(n, tail);
        const std::uint64_t row_base = path_index(w.nu, n) * tails;
        const std::uint64_t col_base = path_index(w.mu, n) * tails;
        for (std::uint64_t t = 0; t < tails; ++t)
            it->second.add(row_base + t, col_base + t, c);
    }
    return out;
}

LevelOperator embed_degree(const Element& x, int k, std::uint32_t r) {
    auto m = embed_word(x.degree_component(k), r);
    auto it = m.find(k);
    return it == m.end() ? LevelOperator(x.gen_count(), k, r) : it->second;
}

Element dr_to_word(const LevelOperator& m) {
    const std::uint32_t n = m.gen_count();
    const std::size_t row_len = static_cast<std::size_t>(m.degree() + static_cast<int>(m.level()));
    Element out(n);
    for (const auto& [pos, c] : m.entries())
        out.add_term(Word{path_from_index(pos.first, row_len, n),
                          path_from_index(pos.second, m.level(), n)},
                     c);
    return out;
}

LevelOperator frobenius(std::uint32_t n, int k, std::uint32_t r,
                        const std::map<std::uint64_t, Scalar>& eta,
                        const std::map<std::uint64_t, Scalar>& xi) {
    LevelOperator out(n, k, r);
    for (const auto& [row, a] : eta)
        for (const auto& [col, b] : xi) out.add(row, col, a * b.conj());
    return out;
}

LevelOperator compose_padded(const LevelOperator& t, const LevelOperator& s) {
    const int gap = s.degree() + static_cast<int>(s.level()) - static_cast<int>(t.level());
    if (gap >= 0) return t.iota_power(static_cast<std::uint32_t>(gap)).compose(s);
    return t.compose(s.iota_power(static_cast<std::uint32_t>(-gap)));
}

}  // namespace okore
