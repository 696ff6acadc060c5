#include "okore/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "okore/core_maps.hpp"
#include "okore/errors.hpp"
#include "okore/linalg.hpp"
#include "okore/random_gen.hpp"

namespace okore {

CommutantResult commutant(const std::vector<LevelOperator>& generators) {
    if (generators.empty()) throw MalformedInputError("commutant: no generators");
    const LevelOperator& g0 = generators.front();
    if (g0.degree() != 0) throw ShapeError("commutant: generators must be square (degree 0)");
    const std::uint32_t n = g0.gen_count();
    const std::uint32_t R = g0.level();
    const std::uint64_t dim = g0.cols();
    for (const auto& g : generators)
        if (g.gen_count() != n || g.degree() != 0 || g.level() != R)
            throw ShapeError("commutant: generators must share one shape");

    const auto var = [dim](std::uint64_t p, std::uint64_t q) {
        return static_cast<std::size_t>(p * dim + q);
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, IndexVec> eq;
    for (const auto& g : generators) {
        for (const auto& [pos, val] : g.entries()) {
            const auto [a, b] = pos;
            // (X g)(p, b) picks up X(p, a) * g(a, b).
            for (std::uint64_t p = 0; p < dim; ++p) {
                auto& row = eq[{p, b}];
                auto [it, fresh] = row.try_emplace(var(p, a), val);
                if (!fresh) {
                    it->second += val;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
            // (g X)(a, q) picks up g(a, b) * X(b, q).
            for (std::uint64_t q = 0; q < dim; ++q) {
                auto& row = eq[{a, q}];
                auto [it, fresh] = row.try_emplace(var(b, q), -val);
                if (!fresh) {
                    it->second += -val;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
    }
    std::vector<IndexVec> rows;
    rows.reserve(eq.size());
    for (auto& [key, row] : eq)
        if (!row.empty()) rows.push_back(std::move(row));

    auto sols = nullspace(static_cast<std::size_t>(dim * dim), rows);
    CommutantResult out;
    out.dimension = sols.size();
    for (const auto& sol : sols) {
        LevelOperator x(n, 0, R);
        for (const auto& [v, c] : sol) x.add(v / dim, v % dim, c);
        out.basis.push_back(std::move(x));
    }
    return out;
}

std::vector<LevelOperator> lambda_core_generators(std::uint32_t n, std::uint32_t R) {
    if (R == 0) throw LevelError("lambda_core_generators: level must be >= 1");
    std::vector<LevelOperator> out;
    for (const Word& w : degree0_words(n, R - 1))
        out.push_back(embed_degree(endo_lambda(Element::from_word(n, w)), 0, R));
    return out;
}

namespace {

/// Equation rows expressing G . (|nu><mu| (x) I) = (|nu><mu| (x) I) . G at one
/// level, with G substituted as bottom (x) id_{n^push}. Variables index the
/// bottom matrix row-major.
void intertwiner_equations(std::uint32_t n, int k, int l, std::uint32_t r,
                           std::uint32_t bottom_level,
                           std::vector<IndexVec>& rows) {
    const std::uint32_t m = static_cast<std::uint32_t>(
        std::min({static_cast<int>(r), k + static_cast<int>(r), l + static_cast<int>(r)}));
    const std::uint64_t dom_dim = pow_u64(n, static_cast<std::uint32_t>(k + static_cast<int>(r)));
    const std::uint64_t cod_dim = pow_u64(n, static_cast<std::uint32_t>(l + static_cast<int>(r)));
    const std::uint64_t dom_tails = pow_u64(n, static_cast<std::uint32_t>(k + static_cast<int>(r)) - m);
    const std::uint64_t cod_tails = pow_u64(n, static_cast<std::uint32_t>(l + static_cast<int>(r)) - m);
    const std::uint64_t push = pow_u64(n, r - bottom_level);
    const std::uint64_t bottom_cols =
        pow_u64(n, static_cast<std::uint32_t>(k + static_cast<int>(bottom_level)));

    // G_r(rho, sigma) as a variable of the bottom matrix, or absent.
    const auto entry_var = [&](std::uint64_t rho, std::uint64_t sigma) -> std::optional<std::size_t> {
        if (rho % push != sigma % push) return std::nullopt;
        return static_cast<std::size_t>((rho / push) * bottom_cols + sigma / push);
    };
    const auto add = [](IndexVec& row, std::optional<std::size_t> v, int sign) {
        if (!v) return;
        auto [it, fresh] = row.try_emplace(*v, Scalar(sign));
        if (!fresh) {
            it->second += Scalar(sign);
            if (it->second.is_zero()) row.erase(it);
        }
    };

    const std::uint64_t units = pow_u64(n, m);
    for (std::uint64_t nu = 0; nu < units; ++nu) {
        for (std::uint64_t mu = 0; mu < units; ++mu) {
            // Equations at columns in the mu block: +G(rho, nu.t); the same
            // position may also receive the codomain term when rho sits in the
            // nu block.
            for (std::uint64_t rho = 0; rho < cod_dim; ++rho) {
                const bool rho_in_nu_block = rho / cod_tails == nu;
                for (std::uint64_t t = 0; t < dom_tails; ++t) {
                    IndexVec row;
                    add(row, entry_var(rho, nu * dom_tails + t), +1);
                    if (rho_in_nu_block)
                        add(row, entry_var(mu * cod_tails + rho % cod_tails, mu * dom_tails + t), -1);
                    if (!row.empty()) rows.push_back(std::move(row));
                }
            }
            // Remaining equations at rows in the nu block, columns outside the
            // mu block: -G(mu.t', sigma).
            for (std::uint64_t tp = 0; tp < cod_tails; ++tp) {
                for (std::uint64_t sigma = 0; sigma < dom_dim; ++sigma) {
                    if (sigma / dom_tails == mu) continue;  // handled above
                    IndexVec row;
                    add(row, entry_var(mu * cod_tails + tp, sigma), -1);
                    if (!row.empty()) rows.push_back(std::move(row));
                }
            }
        }
    }
}

}  // namespace

TowerReport intertwiner_tower(std::uint32_t n, int k, int l, std::uint32_t max_level) {
    const std::uint32_t bottom = static_cast<std::uint32_t>(std::max({0, -k, -l}));
    if (max_level < bottom)
        throw LevelError("intertwiner_tower: max level " + std::to_string(max_level) +
                         " below bottom level " + std::to_string(bottom));

    TowerReport report;
    report.n = n;
    report.k = k;
    report.l = l;
    report.bottom_level = bottom;
    report.max_level = max_level;

    for (std::uint32_t r = bottom; r <= max_level; ++r) {
        const std::size_t vars = static_cast<std::size_t>(
            pow_u64(n, static_cast<std::uint32_t>(l + static_cast<int>(r))) *
            pow_u64(n, static_cast<std::uint32_t>(k + static_cast<int>(r))));
        std::vector<IndexVec> rows;
        intertwiner_equations(n, k, l, r, r, rows);
        report.per_level_dims.push_back(nullspace(vars, rows).size());
    }

    const std::size_t bottom_vars = static_cast<std::size_t>(
        pow_u64(n, static_cast<std::uint32_t>(l + static_cast<int>(bottom))) *
        pow_u64(n, static_cast<std::uint32_t>(k + static_cast<int>(bottom))));
    std::vector<IndexVec> tower_rows;
    for (std::uint32_t r = bottom; r <= max_level; ++r) {
        intertwiner_equations(n, k, l, r, bottom, tower_rows);
        report.horizon_dims.push_back(nullspace(bottom_vars, tower_rows).size());
    }
    report.stabilized_dim = report.horizon_dims.back();
    report.stabilized = report.horizon_dims.size() < 2 ||
                        report.horizon_dims[report.horizon_dims.size() - 2] ==
                            report.stabilized_dim;
    return report;
}

SpanCheck fusion_span_check(std::uint32_t n, int k, int l, std::size_t len) {
    const auto gens_k = canonical_words_of_degree(n, k, len);
    const auto gens_l = canonical_words_of_degree(n, l, len);
    const auto targets = canonical_words_of_degree(n, k + l, len);

    Echelon<Word, WordLess> span;
    for (const Word& a : gens_k)
        for (const Word& b : gens_l)
            if (auto w = word_mul(a, b)) {
                Element e = Element::from_word(n, *w);
                if (!e.is_zero()) span.insert(e.terms());
            }

    SpanCheck out;
    out.target_count = targets.size();
    for (const Word& t : targets)
        if (span.contains(Element::from_word(n, t).terms())) ++out.covered;
    out.full = out.covered == out.target_count;
    return out;
}

Element fusion_product(const Element& x, const Element& y) {
    auto dx = x.pure_degree();
    auto dy = y.pure_degree();
    if (!dx || !dy) throw MalformedInputError("fusion_product: inputs must have pure degree");
    Element out = mul(x, y);
    auto dout = out.pure_degree();
    if (!out.is_zero() && *dout != *dx + *dy)
        throw std::logic_error("fusion_product: product escaped its graded component");
    return out;
}

TensoratorReport tensorator_check(std::uint32_t n, int k, int l, std::uint32_t r,
                                  std::size_t samples, std::uint64_t seed) {
    Rng rng(seed);
    TensoratorReport report;
    report.samples = samples;
    report.inner_products_ok = true;

    const int gap = l;  // otimes-padding applied by compose_padded for level r on both sides
    for (std::size_t s = 0; s < samples; ++s) {
        LevelOperator t = rng.level_operator(n, k, r, 6);
        LevelOperator tp = rng.level_operator(n, k, r, 6);
        LevelOperator u = rng.level_operator(n, l, r, 6);
        LevelOperator up = rng.level_operator(n, l, r, 6);

        LevelOperator lhs = compose_padded(t, u).adjoint().compose(compose_padded(tp, up));

        LevelOperator t_pad = gap >= 0 ? t.iota_power(static_cast<std::uint32_t>(gap)) : t;
        LevelOperator tp_pad = gap >= 0 ? tp.iota_power(static_cast<std::uint32_t>(gap)) : tp;
        LevelOperator u_pad = gap >= 0 ? u : u.iota_power(static_cast<std::uint32_t>(-gap));
        LevelOperator up_pad = gap >= 0 ? up : up.iota_power(static_cast<std::uint32_t>(-gap));
        LevelOperator mid = t_pad.adjoint().compose(tp_pad);
        LevelOperator rhs = u_pad.adjoint().compose(mid).compose(up_pad);

        if (lhs != rhs) {
            report.inner_products_ok = false;
            break;
        }
    }

    // Dense-range surrogate: composites of word images cover the
    // degree-(k+l) truncation.
    const std::uint32_t lvl_k = static_cast<std::uint32_t>(std::max(l, 0)) + r;
    Echelon<LevelOperator::Entry> span;
    for (const Word& a : canonical_words_of_degree(n, k, r)) {
        if (a.mu.size() > lvl_k) continue;
        LevelOperator ea = embed_degree(Element::from_word(n, a), k, lvl_k);
        for (const Word& b : canonical_words_of_degree(n, l, r)) {
            LevelOperator prod = compose_padded(ea, embed_degree(Element::from_word(n, b), l, r));
            if (!prod.is_zero()) span.insert(prod.entries());
        }
    }
    const std::uint32_t target_level = l >= 0 ? r : r + static_cast<std::uint32_t>(-l);
    const auto targets = canonical_words_of_degree(n, k + l, r);
    report.range.target_count = targets.size();
    for (const Word& t : targets) {
        LevelOperator et = embed_degree(Element::from_word(n, t), k + l, target_level);
        if (span.contains(et.entries())) ++report.range.covered;
    }
    report.range.full = report.range.covered == report.range.target_count;
    return report;
}

bool is_psd(const LevelOperator& op, double tol) {
    if (op.degree() != 0) throw ShapeError("is_psd: operator must be square (degree 0)");
    const auto dim = static_cast<Eigen::Index>(op.cols());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [pos, c] : op.entries())
        m(static_cast<Eigen::Index>(pos.first), static_cast<Eigen::Index>(pos.second)) =
            std::complex<double>(c.real().get_d(), c.imag().get_d());
    Eigen::MatrixXcd herm = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    return solver.eigenvalues().minCoeff() >= -tol;
}

std::size_t canonical_word_count(std::uint32_t n, int k, std::uint32_t r) {
    const std::size_t maxlen = k >= 0 ? r + static_cast<std::size_t>(k) : r;
    std::size_t count = 0;
    for (const Word& w : canonical_words_of_degree(n, k, maxlen))
        if (w.mu.size() <= r) ++count;
    return count;
}

std::size_t canonical_image_rank(std::uint32_t n, int k, std::uint32_t r) {
    const std::size_t maxlen = k >= 0 ? r + static_cast<std::size_t>(k) : r;
    Echelon<LevelOperator::Entry> ech;
    for (const Word& w : canonical_words_of_degree(n, k, maxlen)) {
        if (w.mu.size() > r) continue;
        ech.insert(embed_degree(Element::from_word(n, w), k, r).entries());
    }
    return ech.rank();
}

}  // namespace okore
