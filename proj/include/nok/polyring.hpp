#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nok/multipoly.hpp"
#include "nok/valuation.hpp"

namespace nok {

// Work cap for spanning-set enumeration and elimination. Exceeding the
// limit is a hard error; sampling is exact or fails loudly.
struct Budget {
    long long limit = 200000;
    long long used = 0;

    void charge(long long amount) {
        used += amount;
        if (limit >= 0 && used > limit)
            throw budget_exceeded("monomial operation budget exceeded (" + std::to_string(used) +
                                  " > " + std::to_string(limit) + ")");
    }
};

inline bool is_monomial_ideal(const HomogeneousIdeal& I) {
    for (const auto& g : I.generators)
        if (!g.is_monomial()) return false;
    return true;
}

// Minimal monomial generating set via divisibility pruning; pre: monomial.
inline std::vector<ExponentVector> minimal_monomial_exponents(const HomogeneousIdeal& I) {
    if (!is_monomial_ideal(I)) throw not_monomial("ideal is not generated by monomials");
    std::vector<ExponentVector> exps;
    for (const auto& g : I.generators) exps.push_back(g.terms().begin()->first);
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<ExponentVector> minimal;
    for (const auto& e : exps) {
        bool divisible = false;
        for (const auto& f : exps) {
            if (f != e && exponent_divides(f, e)) { divisible = true; break; }
        }
        if (!divisible) minimal.push_back(e);
    }
    return minimal;
}

inline HomogeneousIdeal extend_ideal(const HomogeneousIdeal& I, int extra_vars) {
    if (extra_vars < 0) throw precondition_error("cannot extend by a negative number of variables");
    std::vector<MultiPoly> gens;
    gens.reserve(I.generators.size());
    for (const auto& g : I.generators) gens.push_back(g.extended(extra_vars));
    return HomogeneousIdeal(I.num_vars + extra_vars, std::move(gens));
}

namespace detail {

// Nondecreasing index multisets (i1 <= ... <= it) with total degree <= s,
// paired with the product of the chosen generators.
inline void generator_products(const HomogeneousIdeal& I, int t, int s, int first, int degree_so_far,
                               const MultiPoly& partial,
                               std::vector<std::pair<MultiPoly, int>>& out) {
    if (t == 0) {
        out.emplace_back(partial, degree_so_far);
        return;
    }
    for (std::size_t i = static_cast<std::size_t>(first); i < I.generators.size(); ++i) {
        int d = *I.generators[i].homogeneous_degree();
        if (degree_so_far + d > s) continue;
        generator_products(I, t - 1, s, static_cast<int>(i), degree_so_far + d,
                           partial * I.generators[i], out);
    }
}

} // namespace detail

// Spanning set of (I^t)_s: monomial multiples of t-fold generator products.
// Empty when s is below the smallest reachable degree.
inline std::vector<MultiPoly> spanning_set(const HomogeneousIdeal& I, int t, int s,
                                           Budget* budget = nullptr) {
    if (t < 1) throw precondition_error("power must be >= 1");
    if (s < 0) throw precondition_error("degree must be >= 0");
    std::vector<std::pair<MultiPoly, int>> products;
    detail::generator_products(I, t, s, 0, 0, MultiPoly::monomial(I.num_vars, ExponentVector(static_cast<std::size_t>(I.num_vars), 0)), products);
    std::vector<MultiPoly> out;
    for (const auto& [product, degree] : products) {
        auto fills = monomial_exponents(I.num_vars, s - degree);
        if (budget) budget->charge(static_cast<long long>(fills.size()) *
                                   static_cast<long long>(product.terms().size()));
        for (const auto& m : fills)
            out.push_back(product * MultiPoly::monomial(I.num_vars, m));
    }
    return out;
}

// Gaussian elimination of the spanning set under the valuation order.
// Pivots are minimal monomials, so basis values are pairwise distinct and
// the basis size equals dim (I^t)_s.
inline GradedPieceBasis graded_piece_basis(const HomogeneousIdeal& I, int t, int s,
                                           const ValuationConfig& cfg, Budget* budget = nullptr) {
    validate(cfg);
    if (cfg.num_vars != I.num_vars)
        throw precondition_error("valuation and ideal live in different rings");
    std::vector<MultiPoly> span = spanning_set(I, t, s, budget);
    GradedPieceBasis piece;
    piece.power = t;
    piece.degree = s;
    if (span.empty()) return piece;

    ValueOrder less(cfg);

    bool all_monomial = true;
    for (const auto& p : span)
        if (!p.is_monomial()) { all_monomial = false; break; }

    if (all_monomial) {
        // Monomial spans eliminate to the distinct monomials themselves.
        std::set<ExponentVector> exps;
        for (const auto& p : span) exps.insert(p.terms().begin()->first);
        std::vector<ExponentVector> sorted(exps.begin(), exps.end());
        std::sort(sorted.begin(), sorted.end(), [&](const ExponentVector& a, const ExponentVector& b) {
            return less(dehomogenize(a, cfg), dehomogenize(b, cfg));
        });
        for (const auto& e : sorted) piece.basis.push_back(MultiPoly::monomial(I.num_vars, e));
        return piece;
    }

    // Columns: all degree-s monomials sorted by the valuation order.
    std::vector<ExponentVector> cols = monomial_exponents(I.num_vars, s);
    std::sort(cols.begin(), cols.end(), [&](const ExponentVector& a, const ExponentVector& b) {
        return less(dehomogenize(a, cfg), dehomogenize(b, cfg));
    });
    std::map<ExponentVector, int> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);

    if (budget) budget->charge(static_cast<long long>(span.size()) *
                               static_cast<long long>(cols.size()));

    std::map<int, QVec> pivot_rows; // pivot column -> reduced row
    for (const auto& p : span) {
        QVec row(cols.size(), Rational(0));
        for (const auto& [e, c] : p.terms()) row[static_cast<std::size_t>(col_of.at(e))] = c;
        // Reduce against existing pivots in column order.
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            auto it = pivot_rows.find(static_cast<int>(j));
            if (it == pivot_rows.end()) break;
            Rational factor = row[j];
            const QVec& pivot = it->second;
            for (std::size_t k = j; k < row.size(); ++k)
                if (pivot[k] != 0) row[k] -= factor * pivot[k];
        }
        std::size_t lead = row.size();
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) { lead = j; break; }
        if (lead == row.size()) continue; // dependent
        Rational inv = Rational(1) / row[lead];
        for (std::size_t k = lead; k < row.size(); ++k)
            if (row[k] != 0) row[k] *= inv;
        pivot_rows.emplace(static_cast<int>(lead), std::move(row));
    }

    for (const auto& [lead, row] : pivot_rows) {
        MultiPoly b(I.num_vars);
        for (std::size_t j = static_cast<std::size_t>(lead); j < row.size(); ++j)
            if (row[j] != 0) b.add_term(cols[j], row[j]);
        piece.basis.push_back(std::move(b));
    }
    return piece;
}

namespace detail {

// Membership of g in the span of { m * g' : g' in J, m monomial } at the
// degree of g, decided by row reduction.
inline bool in_monomial_multiples_span(const MultiPoly& g, const std::vector<MultiPoly>& lower,
                                       int num_vars) {
    if (lower.empty()) return false;
    HomogeneousIdeal J(num_vars, lower);
    int degree = *g.homogeneous_degree();
    std::vector<MultiPoly> span = spanning_set(J, 1, degree);
    if (span.empty()) return false;

    std::vector<ExponentVector> cols = monomial_exponents(num_vars, degree);
    std::map<ExponentVector, int> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);

    auto to_row = [&](const MultiPoly& p) {
        QVec row(cols.size(), Rational(0));
        for (const auto& [e, c] : p.terms()) row[static_cast<std::size_t>(col_of.at(e))] = c;
        return row;
    };

    std::map<int, QVec> pivots;
    auto reduce = [&](QVec row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            auto it = pivots.find(static_cast<int>(j));
            if (it == pivots.end()) return std::make_pair(row, static_cast<int>(j));
            Rational factor = row[j] / it->second[j];
            for (std::size_t k = j; k < row.size(); ++k)
                if (it->second[k] != 0) row[k] -= factor * it->second[k];
        }
        return std::make_pair(row, -1);
    };

    for (const auto& p : span) {
        auto [row, lead] = reduce(to_row(p));
        if (lead >= 0) pivots.emplace(lead, std::move(row));
    }
    auto [row, lead] = reduce(to_row(g));
    return lead < 0;
}

} // namespace detail

// Degrees of the generators kept after pruning: divisibility for monomial
// ideals (a true minimal set), span checks against lower-degree generators
// otherwise (a certified upper bound on the generating degree).
inline std::vector<int> pruned_generator_degrees(const HomogeneousIdeal& I) {
    std::vector<int> degrees;
    if (is_monomial_ideal(I)) {
        for (const auto& e : minimal_monomial_exponents(I)) degrees.push_back(total_degree(e));
    } else {
        std::vector<std::size_t> order(I.generators.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return *I.generators[a].homogeneous_degree() < *I.generators[b].homogeneous_degree();
        });
        std::vector<MultiPoly> kept;
        for (std::size_t idx : order) {
            const MultiPoly& g = I.generators[idx];
            int d = *g.homogeneous_degree();
            std::vector<MultiPoly> lower;
            for (const auto& k : kept)
                if (*k.homogeneous_degree() < d) lower.push_back(k);
            if (!detail::in_monomial_multiples_span(g, lower, I.num_vars)) {
                kept.push_back(g);
                degrees.push_back(d);
            }
        }
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

inline int generating_degree(const HomogeneousIdeal& I) {
    std::vector<int> degrees = pruned_generator_degrees(I);
    return degrees.back();
}

inline int min_generator_degree(const HomogeneousIdeal& I) {
    int best = *I.generators.front().homogeneous_degree();
    for (const auto& g : I.generators) best = std::min(best, *g.homogeneous_degree());
    return best;
}

} // namespace nok
