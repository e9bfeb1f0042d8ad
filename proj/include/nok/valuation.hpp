#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "nok/multipoly.hpp"

namespace nok {

// Min-lex valuation on polynomials dehomogenized at one variable.
// `variable_order` lists the remaining variable indices in comparison
// priority order (most significant first). Values are always reported in
// natural coordinate order (remaining variables by increasing index).
struct ValuationConfig {
    int num_vars = 0;            // n + 1
    int dehomogenize_index = 0;
    std::vector<int> variable_order; // size n, permutation of indices != dehomogenize_index
};

inline void validate(const ValuationConfig& cfg) {
    if (cfg.num_vars < 2) throw precondition_error("valuation needs at least 2 variables");
    if (cfg.dehomogenize_index < 0 || cfg.dehomogenize_index >= cfg.num_vars)
        throw precondition_error("dehomogenization index out of range");
    if (static_cast<int>(cfg.variable_order.size()) != cfg.num_vars - 1)
        throw precondition_error("variable order must list all non-dehomogenized variables");
    std::vector<bool> seen(static_cast<std::size_t>(cfg.num_vars), false);
    for (int v : cfg.variable_order) {
        if (v < 0 || v >= cfg.num_vars || v == cfg.dehomogenize_index || seen[static_cast<std::size_t>(v)])
            throw precondition_error("variable order is not a permutation of the remaining variables");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

inline ValuationConfig default_valuation(int num_vars, int dehomogenize_index = 0) {
    ValuationConfig cfg;
    cfg.num_vars = num_vars;
    cfg.dehomogenize_index = dehomogenize_index;
    for (int v = 0; v < num_vars; ++v)
        if (v != dehomogenize_index) cfg.variable_order.push_back(v);
    validate(cfg);
    return cfg;
}

// Position of original variable index v inside the natural dehomogenized
// coordinates (all variables except the dehomogenization index, ascending).
inline int dehom_position(const ValuationConfig& cfg, int v) {
    return v < cfg.dehomogenize_index ? v : v - 1;
}

inline std::vector<int> dehomogenize(const ExponentVector& e, const ValuationConfig& cfg) {
    std::vector<int> out;
    out.reserve(e.size() - 1);
    for (int i = 0; i < static_cast<int>(e.size()); ++i)
        if (i != cfg.dehomogenize_index) out.push_back(e[static_cast<std::size_t>(i)]);
    return out;
}

// Strict comparison of dehomogenized lattice points under the configured
// lexicographic priority.
class ValueOrder {
public:
    explicit ValueOrder(const ValuationConfig& cfg) {
        positions_.reserve(cfg.variable_order.size());
        for (int v : cfg.variable_order) positions_.push_back(dehom_position(cfg, v));
    }

    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        for (int pos : positions_) {
            int av = a[static_cast<std::size_t>(pos)];
            int bv = b[static_cast<std::size_t>(pos)];
            if (av != bv) return av < bv;
        }
        return false;
    }

private:
    std::vector<int> positions_;
};

// Lexicographically smallest dehomogenized exponent among the terms of p.
inline std::vector<int> value_of(const MultiPoly& p, const ValuationConfig& cfg) {
    if (p.is_zero()) throw zero_polynomial("valuation of the zero polynomial");
    if (p.num_vars() != cfg.num_vars)
        throw precondition_error("polynomial and valuation live in different rings");
    ValueOrder less(cfg);
    std::vector<int> best;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> v = dehomogenize(e, cfg);
        if (best.empty() || less(v, best)) best = std::move(v);
    }
    return best;
}

// Extension to one more variable. The appended variable factors out first
// (it dominates the comparison), so the value of x_new^e * g equals the
// value of g|_{x_new=0} with e appended as the last coordinate.
inline ValuationConfig extend_valuation(const ValuationConfig& cfg) {
    ValuationConfig out;
    out.num_vars = cfg.num_vars + 1;
    out.dehomogenize_index = cfg.dehomogenize_index;
    out.variable_order.reserve(cfg.variable_order.size() + 1);
    out.variable_order.push_back(cfg.num_vars); // new variable, most significant
    for (int v : cfg.variable_order) out.variable_order.push_back(v);
    validate(out);
    return out;
}

} // namespace nok
