#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "nok/polyring.hpp"
#include "nok/valuation.hpp"

namespace nok {

// Lattice point of the graded semigroup lifted back to full exponent
// coordinates: the dehomogenized coordinate is restored as s minus the sum.
struct TauPoint {
    std::vector<int> coords; // length n + 1, all >= 0
};

inline TauPoint tau_image(const std::vector<int>& value, int s, const ValuationConfig& cfg) {
    int sum = 0;
    for (int v : value) sum += v;
    if (sum > s) throw internal_error("semigroup value exceeds its degree");
    TauPoint p;
    p.coords.reserve(value.size() + 1);
    std::size_t vi = 0;
    for (int i = 0; i < cfg.num_vars; ++i) {
        if (i == cfg.dehomogenize_index) {
            p.coords.push_back(s - sum);
        } else {
            p.coords.push_back(value[vi++]);
        }
    }
    return p;
}

// Exact value sets of graded pieces at one power level.
struct SemigroupSample {
    int t_level = 1;
    int s_min = 0;
    int s_max = 0;
    std::vector<std::pair<std::vector<int>, int>> points; // (value point, s)
};

// Values of a triangular basis; cardinality equals the basis size.
inline std::vector<std::vector<int>> value_image(const GradedPieceBasis& piece,
                                                 const ValuationConfig& cfg) {
    std::vector<std::vector<int>> values;
    values.reserve(piece.basis.size());
    for (const auto& b : piece.basis) values.push_back(value_of(b, cfg));
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end())
        throw internal_error("basis values are not pairwise distinct");
    return values;
}

inline std::vector<SemigroupSample> sample_semigroup(const HomogeneousIdeal& I,
                                                     const ValuationConfig& cfg, int t_max,
                                                     int s_max,
                                                     long long budget_limit = 200000) {
    if (t_max < 1) throw precondition_error("t_max must be >= 1");
    int d = generating_degree(I);
    if (s_max < t_max * d)
        throw precondition_error("s_max must be at least t_max * generating degree (" +
                                 std::to_string(t_max * d) + ")");
    Budget budget;
    budget.limit = budget_limit;

    int min_deg = min_generator_degree(I);
    std::vector<SemigroupSample> out;
    for (int t = 1; t <= t_max; ++t) {
        SemigroupSample sample;
        sample.t_level = t;
        sample.s_min = t * min_deg;
        sample.s_max = s_max;
        for (int s = sample.s_min; s <= s_max; ++s) {
            GradedPieceBasis piece = graded_piece_basis(I, t, s, cfg, &budget);
            for (const auto& v : value_image(piece, cfg)) sample.points.emplace_back(v, s);
        }
        std::sort(sample.points.begin(), sample.points.end());
        out.push_back(std::move(sample));
    }
    return out;
}

} // namespace nok
