#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "nok/poly_t.hpp"
#include "nok/polyhedron.hpp"

namespace nok {

// The slice-volume function s -> Vol(slice at level s): zero below the first
// breakpoint, one polynomial piece per interval between consecutive vertex
// levels, and a tail polynomial valid from the last breakpoint on. The tail
// is monic of degree n.
struct PiecewisePolynomial {
    std::vector<Rational> breakpoints; // s_0 < s_1 < ... < s_k
    std::vector<PolyT> pieces;         // pieces[i] valid on [s_i, s_{i+1}]
    PolyT tail;                        // valid on [s_k, infinity)

    Rational eval(const Rational& s) const {
        if (breakpoints.empty() || s < breakpoints.front()) return Rational(0);
        for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
            if (s <= breakpoints[i + 1]) return pieces[i].eval(s);
        return tail.eval(s);
    }
};

// Exact recovery of the slice-volume function of a body with orthant
// recession. Each polynomial piece is interpolated from n + 2 interior
// samples: n + 1 fix the degree-n fit and one verifies it, so a missed
// breakpoint surfaces as an inconsistent extra point.
inline PiecewisePolynomial fiber_volume_function(const VPolyhedron& P, int drop_index = 0) {
    const int n = P.ambient_dim - 1;
    if (n < 1) throw precondition_error("fiber volumes need ambient dimension >= 2");

    std::set<Rational> levels;
    for (const auto& v : P.vertices) {
        Rational sum(0);
        for (const auto& x : v) sum += x;
        levels.insert(sum);
    }
    PiecewisePolynomial out;
    out.breakpoints.assign(levels.begin(), levels.end());

    auto volume_at = [&](const Rational& s) {
        return polytope_normalized_volume(slice_at_level(P, s, drop_index));
    };

    auto fit_on_samples = [&](const std::vector<Rational>& abscissae) {
        std::vector<std::pair<Rational, Rational>> samples;
        samples.reserve(abscissae.size());
        for (const auto& s : abscissae) samples.emplace_back(s, volume_at(s));
        return interpolate_polynomial(samples, n);
    };

    for (std::size_t i = 0; i + 1 < out.breakpoints.size(); ++i) {
        const Rational& lo = out.breakpoints[i];
        const Rational& hi = out.breakpoints[i + 1];
        Rational step = (hi - lo) / Rational(n + 3);
        std::vector<Rational> abscissae;
        for (int j = 1; j <= n + 2; ++j) abscissae.push_back(lo + Rational(j) * step);
        out.pieces.push_back(fit_on_samples(abscissae));
    }

    {
        const Rational& last = out.breakpoints.back();
        std::vector<Rational> abscissae;
        for (int j = 1; j <= n + 2; ++j) abscissae.push_back(last + Rational(j));
        out.tail = fit_on_samples(abscissae);
    }

    if (out.tail.degree() != n || out.tail.leading() != 1)
        throw consistency_error("fiber-volume tail is not monic of degree " + std::to_string(n));

    // Volume is continuous across interior breakpoints.
    for (std::size_t i = 0; i + 1 < out.pieces.size(); ++i) {
        const Rational& bp = out.breakpoints[i + 1];
        if (out.pieces[i].eval(bp) != out.pieces[i + 1].eval(bp))
            throw consistency_error("fiber-volume pieces disagree at breakpoint " +
                                    rational_to_string(bp));
    }
    if (!out.pieces.empty()) {
        const Rational& bp = out.breakpoints.back();
        if (out.pieces.back().eval(bp) != out.tail.eval(bp))
            throw consistency_error("fiber-volume tail disagrees with the last piece at " +
                                    rational_to_string(bp));
    }
    return out;
}

} // namespace nok
