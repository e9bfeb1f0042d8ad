#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nok/ideal_format.hpp"
#include "nok/segre.hpp"

namespace nok {

using Json = nlohmann::ordered_json;

struct PipelineOptions {
    int t_max = 1;
    int s_max = -1;        // < 0: t_max * generating degree + n + 2
    int series_order = -1; // < 0: ambient projective dimension n
    bool crosscheck = true;
    long long budget = 200000;
    bool timings = false;
};

struct PipelineResult {
    bool monomial = false;
    bool exact = false;
    int n = 0;
    int generating_deg = 0;
    std::vector<int> degree_sequence;
    VPolyhedron body;
    std::optional<bool> stabilized;
    int t_max_used = 1;
    int s_max_used = 0;
    PiecewisePolynomial fiber_volume;
    RationalFunctionT integral; // 1 - zeta
    ZetaReport report;
    std::optional<SegreDegrees> sigma;
    std::optional<SegreDegrees> sigma_oracle;
    bool crosscheck_ran = false;
    bool crosscheck_pass = false;
    SeriesTrunc zeta_series;
    std::vector<std::string> warnings;
    double elapsed_ms = 0.0;

    // Drives the CLI exit code: oracle mismatch or a failed structural check
    // on the exact path means the run cannot be trusted.
    bool consistency_ok() const {
        if (crosscheck_ran && !crosscheck_pass) return false;
        if (exact && !report.pole_check) return false;
        if (exact && !sigma) return false;
        return true;
    }
};

inline PipelineResult run_zeta_pipeline(const HomogeneousIdeal& I, const ValuationConfig& cfg,
                                        const PipelineOptions& options = {}) {
    auto t0 = std::chrono::steady_clock::now();
    PipelineResult result;
    result.n = I.num_vars - 1;
    result.monomial = is_monomial_ideal(I);
    result.generating_deg = generating_degree(I);
    result.degree_sequence = pruned_generator_degrees(I);
    result.t_max_used = options.t_max;

    if (result.monomial) {
        result.exact = true;
        result.body = newton_polyhedron(I);
        result.fiber_volume = fiber_volume_function(result.body);
        result.integral = density_integral(result.fiber_volume, result.n, result.degree_sequence);
    } else {
        result.exact = false;
        int s_max = options.s_max;
        if (s_max < 0) s_max = options.t_max * result.generating_deg + result.n + 2;
        result.s_max_used = s_max;
        SampledIntegral sampled = sampled_integral(I, cfg, options.t_max, s_max, options.budget);
        result.body = std::move(sampled.body.body);
        result.stabilized = sampled.body.stabilized;
        result.fiber_volume = std::move(sampled.volume);
        result.integral = sampled.integral;
        if (sampled.pole_warning) result.warnings.push_back(*sampled.pole_warning);
    }

    result.report = zeta_report(result.integral, result.degree_sequence);
    try {
        result.sigma = sigma_from_integral(result.integral, result.n);
    } catch (const non_integer_degree& e) {
        if (result.exact) throw;
        result.warnings.push_back(std::string("approximate body: ") + e.what());
    }

    int order = options.series_order >= 0 ? options.series_order : result.n;
    result.zeta_series = rf_to_series(result.report.zeta, order);

    if (options.crosscheck && result.monomial) {
        result.crosscheck_ran = true;
        result.sigma_oracle = sigma_by_interpolation(I);
        result.crosscheck_pass = result.sigma && *result.sigma == *result.sigma_oracle;
    }

    auto t1 = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return result;
}

// ---------------------------------------------------------------------------
// JSON serialization: all rationals as exact "p/q" strings, stable key order
// ---------------------------------------------------------------------------

inline Json json_rational(const Rational& r) { return rational_to_string(r); }

inline Json json_rational_vector(const QVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(json_rational(x));
    return arr;
}

inline Json json_poly(const PolyT& p) {
    Json arr = Json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(json_rational(p.coeff(i)));
    return arr;
}

inline Json json_rational_function(const RationalFunctionT& f) {
    Json obj;
    obj["num"] = json_poly(f.num());
    obj["den"] = json_poly(f.den());
    return obj;
}

inline Json json_body(const VPolyhedron& P, bool exact, std::optional<bool> stabilized) {
    Json obj;
    obj["ambient_dim"] = P.ambient_dim;
    obj["exact"] = exact;
    Json verts = Json::array();
    for (const auto& v : P.vertices) verts.push_back(json_rational_vector(v));
    obj["vertices"] = verts;
    Json rays = Json::array();
    for (const auto& r : P.rays) rays.push_back(json_rational_vector(r));
    obj["rays"] = rays;
    if (stabilized)
        obj["stabilized"] = *stabilized;
    else
        obj["stabilized"] = nullptr;
    return obj;
}

inline Json json_fiber_volume(const PiecewisePolynomial& vol) {
    Json obj;
    Json bps = Json::array();
    for (const auto& b : vol.breakpoints) bps.push_back(json_rational(b));
    obj["breakpoints"] = bps;
    Json pieces = Json::array();
    for (std::size_t i = 0; i < vol.pieces.size(); ++i) {
        Json piece;
        piece["from"] = json_rational(vol.breakpoints[i]);
        piece["to"] = json_rational(vol.breakpoints[i + 1]);
        piece["coefficients"] = json_poly(vol.pieces[i]);
        pieces.push_back(piece);
    }
    obj["pieces"] = pieces;
    Json tail;
    tail["from"] = json_rational(vol.breakpoints.back());
    tail["coefficients"] = json_poly(vol.tail);
    obj["tail"] = tail;
    return obj;
}

inline Json json_input_echo(const ParsedIdeal& input) {
    Json obj;
    obj["variables"] = input.variables;
    obj["generators"] = input.generator_text;
    obj["dehomogenize"] = input.variables[static_cast<std::size_t>(input.valuation.dehomogenize_index)];
    Json order = Json::array();
    for (int v : input.valuation.variable_order)
        order.push_back(input.variables[static_cast<std::size_t>(v)]);
    obj["valuation_order"] = order;
    return obj;
}

inline Json json_result_document(const ParsedIdeal& input, const PipelineResult& r,
                                 const PipelineOptions& options) {
    Json doc;
    doc["schema_version"] = 1;
    doc["input"] = json_input_echo(input);
    Json opts;
    opts["tmax"] = r.t_max_used;
    if (!r.exact) opts["smax"] = r.s_max_used;
    doc["options"] = opts;
    doc["monomial"] = r.monomial;
    doc["exact"] = r.exact;
    doc["generating_degree"] = r.generating_deg;
    doc["degree_sequence"] = r.degree_sequence;
    doc["body"] = json_body(r.body, r.exact, r.stabilized);
    doc["fiber_volume"] = json_fiber_volume(r.fiber_volume);
    doc["integral"] = json_rational_function(r.integral);
    doc["zeta"] = json_rational_function(r.report.zeta);
    Json series = Json::array();
    for (const auto& c : r.zeta_series.coefficients) series.push_back(json_rational(c));
    doc["zeta_series"] = series;
    if (r.sigma) {
        Json sigma = Json::array();
        for (const auto& s : r.sigma->sigma) sigma.push_back(json_rational(s));
        doc["sigma"] = sigma;
    } else {
        doc["sigma"] = nullptr;
    }
    Json report;
    report["pole_check"] = r.report.pole_check;
    report["nonneg_check"] = r.report.nonneg_check;
    report["matched_degrees"] = r.report.matched_degrees;
    report["numerator_A"] = json_poly(r.report.numerator_A);
    doc["zeta_report"] = report;
    Json crosscheck;
    crosscheck["ran"] = r.crosscheck_ran;
    if (r.crosscheck_ran) {
        crosscheck["verdict"] = r.crosscheck_pass ? "pass" : "fail";
        Json oracle = Json::array();
        for (const auto& s : r.sigma_oracle->sigma) oracle.push_back(json_rational(s));
        crosscheck["sigma_interpolation"] = oracle;
    }
    doc["crosscheck"] = crosscheck;
    doc["warnings"] = r.warnings;
    doc["consistent"] = r.consistency_ok();
    if (options.timings) doc["timings_ms"] = r.elapsed_ms;
    return doc;
}

} // namespace nok
