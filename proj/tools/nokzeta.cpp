// Command-line front end: parses an ideal file, runs the Newton-Okounkov /
// Segre pipeline, and prints JSON (default) or a human-readable table.
//
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 budget exceeded, 5 failed internal consistency check.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nok/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string input_path;
    bool plain = false;
    bool json = false;
    bool timings = false;
    std::string vars_order;
    nok::PipelineOptions options;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw nok::parse_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void apply_vars_order(nok::ParsedIdeal& parsed, const std::string& order_flag) {
    if (order_flag.empty()) return;
    std::vector<std::string> names;
    std::string cur;
    for (char c : order_flag) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) names.push_back(cur);
    nok::ValuationConfig cfg;
    cfg.num_vars = static_cast<int>(parsed.variables.size());
    cfg.dehomogenize_index = parsed.valuation.dehomogenize_index;
    for (const auto& name : names) {
        auto it = std::find(parsed.variables.begin(), parsed.variables.end(), name);
        if (it == parsed.variables.end())
            throw nok::precondition_error("--vars-order names unknown variable '" + name + "'");
        cfg.variable_order.push_back(static_cast<int>(it - parsed.variables.begin()));
    }
    nok::validate(cfg);
    parsed.valuation = cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("input", args.input_path, "ideal file ('-' for stdin)")->required();
    cmd->add_flag("--plain", args.plain, "human-readable output");
    cmd->add_flag("--json", args.json, "JSON output (default)");
    cmd->add_flag("--timings", args.timings, "include timings in the output");
    cmd->add_option("--tmax", args.options.t_max, "semigroup power level for sampled bodies");
    cmd->add_option("--smax", args.options.s_max, "degree bound for semigroup sampling");
    cmd->add_option("--order", args.options.series_order, "zeta series truncation order");
    cmd->add_option("--vars-order", args.vars_order, "valuation priority, e.g. x2,x1");
    cmd->add_option("--budget", args.options.budget, "monomial-operation budget for sampling");
}

void export_plot(const nok::PiecewisePolynomial& vol, const nok::VPolyhedron& body,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw nok::precondition_error("cannot open plot file '" + path + "'");
    out << "s,volume\n";
    const nok::Rational& lo = vol.breakpoints.front();
    const nok::Rational& hi = vol.breakpoints.back();
    nok::Rational span = hi - lo + 2;
    const int steps = 64;
    (void)body;
    for (int i = 0; i <= steps; ++i) {
        nok::Rational s = lo + span * nok::Rational(i, steps);
        s.canonicalize();
        out << nok::rational_to_string(s) << "," << nok::rational_to_string(vol.eval(s)) << "\n";
    }
}

void print_plain(const nok::ParsedIdeal& parsed, const nok::PipelineResult& r) {
    using nok::rational_to_string;
    std::cout << "ideal: ";
    for (std::size_t i = 0; i < parsed.generator_text.size(); ++i)
        std::cout << (i ? ", " : "(") << parsed.generator_text[i];
    std::cout << ")  in  " << parsed.variables.size() << " variables\n";
    std::cout << "monomial: " << (r.monomial ? "yes" : "no")
              << "   exact: " << (r.exact ? "yes" : "no (inner approximation)") << "\n";
    std::cout << "generating degree: " << r.generating_deg << "\n";
    std::cout << "body: " << r.body.vertices.size() << " vertices, " << r.body.rays.size()
              << " rays";
    if (r.stabilized) std::cout << ", stabilized: " << (*r.stabilized ? "yes" : "no");
    std::cout << "\n";
    std::cout << "fiber volume tail: " << r.fiber_volume.tail.str("s") << "  (from s = "
              << rational_to_string(r.fiber_volume.breakpoints.back()) << ")\n";
    std::cout << "1 - zeta = " << r.integral.str() << "\n";
    std::cout << "zeta     = " << r.report.zeta.str() << "\n";
    if (r.sigma) {
        std::cout << "sigma    = (";
        for (std::size_t i = 0; i < r.sigma->sigma.size(); ++i)
            std::cout << (i ? ", " : "") << rational_to_string(r.sigma->sigma[i]);
        std::cout << ")\n";
    }
    std::cout << "pole check: " << (r.report.pole_check ? "pass" : "fail")
              << "   numerator nonneg: " << (r.report.nonneg_check ? "pass" : "fail") << "\n";
    if (r.crosscheck_ran)
        std::cout << "interpolation crosscheck: " << (r.crosscheck_pass ? "pass" : "FAIL") << "\n";
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
}

int run_zeta_cmd(CommonArgs& args, const std::string& plot_path, bool no_crosscheck) {
    auto parsed = nok::parse_ideal(read_input(args.input_path));
    apply_vars_order(parsed, args.vars_order);
    args.options.crosscheck = !no_crosscheck;
    args.options.timings = args.timings;
    auto result = nok::run_zeta_pipeline(*parsed.ideal, parsed.valuation, args.options);
    if (!plot_path.empty()) export_plot(result.fiber_volume, result.body, plot_path);
    if (args.plain)
        print_plain(parsed, result);
    else
        std::cout << nok::json_result_document(parsed, result, args.options).dump(2) << "\n";
    return result.consistency_ok() ? 0 : 5;
}

nok::VPolyhedron compute_body(const nok::ParsedIdeal& parsed, const nok::PipelineOptions& options,
                              std::optional<bool>* stabilized) {
    const auto& ideal = *parsed.ideal;
    if (nok::is_monomial_ideal(ideal)) return nok::newton_polyhedron(ideal);
    int n = ideal.num_vars - 1;
    int d = nok::generating_degree(ideal);
    int s_max = options.s_max >= 0 ? options.s_max : options.t_max * d + n + 2;
    auto samples = nok::sample_semigroup(ideal, parsed.valuation, options.t_max, s_max,
                                         options.budget);
    auto sampled = nok::body_from_samples(samples, parsed.valuation);
    if (stabilized) *stabilized = sampled.stabilized;
    return sampled.body;
}

int run_body_cmd(CommonArgs& args, const std::string& level) {
    auto parsed = nok::parse_ideal(read_input(args.input_path));
    apply_vars_order(parsed, args.vars_order);
    std::optional<bool> stabilized;
    nok::VPolyhedron body = compute_body(parsed, args.options, &stabilized);
    bool exact = nok::is_monomial_ideal(*parsed.ideal);

    nok::Json doc;
    doc["schema_version"] = 1;
    doc["input"] = nok::json_input_echo(parsed);
    doc["body"] = nok::json_body(body, exact, stabilized);
    if (!level.empty()) {
        nok::Rational s = nok::rational_from_string(level);
        nok::SlicePolytope slice = nok::slice_at_level(body, s);
        nok::Json js;
        js["level"] = nok::json_rational(s);
        nok::Json verts = nok::Json::array();
        for (const auto& v : slice.vertices) verts.push_back(nok::json_rational_vector(v));
        js["vertices"] = verts;
        js["normalized_volume"] = nok::json_rational(nok::polytope_normalized_volume(slice));
        doc["slice"] = js;
    }
    if (args.plain) {
        std::cout << "vertices:\n";
        for (const auto& v : body.vertices) {
            std::cout << "  (";
            for (std::size_t i = 0; i < v.size(); ++i)
                std::cout << (i ? ", " : "") << nok::rational_to_string(v[i]);
            std::cout << ")\n";
        }
        std::cout << "rays: " << body.rays.size() << " (nonnegative orthant)\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int run_fiber_volume_cmd(CommonArgs& args, const std::string& plot_path) {
    auto parsed = nok::parse_ideal(read_input(args.input_path));
    apply_vars_order(parsed, args.vars_order);
    nok::VPolyhedron body = compute_body(parsed, args.options, nullptr);
    auto vol = nok::fiber_volume_function(body, parsed.valuation.dehomogenize_index);
    if (!plot_path.empty()) export_plot(vol, body, plot_path);
    if (args.plain) {
        std::cout << "breakpoints:";
        for (const auto& b : vol.breakpoints) std::cout << " " << nok::rational_to_string(b);
        std::cout << "\n";
        for (std::size_t i = 0; i < vol.pieces.size(); ++i)
            std::cout << "[" << nok::rational_to_string(vol.breakpoints[i]) << ", "
                      << nok::rational_to_string(vol.breakpoints[i + 1])
                      << "]: " << vol.pieces[i].str("s") << "\n";
        std::cout << "[" << nok::rational_to_string(vol.breakpoints.back())
                  << ", inf): " << vol.tail.str("s") << "\n";
    } else {
        nok::Json doc;
        doc["schema_version"] = 1;
        doc["input"] = nok::json_input_echo(parsed);
        doc["fiber_volume"] = nok::json_fiber_volume(vol);
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int run_index_cmd(CommonArgs& args, const std::string& level) {
    auto parsed = nok::parse_ideal(read_input(args.input_path));
    nok::Rational q = nok::rational_from_string(level);
    nok::Rational index;
    if (nok::is_integer(q)) {
        index = nok::intersection_index_monomial(*parsed.ideal,
                                                 static_cast<int>(q.get_num().get_si()));
    } else {
        index = nok::rational_index(*parsed.ideal, q);
    }
    if (args.plain) {
        std::cout << "index at " << nok::rational_to_string(q) << " = "
                  << nok::rational_to_string(index) << "\n";
    } else {
        nok::Json doc;
        doc["schema_version"] = 1;
        doc["input"] = nok::json_input_echo(parsed);
        doc["level"] = nok::json_rational(q);
        doc["index"] = nok::json_rational(index);
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-Okounkov bodies, Segre degrees, and Segre zeta functions of "
                 "homogeneous ideals, in exact rational arithmetic"};
    app.require_subcommand(1);

    CommonArgs zeta_args, body_args, fiber_args, index_args;
    std::string zeta_plot, fiber_plot, body_level, index_level;
    bool no_crosscheck = false;

    CLI::App* zeta = app.add_subcommand("zeta", "full pipeline: body, integral, sigma, zeta");
    add_common(zeta, zeta_args);
    zeta->add_flag("--no-crosscheck", no_crosscheck, "skip the interpolation oracle");
    zeta->add_option("--export-plot", zeta_plot, "write slice level/volume CSV");

    CLI::App* body = app.add_subcommand("body", "Newton-Okounkov body only");
    add_common(body, body_args);
    body->add_option("--level", body_level, "also slice the body at this level");

    CLI::App* fiber = app.add_subcommand("fiber-volume", "piecewise slice-volume function");
    add_common(fiber, fiber_args);
    fiber->add_option("--export-plot", fiber_plot, "write slice level/volume CSV");

    CLI::App* index = app.add_subcommand("index", "intersection index of a monomial ideal");
    add_common(index, index_args);
    index->add_option("--s", index_level, "degree (integer or rational like 5/2)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (zeta->parsed()) return run_zeta_cmd(zeta_args, zeta_plot, no_crosscheck);
        if (body->parsed()) return run_body_cmd(body_args, body_level);
        if (fiber->parsed()) return run_fiber_volume_cmd(fiber_args, fiber_plot);
        if (index->parsed()) return run_index_cmd(index_args, index_level);
    } catch (const nok::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nok::budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    } catch (const nok::consistency_error& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 5;
    } catch (const nok::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
