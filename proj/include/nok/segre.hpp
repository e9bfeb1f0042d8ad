#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nok/fiber_volume.hpp"
#include "nok/poly_t.hpp"
#include "nok/polyhedron.hpp"
#include "nok/polyring.hpp"
#include "nok/semigroup.hpp"

namespace nok {

// ---------------------------------------------------------------------------
// closed-form integration
// ---------------------------------------------------------------------------

// Value of (n+1) * integral over [0, inf) of s^i / (1+st)^(n+2) ds, which is
// the Laurent monomial coefficient * t^power with power = -(i+1).
struct BetaMonomial {
    Rational coefficient;
    int power = 0;
};

inline BetaMonomial beta_integral(int n, int i) {
    if (i < 0 || i > n) throw index_out_of_range("beta integral needs 0 <= i <= n");
    return BetaMonomial{Rational(1) / binomial(static_cast<unsigned long>(n),
                                               static_cast<unsigned long>(i)),
                        -(i + 1)};
}

inline PolyT poly_power(const PolyT& base, int e) {
    PolyT acc(Rational(1));
    for (int k = 0; k < e; ++k) acc *= base;
    return acc;
}

namespace detail {

// Antiderivative value at u = 1 + gamma*t of the substituted integrand:
// (n+1) * sum_k c_k t^(n-k) * sum_j C(k,j) (-1)^(k-j) u^(j-n-1) / (j-n-1).
// Every exponent j-n-2 in the integrand is <= -2, so no logarithms arise
// and the value at infinity is zero.
inline RationalFunctionT integral_boundary_term(const PolyT& p, const Rational& gamma, int n) {
    PolyT u({Rational(1), gamma}); // 1 + gamma t
    PolyT num;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational ck = p.coeff(k);
        if (ck == 0) continue;
        PolyT inner;
        for (int j = 0; j <= k; ++j) {
            Rational c = binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j));
            if ((k - j) % 2 != 0) c = -c;
            c /= Rational(j - n - 1);
            inner += poly_power(u, j).scaled(c);
        }
        num += (PolyT::monomial(ck, n - k) * inner);
    }
    num = num.scaled(Rational(n + 1));
    return RationalFunctionT(num, poly_power(u, n + 1));
}

} // namespace detail

// Exact value of (n+1) * integral of p(s) t^(n+1) / (1+st)^(n+2) ds over
// [alpha, beta] (beta may be infinite), as a rational function of t.
inline RationalFunctionT integrate_piece(const PolyT& p, const Rational& alpha,
                                         const std::optional<Rational>& beta, int n) {
    if (alpha < 0) throw precondition_error("integration interval must start at alpha >= 0");
    if (beta && *beta <= alpha) throw precondition_error("integration interval is empty");
    if (p.is_zero()) return RationalFunctionT();
    if (p.degree() > n)
        throw precondition_error("piece degree exceeds the ambient dimension bound");
    RationalFunctionT upper = beta ? detail::integral_boundary_term(p, *beta, n)
                                   : RationalFunctionT();
    RationalFunctionT lower = detail::integral_boundary_term(p, alpha, n);
    return upper - lower;
}

namespace detail {

// Divide (1 + d t) factors out of a polynomial as often as they go.
inline PolyT strip_degree_factors(PolyT den, const std::vector<int>& degrees) {
    std::vector<int> distinct = degrees;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int d : distinct) {
        PolyT factor({Rational(1), Rational(d)});
        while (den.degree() >= 1) {
            auto [q, r] = PolyT::divmod(den, factor);
            if (!r.is_zero()) break;
            den = q;
        }
    }
    return den;
}

// Fallback root scan for diagnostics: which poles -1/d (integer d) remain in
// a residual denominator factor.
inline std::string describe_residual_poles(const PolyT& residual) {
    std::string found;
    for (int d = 1; d <= 1000; ++d) {
        if (residual.eval(Rational(-1, d)) == 0) {
            if (!found.empty()) found += ", ";
            found += "-1/" + std::to_string(d);
        }
    }
    std::string msg = "reduced denominator keeps the factor " + residual.str();
    if (found.empty())
        msg += " with no rational pole of the form -1/d, d <= 1000";
    else
        msg += " with poles at " + found + " not matching any generator degree";
    return msg;
}

} // namespace detail

// Sum of the piece integrals: the full density integral of the body whose
// slice volumes are described by `vol`. Equals 1 - zeta when the body is
// exact.
inline RationalFunctionT density_integral(const PiecewisePolynomial& vol, int n) {
    RationalFunctionT total;
    for (std::size_t i = 0; i + 1 < vol.breakpoints.size(); ++i)
        total = total + integrate_piece(vol.pieces[i], vol.breakpoints[i],
                                        vol.breakpoints[i + 1], n);
    total = total + integrate_piece(vol.tail, vol.breakpoints.back(), std::nullopt, n);
    return total;
}

// Same, but every pole of the reduced result must be -1/d for one of the
// given generator degrees; a residue means the body was inexact.
inline RationalFunctionT density_integral(const PiecewisePolynomial& vol, int n,
                                          const std::vector<int>& generator_degrees) {
    RationalFunctionT total = density_integral(vol, n);
    PolyT residual = detail::strip_degree_factors(total.den(), generator_degrees);
    if (residual.degree() > 0)
        throw residual_spurious_pole(detail::describe_residual_poles(residual));
    return total;
}

// ---------------------------------------------------------------------------
// Segre degrees and the zeta report
// ---------------------------------------------------------------------------

struct SegreDegrees {
    int n = 0;
    std::vector<Rational> sigma; // sigma_0 .. sigma_n, integers, sigma_0 = 1

    friend bool operator==(const SegreDegrees& a, const SegreDegrees& b) {
        return a.n == b.n && a.sigma == b.sigma;
    }
};

// First n+1 series coefficients of R; these are the Segre degrees when R is
// the density integral of an exact body.
inline SegreDegrees sigma_from_integral(const RationalFunctionT& R, int n) {
    if (R.at_zero() != 1) throw precondition_error("integral must have value 1 at t = 0");
    SeriesTrunc series = rf_to_series(R, n);
    SegreDegrees out;
    out.n = n;
    for (const auto& c : series.coefficients) {
        if (!is_integer(c))
            throw non_integer_degree("Segre degree " + rational_to_string(c) +
                                     " is not an integer");
        out.sigma.push_back(c);
    }
    if (out.sigma[0] != 1) throw consistency_error("sigma_0 must equal 1");
    return out;
}

struct ZetaReport {
    RationalFunctionT zeta;
    std::vector<int> degree_sequence_used;
    std::vector<int> matched_degrees; // factors 1 + d t found in the denominator
    PolyT numerator_A;
    bool pole_check = false;
    bool nonneg_check = false;
};

// Structural checks on zeta = 1 - R: the reduced denominator must divide the
// product of (1 + d_i t) over the generator degrees, and the numerator
// remainder A(t) after removing the top term (prod d_i) t^(r+1) should be a
// polynomial of degree <= r with nonnegative integer coefficients. Failures
// are recorded, never thrown.
inline ZetaReport zeta_report(const RationalFunctionT& R, const std::vector<int>& generator_degrees) {
    if (R.at_zero() != 1) throw precondition_error("zeta report expects R(0) = 1");
    ZetaReport report;
    report.zeta = RationalFunctionT::from_poly(PolyT(Rational(1))) - R;
    report.degree_sequence_used = generator_degrees;

    PolyT den = report.zeta.den();
    std::vector<int> degrees = generator_degrees;
    std::sort(degrees.begin(), degrees.end());
    for (int d : degrees) {
        if (den.degree() < 1) break;
        PolyT factor({Rational(1), Rational(d)});
        auto [q, r] = PolyT::divmod(den, factor);
        if (r.is_zero()) {
            den = q;
            report.matched_degrees.push_back(d);
        }
    }
    report.pole_check = (den.degree() == 0);

    if (report.zeta.is_zero()) {
        report.nonneg_check = true;
        return report;
    }
    if (report.matched_degrees.empty()) {
        report.numerator_A = report.zeta.num();
        report.nonneg_check = false;
        return report;
    }

    PolyT product(Rational(1));
    Rational degree_product(1);
    for (int d : report.matched_degrees) {
        product *= PolyT({Rational(1), Rational(d)});
        degree_product *= Rational(d);
    }
    const int r1 = static_cast<int>(report.matched_degrees.size());
    auto [expanded, rem] = PolyT::divmod(report.zeta.num() * product, report.zeta.den());
    if (!rem.is_zero()) {
        // Denominator does not divide the matched product; already recorded.
        report.nonneg_check = false;
        return report;
    }
    PolyT A = expanded - PolyT::monomial(degree_product, r1);
    report.numerator_A = A;
    bool ok = A.degree() <= r1 - 1;
    for (int i = 0; ok && i <= A.degree(); ++i) {
        Rational c = A.coeff(i);
        if (!is_integer(c) || c < 0) ok = false;
    }
    report.nonneg_check = ok;
    return report;
}

// ---------------------------------------------------------------------------
// shadow classes and intersection indices
// ---------------------------------------------------------------------------

// Coefficients (g_0, ..., g_n) of a class sum g_i h^i packaging the
// multidegrees of the rational map of a linear system.
struct ShadowClass {
    std::vector<Rational> g;

    friend bool operator==(const ShadowClass& a, const ShadowClass& b) { return a.g == b.g; }
};

// The twist action on shadow classes: coefficient i of T_a(G) is
// sum_{j<=i} C(i,j) a^(i-j) g_j. Composition adds the twists.
inline ShadowClass t_transform(const ShadowClass& G, long a) {
    ShadowClass out;
    out.g.resize(G.g.size());
    for (std::size_t i = 0; i < G.g.size(); ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j <= i; ++j) {
            Rational term = binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j));
            term *= rational_pow(Rational(a), static_cast<unsigned long>(i - j));
            acc += term * G.g[j];
        }
        out.g[i] = acc;
    }
    return out;
}

// Multidegrees of the degree-s system recovered from the Segre degrees.
inline ShadowClass multidegrees(const SegreDegrees& sig, long s) {
    ShadowClass shadow;
    shadow.g = sig.sigma;
    return t_transform(shadow, s);
}

namespace detail {

// Exponents of all monomials of degree s in a monomial ideal.
inline std::vector<ExponentVector> monomials_in_degree(const HomogeneousIdeal& I, int s) {
    std::set<ExponentVector> out;
    for (const auto& g : minimal_monomial_exponents(I)) {
        int gap = s - total_degree(g);
        if (gap < 0) continue;
        for (const auto& m : monomial_exponents(I.num_vars, gap)) out.insert(exponent_sum(g, m));
    }
    return std::vector<ExponentVector>(out.begin(), out.end());
}

inline std::vector<QVec> dehomogenized_points(const std::vector<ExponentVector>& exps,
                                              int drop_index) {
    std::vector<QVec> pts;
    pts.reserve(exps.size());
    for (const auto& e : exps) {
        QVec p;
        p.reserve(e.size() - 1);
        for (int i = 0; i < static_cast<int>(e.size()); ++i)
            if (i != drop_index) p.emplace_back(e[static_cast<std::size_t>(i)]);
        pts.push_back(std::move(p));
    }
    return pts;
}

} // namespace detail

// Normalized volume of the hull of the dehomogenized exponents of the
// degree-s monomials: the intersection index of the linear system I_s.
inline Rational intersection_index_monomial(const HomogeneousIdeal& I, int s) {
    if (!is_monomial_ideal(I)) throw not_monomial("intersection index requires a monomial ideal");
    int d = generating_degree(I);
    if (s < d)
        throw degree_too_small("degree " + std::to_string(s) + " is below the generating degree " +
                               std::to_string(d));
    auto exps = detail::monomials_in_degree(I, s);
    return polytope_normalized_volume(detail::dehomogenized_points(exps, 0));
}

namespace detail {

// Monomial ideal I^a, generated by the a-fold products of generators.
inline HomogeneousIdeal monomial_power_ideal(const HomogeneousIdeal& I, int a) {
    std::vector<ExponentVector> gens = minimal_monomial_exponents(I);
    std::vector<ExponentVector> products;
    ExponentVector zero(static_cast<std::size_t>(I.num_vars), 0);
    auto rec = [&](auto&& self, std::size_t first, int left, const ExponentVector& acc) -> void {
        if (left == 0) {
            products.push_back(acc);
            return;
        }
        for (std::size_t i = first; i < gens.size(); ++i)
            self(self, i, left - 1, exponent_sum(acc, gens[i]));
    };
    rec(rec, 0, a, zero);
    std::vector<MultiPoly> power_gens;
    for (const auto& e : products) power_gens.push_back(MultiPoly::monomial(I.num_vars, e));
    return HomogeneousIdeal(I.num_vars, std::move(power_gens));
}

} // namespace detail

// Index at a rational level q = b/a: the index of (I^a)_b scaled by 1/a^n.
// Well defined because powers rescale the index by a^n.
inline Rational rational_index(const HomogeneousIdeal& I, const Rational& q) {
    if (!is_monomial_ideal(I)) throw not_monomial("rational index requires a monomial ideal");
    int d = generating_degree(I);
    if (q < d)
        throw degree_too_small("level " + rational_to_string(q) +
                               " is below the generating degree " + std::to_string(d));
    mpz_class a_z = q.get_den();
    mpz_class b_z = q.get_num();
    if (!a_z.fits_sint_p() || !b_z.fits_sint_p())
        throw precondition_error("rational level is too large");
    int a = static_cast<int>(a_z.get_si());
    int b = static_cast<int>(b_z.get_si());
    if (a == 1) return intersection_index_monomial(I, b);
    HomogeneousIdeal Ia = detail::monomial_power_ideal(I, a);
    Rational index = intersection_index_monomial(Ia, b);
    const int n = I.num_vars - 1;
    return index / rational_pow(Rational(a), static_cast<unsigned long>(n));
}

// Independent oracle: fit the index polynomial on the n+2 degrees
// d, ..., d+n+1 (the last sample verifies the fit) and divide out the
// binomial factors to recover the Segre degrees.
inline SegreDegrees sigma_by_interpolation(const HomogeneousIdeal& I) {
    if (!is_monomial_ideal(I)) throw not_monomial("interpolation oracle requires a monomial ideal");
    const int n = I.num_vars - 1;
    const int d = generating_degree(I);
    std::vector<std::pair<Rational, Rational>> samples;
    for (int s = d; s <= d + n + 1; ++s)
        samples.emplace_back(Rational(s), intersection_index_monomial(I, s));
    PolyT fit = interpolate_polynomial(samples, n);
    SegreDegrees out;
    out.n = n;
    for (int j = 0; j <= n; ++j) {
        Rational sigma_j = fit.coeff(n - j) / binomial(static_cast<unsigned long>(n),
                                                       static_cast<unsigned long>(j));
        if (!is_integer(sigma_j))
            throw non_integer_degree("interpolated sigma_" + std::to_string(j) + " = " +
                                     rational_to_string(sigma_j) + " is not an integer");
        out.sigma.push_back(sigma_j);
    }
    if (out.sigma[0] != 1) throw consistency_error("interpolated sigma_0 must equal 1");
    return out;
}

// ---------------------------------------------------------------------------
// end-to-end integral paths
// ---------------------------------------------------------------------------

// Exact path: Newton polyhedron -> slice volumes -> density integral, with
// the pole check enforced against the minimal generator degrees.
inline RationalFunctionT monomial_integral(const HomogeneousIdeal& I) {
    VPolyhedron body = newton_polyhedron(I);
    PiecewisePolynomial vol = fiber_volume_function(body);
    return density_integral(vol, I.num_vars - 1, pruned_generator_degrees(I));
}

struct SampledIntegral {
    RationalFunctionT integral;
    SampledBody body;
    PiecewisePolynomial volume;
    std::optional<std::string> pole_warning;
};

// Approximate path for general ideals: the integral of the inner
// approximation obtained from finitely many semigroup samples. Spurious
// poles are reported, not fatal, since the body may be inexact.
inline SampledIntegral sampled_integral(const HomogeneousIdeal& I, const ValuationConfig& cfg,
                                        int t_max, int s_max, long long budget = 200000) {
    SampledIntegral out;
    auto samples = sample_semigroup(I, cfg, t_max, s_max, budget);
    out.body = body_from_samples(samples, cfg);
    out.volume = fiber_volume_function(out.body.body, cfg.dehomogenize_index);
    out.integral = density_integral(out.volume, I.num_vars - 1);
    PolyT residual = detail::strip_degree_factors(out.integral.den(), pruned_generator_degrees(I));
    if (residual.degree() > 0)
        out.pole_warning = detail::describe_residual_poles(residual) + " (inexact body?)";
    return out;
}

// Dimension independence: rerun the pipeline after appending variables and
// compare. Exact equality on the monomial path; series comparison to order
// n on the sampled path.
inline bool zeta_extension_check(const HomogeneousIdeal& I, const ValuationConfig& cfg, int extra,
                                 int t_max = 1, int s_max = -1, long long budget = 200000) {
    if (extra < 0) throw precondition_error("cannot extend by a negative number of variables");
    if (extra == 0) return true;
    if (is_monomial_ideal(I))
        return monomial_integral(I) == monomial_integral(extend_ideal(I, extra));

    const int n = I.num_vars - 1;
    int d = generating_degree(I);
    if (s_max < 0) s_max = t_max * d + n + 2;
    ValuationConfig ext_cfg = cfg;
    for (int i = 0; i < extra; ++i) ext_cfg = extend_valuation(ext_cfg);
    RationalFunctionT base = sampled_integral(I, cfg, t_max, s_max, budget).integral;
    RationalFunctionT extended =
        sampled_integral(extend_ideal(I, extra), ext_cfg, t_max, s_max, budget).integral;
    return rf_to_series(base, n) == rf_to_series(extended, n);
}

} // namespace nok
