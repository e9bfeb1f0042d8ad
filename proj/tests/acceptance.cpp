// Acceptance suite: runs every acceptance criterion and prints one pass/fail
// line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "nok/pipeline.hpp"

using namespace nok;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, const std::string& title, bool pass, double ms,
            const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "  ["
              << static_cast<long>(ms) << " ms]";
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

void run(int number, const std::string& title, const std::function<void()>& body) {
    auto t0 = Clock::now();
    bool pass = true;
    std::string detail;
    try {
        body();
    } catch (const std::exception& e) {
        pass = false;
        detail = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    report(number, title, pass, ms, detail);
}

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& what) {
    if (!condition) throw check_failure(what);
}

MultiPoly mono(int nv, ExponentVector e) { return MultiPoly::monomial(nv, std::move(e)); }

RationalFunctionT rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    std::vector<Rational> n, d;
    for (long x : num) n.emplace_back(x);
    for (long x : den) d.emplace_back(x);
    return RationalFunctionT(PolyT(std::move(n)), PolyT(std::move(d)));
}

const std::vector<HomogeneousIdeal>& corpus() {
    static std::vector<HomogeneousIdeal> ideals = nok_test::monomial_corpus(50);
    return ideals;
}

} // namespace

int main() {
    // 1. Hypersurface exactness for (x0 x1) in 3 variables.
    run(1, "hypersurface exactness", [] {
        auto t0 = Clock::now();
        HomogeneousIdeal I(3, {mono(3, {1, 1, 0})});
        RationalFunctionT R = monomial_integral(I);
        expect(R == rf({1}, {1, 2}), "integral != 1/(1+2t)");
        SegreDegrees sigma = sigma_from_integral(R, 2);
        expect(sigma.sigma == std::vector<Rational>{1, -2, 4}, "sigma != (1,-2,4)");
        expect(sigma_by_interpolation(I) == sigma, "interpolation oracle disagrees");
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        expect(ms < 1000.0, "runtime exceeded 1 s");
    });

    // 2. Complete-intersection family in 3 and 4 variables.
    run(2, "complete intersections (x0^d0, x1^d1)", [] {
        for (auto [d0, d1] : std::vector<std::pair<int, int>>{{1, 1}, {2, 3}, {3, 3}}) {
            for (int nv : {3, 4}) {
                auto t0 = Clock::now();
                ExponentVector e0(static_cast<std::size_t>(nv), 0), e1 = e0;
                e0[0] = d0;
                e1[1] = d1;
                HomogeneousIdeal I(nv, {mono(nv, e0), mono(nv, e1)});
                RationalFunctionT R = monomial_integral(I);
                ZetaReport report = zeta_report(R, pruned_generator_degrees(I));
                RationalFunctionT expected(
                    PolyT::monomial(Rational(d0 * d1), 2),
                    PolyT({Rational(1), Rational(d0)}) * PolyT({Rational(1), Rational(d1)}));
                std::ostringstream label;
                label << "(" << d0 << "," << d1 << ") in " << nv << " vars";
                expect(report.zeta == expected, "zeta mismatch for " + label.str());
                double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
                expect(ms < 5000.0, "runtime exceeded 5 s for " + label.str());
            }
        }
    });

    // 3. Oracle equivalence over the random monomial corpus.
    run(3, "oracle equivalence on 50 random monomial ideals", [] {
        auto t0 = Clock::now();
        for (const auto& I : corpus()) {
            const int n = I.num_vars - 1;
            RationalFunctionT R = monomial_integral(I);
            SegreDegrees from_integral = sigma_from_integral(R, n);
            SegreDegrees from_oracle = sigma_by_interpolation(I);
            expect(from_integral == from_oracle, "sigma mismatch between the two paths");
            expect(from_integral.sigma[0] == 1, "sigma_0 != 1");
            for (const auto& s : from_integral.sigma)
                expect(is_integer(s), "non-integer sigma entry");
            ZetaReport report = zeta_report(R, pruned_generator_degrees(I));
            expect(report.pole_check, "pole check failed");
        }
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        expect(ms < 60000.0, "corpus runtime exceeded 60 s");
    });

    // 4. Dimension independence under variable extension.
    run(4, "dimension independence (extend by 1 and 2)", [] {
        for (const auto& I : corpus()) {
            RationalFunctionT base = monomial_integral(I);
            expect(monomial_integral(extend_ideal(I, 1)) == base,
                   "extension by one variable changed the integral");
            expect(monomial_integral(extend_ideal(I, 2)) == base,
                   "extension by two variables changed the integral");
        }
    });

    // 5. Beta closed form and twist-action unit suites.
    run(5, "beta integral closed form and twist action", [] {
        for (int n = 0; n <= 4; ++n)
            for (int i = 0; i <= n; ++i) {
                RationalFunctionT integral =
                    integrate_piece(PolyT::monomial(Rational(1), i), Rational(0), std::nullopt, n);
                BetaMonomial beta = beta_integral(n, i);
                RationalFunctionT expected = RationalFunctionT::from_poly(
                    PolyT::monomial(beta.coefficient, n + 1 + beta.power));
                expect(integral == expected, "beta closed form mismatch");
            }
        std::mt19937 rng(2718);
        std::uniform_int_distribution<int> coeff(-9, 9);
        std::uniform_int_distribution<int> shift(-5, 5);
        for (int trial = 0; trial < 100; ++trial) {
            ShadowClass G;
            for (int i = 0; i <= 4; ++i) G.g.emplace_back(coeff(rng));
            long a = shift(rng);
            long b = shift(rng);
            expect(t_transform(t_transform(G, b), a) == t_transform(G, a + b),
                   "T_a T_b != T_{a+b}");
            expect(t_transform(t_transform(G, a), -a) == G, "T_{-a} T_a != id");
        }
    });

    // 6. Sampled bodies reproduce Newton polyhedra exactly at t_max = 1.
    run(6, "monomial bodies from semigroup samples", [] {
        for (const auto& I : corpus()) {
            auto cfg = default_valuation(I.num_vars);
            int d = generating_degree(I);
            int n = I.num_vars - 1;
            auto samples = sample_semigroup(I, cfg, 1, d + n + 1);
            SampledBody sampled = body_from_samples(samples, cfg);
            expect(polyhedra_equal(sampled.body, newton_polyhedron(I)),
                   "sampled body differs from the Newton polyhedron");
        }
    });

    // 7. Non-monomial smoke: monotone bodies, stabilization, hyperplane class.
    run(7, "non-monomial sampling", [] {
        MultiPoly lin = mono(2, {1, 0}) + mono(2, {0, 1});
        HomogeneousIdeal L(2, {lin});
        auto cfg2 = default_valuation(2);
        VPolyhedron prev;
        bool have_prev = false;
        for (int t_max = 1; t_max <= 3; ++t_max) {
            auto body = body_from_samples(sample_semigroup(L, cfg2, t_max, t_max + 3), cfg2);
            if (have_prev)
                expect(polyhedron_subset(prev, body.body), "hyperplane bodies shrank");
            prev = body.body;
            have_prev = true;
        }
        auto stab = body_from_samples(sample_semigroup(L, cfg2, 2, 6), cfg2);
        expect(stab.stabilized.has_value() && *stab.stabilized,
               "hyperplane body did not stabilize at t_max = 1");
        expect(sampled_integral(L, cfg2, 1, 4).integral == rf({1}, {1, 1}),
               "hyperplane integral != 1/(1+t)");

        MultiPoly g1 = mono(3, {2, 0, 0}) + mono(3, {0, 1, 1});
        HomogeneousIdeal M(3, {g1, mono(3, {1, 1, 0})});
        auto cfg3 = default_valuation(3);
        have_prev = false;
        for (int t_max = 1; t_max <= 3; ++t_max) {
            auto body = body_from_samples(sample_semigroup(M, cfg3, t_max, 2 * t_max + 3), cfg3);
            if (have_prev)
                expect(polyhedron_subset(prev, body.body), "two-generator bodies shrank");
            prev = body.body;
            have_prev = true;
        }
    });

    // 8. Fiber-volume certification and fractional spot checks.
    run(8, "fiber-volume certification", [] {
        for (const auto& I : corpus()) {
            const int n = I.num_vars - 1;
            VPolyhedron body = newton_polyhedron(I);
            PiecewisePolynomial vol = fiber_volume_function(body); // extra samples verified inside
            expect(vol.tail.degree() == n && vol.tail.leading() == 1,
                   "tail is not monic of degree n");
            Rational q = Rational(generating_degree(I)) + Rational(1, 2);
            expect(vol.tail.eval(q) == rational_index(I, q),
                   "tail value differs from the fractional intersection index");
        }
    });

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
