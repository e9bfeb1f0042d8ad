#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "nok/semigroup.hpp"

using namespace nok;

namespace {

MultiPoly mono(int nv, ExponentVector e) { return MultiPoly::monomial(nv, std::move(e)); }

MultiPoly random_multipoly(std::mt19937& rng, int nv) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> coeff(1, 5);
    MultiPoly p(nv);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExponentVector e(static_cast<std::size_t>(nv));
        for (auto& x : e) x = expo(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

std::set<std::vector<int>> tau_set(const SemigroupSample& sample, const ValuationConfig& cfg) {
    std::set<std::vector<int>> out;
    for (const auto& [v, s] : sample.points) out.insert(tau_image(v, s, cfg).coords);
    return out;
}

} // namespace

TEST_CASE("values of monomials and polynomials") {
    auto cfg = default_valuation(3);
    CHECK(value_of(mono(3, {2, 1, 3}), cfg) == std::vector<int>{1, 3});

    MultiPoly one_plus_x1 = MultiPoly::monomial(3, {0, 0, 0}) + MultiPoly::monomial(3, {0, 1, 0});
    CHECK(value_of(one_plus_x1, cfg) == std::vector<int>{0, 0});

    // x1^2 vs x1 x2: (1,1) precedes (2,0) with x1 most significant.
    MultiPoly p = mono(3, {0, 2, 0}) + mono(3, {0, 1, 1});
    CHECK(value_of(p, cfg) == std::vector<int>{1, 1});

    CHECK_THROWS_AS(value_of(MultiPoly(3), cfg), zero_polynomial);
}

TEST_CASE("valuation order respects the configured priority") {
    ValuationConfig cfg;
    cfg.num_vars = 3;
    cfg.dehomogenize_index = 0;
    cfg.variable_order = {2, 1}; // x2 most significant
    validate(cfg);
    MultiPoly p = mono(3, {0, 2, 0}) + mono(3, {0, 1, 1});
    // Keys now compare x2 first: (2,0) has x2-exponent 0, wins.
    CHECK(value_of(p, cfg) == std::vector<int>{2, 0});
}

TEST_CASE("extended valuation factors out the new variable first") {
    auto cfg = default_valuation(3); // vars x0..x2, n = 2
    auto ext = extend_valuation(cfg);
    CHECK(ext.num_vars == 4);
    CHECK(ext.variable_order == std::vector<int>{3, 1, 2});

    // x3^2 * x1 -> ((1,0), 2)
    CHECK(value_of(mono(4, {0, 1, 0, 2}), ext) == std::vector<int>{1, 0, 2});

    // x1 + x3 -> e = 0, g|_{x3=0} = x1
    MultiPoly f = mono(4, {0, 1, 0, 0}) + mono(4, {0, 0, 0, 1});
    CHECK(value_of(f, ext) == std::vector<int>{1, 0, 0});

    MultiPoly c = MultiPoly::monomial(4, {0, 0, 0, 0}, Rational(7));
    CHECK(value_of(c, ext) == std::vector<int>{0, 0, 0});
}

TEST_CASE("valuation is multiplicative") {
    std::mt19937 rng(41);
    auto cfg = default_valuation(3);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = random_multipoly(rng, 3);
        MultiPoly q = random_multipoly(rng, 3);
        std::vector<int> expect(2);
        auto vp = value_of(p, cfg);
        auto vq = value_of(q, cfg);
        for (std::size_t i = 0; i < expect.size(); ++i)
            expect[i] = vp[i] + vq[i];
        CHECK(value_of(p * q, cfg) == expect);
    }
}

TEST_CASE("value image cardinality equals dimension") {
    MultiPoly lin = mono(3, {1, 0, 0}) + mono(3, {0, 1, 0});
    MultiPoly mixed = mono(3, {2, 0, 0}) + mono(3, {0, 1, 1});
    HomogeneousIdeal I(3, {lin, mixed});
    auto cfg = default_valuation(3);
    for (int t = 1; t <= 2; ++t)
        for (int s = t; s <= t + 3; ++s) {
            auto piece = graded_piece_basis(I, t, s, cfg);
            CHECK(value_image(piece, cfg).size() == piece.basis.size());
        }
}

TEST_CASE("semigroup samples of the running examples") {
    auto cfg3 = default_valuation(3);
    HomogeneousIdeal I(3, {mono(3, {1, 1, 0})});
    auto samples = sample_semigroup(I, cfg3, 1, 3);
    REQUIRE(samples.size() == 1);
    std::set<std::vector<int>> expected{{1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}};
    CHECK(tau_set(samples[0], cfg3) == expected);

    auto cfg2 = default_valuation(2);
    MultiPoly lin = mono(2, {1, 0}) + mono(2, {0, 1});
    HomogeneousIdeal L(2, {lin});
    auto lsamples = sample_semigroup(L, cfg2, 1, 2);
    std::set<std::vector<int>> expected_taus;
    for (const auto& [v, s] : lsamples[0].points)
        expected_taus.insert(tau_image(v, s, cfg2).coords);
    CHECK(expected_taus.count({1, 0}) == 1);
    CHECK(expected_taus.count({2, 0}) == 1);
    CHECK(expected_taus.count({1, 1}) == 1);

    // below the minimum generator degree the graded piece is zero
    auto piece = graded_piece_basis(I, 1, 1, cfg3);
    CHECK(piece.basis.empty());
}

TEST_CASE("semigroup additivity on sampled ranges") {
    MultiPoly lin = mono(3, {1, 0, 0}) + mono(3, {0, 1, 0});
    HomogeneousIdeal I(3, {lin, mono(3, {1, 0, 1})});
    auto cfg = default_valuation(3);
    auto pieces = [&](int t, int s) {
        std::set<std::vector<int>> out;
        for (const auto& v : value_image(graded_piece_basis(I, t, s, cfg), cfg)) out.insert(v);
        return out;
    };
    for (int s = 1; s <= 3; ++s)
        for (int r = 1; r <= 2; ++r) {
            auto vs = pieces(1, s);
            auto vr = pieces(1, r);
            auto vsum = pieces(2, s + r);
            for (const auto& a : vs)
                for (const auto& b : vr) {
                    std::vector<int> c(a.size());
                    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
                    CHECK(vsum.count(c) == 1);
                }
        }
}

TEST_CASE("orthant absorption of tau points") {
    for (const auto& I : nok_test::monomial_corpus(5, 2024)) {
        auto cfg = default_valuation(I.num_vars);
        int d = generating_degree(I);
        int s_max = d + 2;
        auto samples = sample_semigroup(I, cfg, 1, s_max);
        std::set<std::pair<std::vector<int>, int>> tau_with_degree;
        for (const auto& [v, s] : samples[0].points)
            tau_with_degree.emplace(tau_image(v, s, cfg).coords, s);
        for (const auto& [tau, s] : tau_with_degree) {
            if (s + 1 > s_max) continue;
            for (std::size_t i = 0; i < tau.size(); ++i) {
                std::vector<int> up = tau;
                up[i] += 1;
                CHECK(tau_with_degree.count({up, s + 1}) == 1);
            }
        }
    }
}

TEST_CASE("extended valuation splits extended graded pieces by the new exponent") {
    // Values of the extension I' in degree j assemble from values of I in
    // degrees j, j-1, ..., with the new-variable exponent appended.
    MultiPoly lin = mono(3, {1, 0, 0}) + mono(3, {0, 1, 0});
    MultiPoly mixed = mono(3, {2, 0, 0}) + mono(3, {0, 1, 1});
    for (const HomogeneousIdeal& I :
         {HomogeneousIdeal(3, {mono(3, {1, 1, 0})}), HomogeneousIdeal(3, {lin, mixed})}) {
        auto cfg = default_valuation(I.num_vars);
        auto ext_cfg = extend_valuation(cfg);
        HomogeneousIdeal ext = extend_ideal(I, 1);
        for (int j = 1; j <= generating_degree(I) + 2; ++j) {
            auto lhs_piece = graded_piece_basis(ext, 1, j, ext_cfg);
            std::set<std::vector<int>> lhs;
            for (const auto& v : value_image(lhs_piece, ext_cfg)) lhs.insert(v);

            std::set<std::vector<int>> rhs;
            for (int i = 0; i <= j; ++i) {
                auto piece = graded_piece_basis(I, 1, j - i, cfg);
                for (const auto& v : value_image(piece, cfg)) {
                    std::vector<int> w = v;
                    w.push_back(i);
                    rhs.insert(w);
                }
            }
            CHECK(lhs == rhs);
        }
    }
}
