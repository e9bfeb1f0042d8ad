#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "nok/polyring.hpp"
#include "nok/semigroup.hpp"

using namespace nok;

namespace {

MultiPoly mono(int nv, ExponentVector e) { return MultiPoly::monomial(nv, std::move(e)); }

std::set<ExponentVector> exponents_of(const std::vector<MultiPoly>& polys) {
    std::set<ExponentVector> out;
    for (const auto& p : polys) {
        REQUIRE(p.is_monomial());
        out.insert(p.terms().begin()->first);
    }
    return out;
}

std::set<ExponentVector> basis_exponents(const HomogeneousIdeal& I, int t, int s) {
    auto cfg = default_valuation(I.num_vars);
    return exponents_of(graded_piece_basis(I, t, s, cfg).basis);
}

// a-fold sums of elements of L plus one element of M, as exponent sets.
std::set<ExponentVector> product_set(const std::set<ExponentVector>& L, int a,
                                     const std::set<ExponentVector>& M) {
    std::set<ExponentVector> powers;
    if (a == 0) {
        for (const auto& m : M) powers.insert(m);
        return powers;
    }
    std::vector<ExponentVector> current(L.begin(), L.end());
    std::set<ExponentVector> acc(L.begin(), L.end());
    for (int k = 1; k < a; ++k) {
        std::set<ExponentVector> next;
        for (const auto& x : acc)
            for (const auto& l : current) next.insert(exponent_sum(x, l));
        acc = std::move(next);
    }
    std::set<ExponentVector> out;
    for (const auto& x : acc)
        for (const auto& m : M) out.insert(exponent_sum(x, m));
    return out;
}

} // namespace

TEST_CASE("spanning sets of graded pieces") {
    HomogeneousIdeal I(3, {mono(3, {1, 1, 0})});
    auto s2 = exponents_of(spanning_set(I, 1, 2));
    CHECK(s2 == std::set<ExponentVector>{{1, 1, 0}});

    auto s3 = exponents_of(spanning_set(I, 1, 3));
    CHECK(s3 == std::set<ExponentVector>{{2, 1, 0}, {1, 2, 0}, {1, 1, 1}});

    HomogeneousIdeal J(3, {mono(3, {2, 0, 0}), mono(3, {0, 3, 0})});
    auto s4 = exponents_of(spanning_set(J, 2, 4));
    CHECK(s4 == std::set<ExponentVector>{{4, 0, 0}});

    CHECK(spanning_set(I, 1, 1).empty()); // below the generator degree
}

TEST_CASE("graded piece bases") {
    HomogeneousIdeal I(2, {MultiPoly::monomial(2, {1, 0}) + MultiPoly::monomial(2, {0, 1})});
    auto cfg = default_valuation(2);
    auto piece = graded_piece_basis(I, 1, 1, cfg);
    REQUIRE(piece.basis.size() == 1);
    CHECK(piece.basis[0] == I.generators[0]);

    HomogeneousIdeal J(3, {mono(3, {1, 1, 0})});
    CHECK(graded_piece_basis(J, 1, 3, default_valuation(3)).basis.size() == 3);

    HomogeneousIdeal K(2, {mono(2, {2, 0}), mono(2, {1, 1})});
    auto k4 = basis_exponents(K, 2, 4);
    CHECK(k4 == std::set<ExponentVector>{{4, 0}, {3, 1}, {2, 2}});
}

TEST_CASE("generating degree") {
    HomogeneousIdeal pruned(3, {mono(3, {1, 1, 0}), mono(3, {2, 1, 0})});
    CHECK(generating_degree(pruned) == 2);
    CHECK(pruned_generator_degrees(pruned) == std::vector<int>{2});

    HomogeneousIdeal ci(3, {mono(3, {2, 0, 0}), mono(3, {0, 3, 0})});
    CHECK(generating_degree(ci) == 3);
    CHECK(pruned_generator_degrees(ci) == std::vector<int>{2, 3});

    // x0^2 + x0 x1 = x0 (x0 + x1): caught by the degree-2 membership check.
    MultiPoly lin = MultiPoly::monomial(2, {1, 0}) + MultiPoly::monomial(2, {0, 1});
    MultiPoly quad = MultiPoly::monomial(2, {2, 0}) + MultiPoly::monomial(2, {1, 1});
    HomogeneousIdeal general(2, {lin, quad});
    CHECK(generating_degree(general) == 1);
    CHECK(pruned_generator_degrees(general) == std::vector<int>{1});
}

TEST_CASE("ideal extension") {
    HomogeneousIdeal I(3, {mono(3, {1, 1, 0})});
    HomogeneousIdeal ext = extend_ideal(I, 1);
    CHECK(ext.num_vars == 4);
    CHECK(ext.generators[0].terms().begin()->first == ExponentVector{1, 1, 0, 0});
    CHECK(extend_ideal(I, 0).num_vars == 3);

    MultiPoly lin = MultiPoly::monomial(2, {1, 0}) + MultiPoly::monomial(2, {0, 1});
    HomogeneousIdeal L(2, {lin});
    HomogeneousIdeal Lext = extend_ideal(L, 1);
    auto span = spanning_set(Lext, 1, 1);
    REQUIRE(span.size() == 1);
    CHECK(span[0] == lin.extended(1));
}

TEST_CASE("monomial detection") {
    CHECK(is_monomial_ideal(HomogeneousIdeal(3, {mono(3, {1, 1, 0})})));
    CHECK(is_monomial_ideal(HomogeneousIdeal(3, {mono(3, {2, 0, 0}), mono(3, {0, 1, 1})})));
    MultiPoly lin = MultiPoly::monomial(2, {1, 0}) + MultiPoly::monomial(2, {0, 1});
    CHECK_FALSE(is_monomial_ideal(HomogeneousIdeal(2, {lin})));
}

TEST_CASE("graded dimensions are monotone in the degree") {
    for (const auto& I : nok_test::monomial_corpus(8, 99)) {
        auto cfg = default_valuation(I.num_vars);
        int d = generating_degree(I);
        for (int t = 1; t <= 2; ++t) {
            std::size_t prev = 0;
            for (int s = 0; s <= t * d + 3; ++s) {
                std::size_t dim = graded_piece_basis(I, t, s, cfg).basis.size();
                CHECK(dim >= prev);
                prev = dim;
            }
        }
    }
}

TEST_CASE("degree-d piece and the variables generate high pieces of powers") {
    // For monomial I with generating degree d and b >= d a, the monomials of
    // (I^a)_b are exactly the a-fold products from I_d times monomials of
    // degree b - d a.
    for (const auto& I : nok_test::monomial_corpus(6, 123)) {
        int d = generating_degree(I);
        std::set<ExponentVector> L = basis_exponents(I, 1, d);
        for (int a = 1; a <= 2; ++a) {
            for (int b = d * a; b <= d * a + 2; ++b) {
                std::set<ExponentVector> M;
                for (const auto& m : monomial_exponents(I.num_vars, b - d * a)) M.insert(m);
                CHECK(basis_exponents(I, a, b) == product_set(L, a, M));
            }
        }
    }
}

TEST_CASE("powers of graded pieces match graded pieces of powers") {
    for (const auto& I : nok_test::monomial_corpus(5, 321)) {
        int d = generating_degree(I);
        for (int a = 1; a <= 2; ++a) {
            int b = d * a + 1;
            std::set<ExponentVector> piece = basis_exponents(I, a, b);
            for (int c = 1; c <= 2; ++c) {
                std::set<ExponentVector> lhs = product_set(piece, c, {ExponentVector(
                    static_cast<std::size_t>(I.num_vars), 0)});
                CHECK(lhs == basis_exponents(I, a * c, b * c));
            }
        }
    }
}

TEST_CASE("basis values are pairwise distinct") {
    MultiPoly lin = MultiPoly::monomial(3, {1, 0, 0}) + MultiPoly::monomial(3, {0, 1, 0});
    MultiPoly mixed = MultiPoly::monomial(3, {2, 0, 0}) + MultiPoly::monomial(3, {0, 1, 1});
    HomogeneousIdeal I(3, {lin, mixed});
    auto cfg = default_valuation(3);
    for (int s = 1; s <= 5; ++s) {
        auto piece = graded_piece_basis(I, 1, s, cfg);
        auto values = value_image(piece, cfg); // throws if values collide
        CHECK(values.size() == piece.basis.size());
    }
}

TEST_CASE("budget cap aborts oversized enumerations") {
    HomogeneousIdeal I(4, {mono(4, {1, 1, 0, 0})});
    Budget tiny;
    tiny.limit = 3;
    CHECK_THROWS_AS(spanning_set(I, 1, 6, &tiny), budget_exceeded);
}
