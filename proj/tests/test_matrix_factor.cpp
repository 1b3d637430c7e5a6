#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/errors.hpp"
#include "atlas/matrix_factorization.hpp"
#include "test_util.hpp"

using namespace atlas;

namespace {

WittPoly q_of(int64_t ell, int precision, const std::vector<Int>& leading_first) {
    auto R = WittRing::make(ell, precision);
    return WittPoly::from_int_poly(R, IntPoly::from_leading_first(leading_first));
}

}  // namespace

TEST_CASE("cyclic module gives the 1x1 factorization") {
    auto q = q_of(5, 6, {1, -5, -5});
    auto model = construct_lift(q, YoungPolygon({2}));
    auto mf = factorization_from_generators(model, YoungPolygon({2}));
    CHECK(mf.r == 1);
    CHECK(mf.X.at(0, 0) == model.charpoly);
    CHECK(mf.Y.at(0, 0) == WittPoly(model.ring, {model.ring->one()}));
    CHECK(mf.f == model.charpoly);
    CHECK(verify_factorization(mf));

    auto swapped = swap_partner(mf);
    CHECK(swapped.X.at(0, 0) == mf.Y.at(0, 0));
    CHECK(swapped.f == WittPoly(model.ring, {model.ring->one()}));
}

TEST_CASE("rank-2 module with type (1,1)") {
    auto q = q_of(5, 6, {1, -25, -25});
    auto model = construct_lift(q, YoungPolygon({1, 1}));
    auto mf = factorization_from_generators(model, YoungPolygon({1, 1}));
    CHECK(mf.r == 2);
    // X = diag(t, t) mod 5
    auto F = model.ring->residue_field();
    FFPoly tbar = FFPoly::from_ints(F, {0, 1});
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            CHECK(wp_reduce(mf.X.at(i, j)) == (i == j ? tbar : FFPoly(F, {})));
    CHECK(mf.f == model.charpoly);
    CHECK(verify_factorization(mf));
    auto [rank, jordan] = cokernel_module_type(mf.X, mf.f1);
    CHECK(rank == 2);
    CHECK(jordan == YoungPolygon({1, 1}));
}

TEST_CASE("perturbing one entry breaks verification") {
    auto q = q_of(3, 6, {1, -3, -3});
    auto model = construct_lift(q, YoungPolygon({2}));
    auto mf = factorization_from_generators(model, YoungPolygon({2}));
    mf.Y.at(0, 0) = wp_add(mf.Y.at(0, 0), WittPoly(mf.Y.R, {mf.Y.R->one()}));
    CHECK(!verify_factorization(mf));
}

TEST_CASE("the cubic example: diag(t^2,t^2,t^2) exists iff Np(f1) dominates (1,1,1)") {
    // f1 = t^3 - 9 t^2 - 9 t - 27 over Z_3 has slopes (1,1,1)
    auto f1 = q_of(3, 9, {1, -9, -9, -27});
    REQUIRE(dominates(NewtonPolygon::of(f1), YoungPolygon({1, 1, 1})));
    auto model = construct_lift(f1, YoungPolygon({1, 1, 1}));
    auto mf = factorization_from_generators(model, YoungPolygon({1, 1, 1}));
    CHECK(mf.f == model.charpoly);
    auto swapped = swap_partner(mf);
    // det Y = f1^3 / f1 = f1^2
    CHECK(swapped.f == wp_mul(model.charpoly, model.charpoly));
    auto F = model.ring->residue_field();
    FFPoly t2 = FFPoly::from_ints(F, {0, 0, 1});
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j)
            CHECK(wp_reduce(swapped.X.at(i, j)) == (i == j ? t2 : FFPoly(F, {})));
    auto [rank, jordan] = cokernel_module_type(swapped.X, swapped.f1);
    CHECK(rank == 6);
    CHECK(jordan == YoungPolygon({2, 2, 2}));

    // and the obstruction: slopes (1/3) cannot carry the type (1,1,1)
    auto bad = q_of(3, 9, {1, -3, -3, -3});
    CHECK_THROWS_AS(construct_lift(bad, YoungPolygon({1, 1, 1})), NotDominated);
}

TEST_CASE("swap is an involution") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 25; ++trial) {
        long ell = std::vector<long>{2, 3, 5}[rng() % 3];
        long d = 2 + rng() % 3;
        auto q = testutil::random_q(rng, ell, d, static_cast<int>(d) + 8, Int(ell) * ell * ell);
        auto parts = admissible_partitions(NewtonPolygon::of(q).clamped(), d);
        const auto& part = parts[rng() % parts.size()];
        auto model = construct_lift(q, part);
        auto mf = factorization_from_generators(model, part);
        CHECK(static_cast<long>(mf.f.degree()) == cokernel_module_type(mf.X, mf.f1).first);
        auto twice = swap_partner(swap_partner(mf));
        CHECK(twice.X == mf.X);
        CHECK(twice.Y == mf.Y);
        CHECK(twice.f == mf.f);
        CHECK(twice.f1 == mf.f1);
    }
}

TEST_CASE("module type from a presentation") {
    auto R = WittRing::make(5, 6);
    // X = [Q] for Q = t^2 - 5t - 5: rank 2, one block
    PolyMat x1(R, 1);
    x1.at(0, 0) = q_of(5, 6, {1, -5, -5});
    auto [r1, j1] = cokernel_module_type(x1, x1.at(0, 0));
    CHECK(r1 == 2);
    CHECK(j1 == YoungPolygon({2}));

    // diagonal t, t^3 with noise of valuation >= 1
    PolyMat x2(R, 2);
    x2.at(0, 0) = WittPoly(R, {R->zero(), R->one()});
    x2.at(1, 1) = WittPoly(R, {R->zero(), R->from_int(10), R->zero(), R->one()});
    x2.at(0, 1) = WittPoly(R, {R->from_int(15)});
    auto f1 = wp_mul(x2.at(0, 0), x2.at(1, 1));
    auto [r2, j2] = cokernel_module_type(x2, f1);
    CHECK(r2 == 4);
    CHECK(j2 == YoungPolygon({3, 1}));

    PolyMat zero(R, 2);
    CHECK_THROWS_AS(cokernel_module_type(zero, WittPoly(R, {R->zero(), R->one()})),
                    SingularPresentation);
}

TEST_CASE("unimodular transforms preserve the module type") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        long ell = std::vector<long>{2, 3, 5}[rng() % 3];
        auto R = WittRing::make(ell, 7);
        long n = 2 + rng() % 2;
        std::vector<long> parts;
        PolyMat x(R, n);
        for (long i = 0; i < n; ++i) {
            long m = 1 + rng() % 3;
            parts.push_back(m);
            std::vector<WittRing::Elem> mono(m + 1, R->zero());
            mono[m] = R->one();
            x.at(i, i) = WittPoly(R, std::move(mono));
        }
        YoungPolygon expect(parts);
        WittPoly f1(R, {R->one()});
        for (long i = 0; i < n; ++i) f1 = wp_mul(f1, x.at(i, i));
        long rank_expect = f1.degree();
        // elementary row/column additions keep the determinant on the nose
        for (int step = 0; step < 4; ++step) {
            long i = rng() % n, j = rng() % n;
            if (i == j) continue;
            std::vector<WittRing::Elem> c(1 + rng() % 2,
                                          R->from_int(Int(static_cast<long>(rng() % 20))));
            WittPoly p(R, std::move(c));
            if (rng() % 2) {
                for (long k = 0; k < n; ++k) x.at(i, k) = wp_add(x.at(i, k), wp_mul(p, x.at(j, k)));
            } else {
                for (long k = 0; k < n; ++k) x.at(k, i) = wp_add(x.at(k, i), wp_mul(p, x.at(k, j)));
            }
        }
        auto [rank, jordan] = cokernel_module_type(x, f1);
        CHECK(rank == rank_expect);
        CHECK(jordan == expect);
    }
}
