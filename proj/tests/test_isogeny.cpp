#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "atlas/errors.hpp"
#include "atlas/weil.hpp"
#include "test_util.hpp"

using namespace atlas;

namespace {

const IntPoly kSurface7 = IntPoly::from_leading_first({1, -1, 8, -7, 49});

FFPoly lin(int64_t ell, int64_t root) {
    auto F = FiniteField::prime_field(ell);
    return FFPoly(F, {F->neg(F->from_int(root)), F->one()});
}

}  // namespace

TEST_CASE("weil validation") {
    CHECK(validate_weil(IntPoly::from_leading_first({1, 2, 7}), 7).g == 1);
    CHECK(validate_weil(kSurface7, 7).g == 2);
    CHECK_THROWS_AS(validate_weil(IntPoly::from_leading_first({1, 1, 5}), 7),
                    FunctionalEquationViolated);
    // real roots off the circle: t^2 + 6t + 7
    CHECK_THROWS_AS(validate_weil(IntPoly::from_leading_first({1, 6, 7}), 7), RootModulusSuspect);
    auto forced = validate_weil(IntPoly::from_leading_first({1, 6, 7}), 7, true);
    CHECK(forced.modulus_suspect);
    CHECK_THROWS_AS(validate_weil(IntPoly::from_leading_first({1, 0, 6}), 6), NotPrimePower);
    auto w9 = validate_weil(IntPoly::from_leading_first({1, 0, 9}), 9);
    CHECK(w9.p == 3);
    CHECK(w9.k == 2);
}

TEST_CASE("local decomposition of the q=7 surface at ell=5") {
    auto w = validate_weil(kSurface7, 7);
    auto decomp = local_decomposition(w, 5);
    REQUIRE(decomp.size() == 2);
    CHECK(decomp[0].hbar == lin(5, 2));
    CHECK(decomp[0].d == 2);
    CHECK(decomp[1].hbar == lin(5, 1));
    CHECK(decomp[1].d == 2);
    for (const auto& lf : decomp) {
        CHECK(lf.np.slope_label() == "(1,1)");
        CHECK(lf.ext->deg() == 1);
    }
    CHECK_THROWS_AS(local_decomposition(w, 7), EllEqualsP);
}

TEST_CASE("local decomposition: squarefree reduction and extension factors") {
    // t^2 + t + 3 mod 2 is the irreducible t^2 + t + 1
    auto w = validate_weil(IntPoly::from_leading_first({1, 1, 3}), 3);
    auto decomp = local_decomposition(w, 2);
    REQUIRE(decomp.size() == 1);
    CHECK(decomp[0].hbar.degree() == 2);
    CHECK(decomp[0].d == 1);
    CHECK(decomp[0].ext->deg() == 2);
    CHECK(decomp[0].q_shift.degree() == 1);
    auto parts = admissible_partitions(decomp[0].np.clamped(), 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0] == YoungPolygon({1}));

    // (t^2+t+3)^2 at ell=2: a single factor with hbar = t^2+t+1, d = 2
    auto sq = IntPoly::from_leading_first({1, 1, 3});
    auto w2 = validate_weil(sq * sq, 3, true);
    auto decomp2 = local_decomposition(w2, 2);
    REQUIRE(decomp2.size() == 1);
    CHECK(decomp2[0].hbar.degree() == 2);
    CHECK(decomp2[0].d == 2);
}

TEST_CASE("alpha is a genuine root of hbar in the extension ring") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = testutil::random_weil_product(rng, 7, 2);
        auto w = validate_weil(f, 7, true);
        for (long ell : {2L, 3L, 5L}) {
            for (const auto& lf : local_decomposition(w, ell)) {
                auto R = lf.ext;
                std::vector<WittRing::Elem> hc;
                for (const auto& c : lf.hbar.c) hc.push_back(R->from_int(c[0]));
                WittPoly h_ext(R, std::move(hc));
                CHECK(R->residue_field()->is_zero(R->reduce(wp_eval(h_ext, lf.alpha))));
            }
        }
    }
}

TEST_CASE("classification of the q=7 surface at ell=5: four classes") {
    auto w = validate_weil(kSurface7, 7);
    auto classes = classify_torsion(w, 5);
    REQUIRE(classes.size() == 4);
    YoungPolygon two({2}), ones({1, 1});
    // canonical order: factor (t-2) first, partitions decreasing lex
    CHECK(classes[0].summands[0].partition == two);
    CHECK(classes[0].summands[1].partition == two);
    CHECK(classes[1].summands[0].partition == two);
    CHECK(classes[1].summands[1].partition == ones);
    CHECK(classes[2].summands[0].partition == ones);
    CHECK(classes[2].summands[1].partition == two);
    CHECK(classes[3].summands[0].partition == ones);
    CHECK(classes[3].summands[1].partition == ones);
    for (const auto& c : classes) {
        CHECK(c.summands[0].hbar == lin(5, 2));
        CHECK(c.summands[1].hbar == lin(5, 1));
        CHECK(c.dim() == 4);
    }
}

TEST_CASE("squarefree reduction gives the single unramified class") {
    auto w = validate_weil(IntPoly::from_leading_first({1, 1, 3}), 3);
    auto classes = classify_torsion(w, 2);
    REQUIRE(classes.size() == 1);
    REQUIRE(classes[0].summands.size() == 1);
    CHECK(classes[0].summands[0].partition == YoungPolygon({1}));
}

TEST_CASE("multiple roots are rejected by classify_torsion") {
    auto p = IntPoly::from_leading_first({1, 1, 3});
    auto w = validate_weil(p * p, 3, true);
    CHECK_THROWS_AS(classify_torsion(w, 2), NotSquarefree);
}

TEST_CASE("scheme point counts reproduce the table rows") {
    auto F2 = FiniteField::prime_field(2);
    FFPoly t1 = FFPoly::from_ints(F2, {1, 1});

    auto c1 = make_class({{t1, YoungPolygon({4})}});
    auto b1 = scheme_point_counts(c1, 2, 8);
    CHECK(b1 == std::map<long, int64_t>{{1, 2}, {2, 1}, {4, 3}});

    FFPoly quart = FFPoly::from_ints(F2, {1, 1, 1, 1, 1});
    auto c2 = make_class({{quart, YoungPolygon({1})}});
    auto b2 = scheme_point_counts(c2, 2, 8);
    CHECK(b2 == std::map<long, int64_t>{{1, 1}, {5, 3}});

    auto c3 = make_class({{t1, YoungPolygon({1, 1, 1, 1})}});
    auto b3 = scheme_point_counts(c3, 2, 8);
    CHECK(b3 == std::map<long, int64_t>{{1, 16}});
}

TEST_CASE("point counts sum to ell^dim") {
    std::mt19937_64 rng(73);
    auto F2 = FiniteField::prime_field(2);
    std::vector<FFPoly> hbars = {FFPoly::from_ints(F2, {1, 1}), FFPoly::from_ints(F2, {1, 1, 1}),
                                 FFPoly::from_ints(F2, {1, 1, 0, 0, 1})};
    for (int trial = 0; trial < 30; ++trial) {
        const auto& h = hbars[rng() % hbars.size()];
        auto parts = partitions_of(1 + rng() % 3);
        auto c = make_class({{h, parts[rng() % parts.size()]}});
        long ord = scheme_frobenius_order(c, 2);
        auto b = scheme_point_counts(c, 2, ord);
        Int total = 0;
        for (const auto& [r, n] : b) total += Int(r) * n;
        Int expect = 1;
        for (long i = 0; i < c.dim(); ++i) expect *= 2;
        CHECK(total == expect);
    }
}

TEST_CASE("dual weil polynomial") {
    CHECK(dual_weil(IntPoly::from_leading_first({1, 2, 7}), 7) ==
          IntPoly::from_leading_first({1, 2, 7}));
    CHECK(dual_weil(IntPoly::from_leading_first({1, -1}), 7) ==
          IntPoly::from_leading_first({1, -7}));
    CHECK(dual_weil(kSurface7, 7) == kSurface7);
    IntPoly g = IntPoly::from_leading_first({1, -7});
    CHECK(dual_weil(g, 7) == IntPoly::from_leading_first({1, -1}));
    CHECK(dual_weil(dual_weil(g, 7), 7) == g);
    CHECK_THROWS_AS(dual_weil(IntPoly::from_leading_first({1, 0}), 7), ZeroConstantTerm);
}

TEST_CASE("dual pairing swaps the residue roots 1 and 2 at q=7") {
    auto w = validate_weil(kSurface7, 7);
    auto decomp = local_decomposition(w, 5);
    auto pairing = dual_polygon_map(decomp, w.q);
    // 7/1 = 2 and 7/2 = 1 mod 5: the two factors swap
    CHECK(pairing == std::vector<long>{1, 0});

    // self-paired: alpha^2 = q mod ell
    auto w2 = validate_weil(IntPoly::from_leading_first({1, 1, 3}), 3);
    auto decomp2 = local_decomposition(w2, 2);
    CHECK(dual_polygon_map(decomp2, w2.q) == std::vector<long>{0});
}

TEST_CASE("dual pairing is a bijection on random squarefree reductions") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = testutil::random_weil_product(rng, 13, 2);
        if (!is_squarefree(f)) continue;
        auto w = validate_weil(f, 13, true);
        for (long ell : {3L, 5L}) {
            auto decomp = local_decomposition(w, ell);
            auto pairing = dual_polygon_map(decomp, w.q);
            std::set<long> seen(pairing.begin(), pairing.end());
            CHECK(seen.size() == decomp.size());
        }
    }
}

TEST_CASE("the q=7 duality example: (Z/5)^2 against Z/25") {
    auto w = validate_weil(kSurface7, 7);
    auto decomp = local_decomposition(w, 5);
    // factor index 1 carries the residue root 1, factor 0 the root 2;
    // choose trivial reduction at root 1, nontrivial at root 2
    auto a_side_root1 = point_group_at_factor(w, 5, 1, YoungPolygon({1, 1}));
    auto a_side_root2 = point_group_at_factor(w, 5, 0, YoungPolygon({2}));
    CHECK(a_side_root1 == std::vector<long>{1, 1});  // Z/5 + Z/5
    CHECK(a_side_root2 == std::vector<long>{});      // trivial at the root-2 factor
    // transport along the dual pairing: the dual variety carries (2) at the
    // root-1 factor and (1,1) at the root-2 factor
    auto pairing = dual_polygon_map(decomp, w.q);
    CHECK(pairing[1] == 0);
    auto dual_root1 = point_group_at_factor(w, 5, 1, YoungPolygon({2}));
    auto dual_root2 = point_group_at_factor(w, 5, 0, YoungPolygon({1, 1}));
    CHECK(dual_root1 == std::vector<long>{2});  // Z/25
    CHECK(dual_root2 == std::vector<long>{});
}

TEST_CASE("classification is independent of the lift of alpha") {
    std::mt19937_64 rng(83);
    int done = 0;
    while (done < 12) {
        int k = 1 + rng() % 3;
        auto f = testutil::random_weil_product(rng, 7, k);
        if (!is_squarefree(f)) continue;
        auto w = validate_weil(f, 7, true);
        ++done;
        for (long ell : {2L, 3L, 5L}) {
            auto base = classify_torsion(w, ell);
            for (int alt = 0; alt < 3; ++alt) {
                uint64_t salt = rng();
                DecompositionOptions opt;
                opt.lift = [salt](const FiniteField::Elem& res, const WittRing& ring) {
                    auto x = ring.teichmueller(res);
                    std::mt19937_64 r2(salt);
                    WittRing::Elem noise(ring.deg());
                    for (int i = 0; i < ring.deg(); ++i)
                        noise[i] = Int(static_cast<long>(r2() % 1000)) * ring.ell();
                    return ring.add(x, ring.canonical(noise));
                };
                auto perturbed = classify_torsion(w, ell, opt);
                REQUIRE(perturbed.size() == base.size());
                for (size_t i = 0; i < base.size(); ++i) CHECK(perturbed[i] == base[i]);
            }
        }
    }
}

TEST_CASE("every class has total dimension deg f") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 15; ++trial) {
        auto f = testutil::random_weil_product(rng, 11, 1 + rng() % 3);
        if (!is_squarefree(f)) continue;
        auto w = validate_weil(f, 11, true);
        for (long ell : {2L, 3L, 7L})
            for (const auto& c : classify_torsion(w, ell)) CHECK(c.dim() == f.degree());
    }
}

TEST_CASE("adaptive precision kicks in when the cokernel exhausts the default") {
    // f(1) = 32 * 26 has nu_2 = 6, the default precision for a quartic;
    // the one-block cokernel needs a deeper lift
    IntPoly f = IntPoly::from_leading_first({1, 6, 25}) * IntPoly::from_leading_first({1, 0, 25});
    auto w = validate_weil(f, 25, true);
    auto decomp = local_decomposition(w, 2);
    REQUIRE(decomp.size() == 1);
    REQUIRE(decomp[0].d == 4);
    auto divisors = point_group_at_factor(w, 2, 0, YoungPolygon({4}));
    long sum = 0;
    for (long e : divisors) sum += e;
    CHECK(sum == 6);  // nu_2(f(1))
}

TEST_CASE("the precision cap honors TORSION_ATLAS_PRECISION_CAP") {
    CHECK(precision_cap(4) == 256);
    setenv("TORSION_ATLAS_PRECISION_CAP", "12", 1);
    CHECK(precision_cap(4) == 12);
    unsetenv("TORSION_ATLAS_PRECISION_CAP");
    CHECK(precision_cap(4) == 256);
}
