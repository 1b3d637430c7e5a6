#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/errors.hpp"
#include "atlas/json_io.hpp"
#include "atlas/witt.hpp"
#include "test_util.hpp"

using namespace atlas;

TEST_CASE("integer polynomial basics") {
    IntPoly f = IntPoly::from_leading_first({1, -1, 8, -7, 49});
    CHECK(f.degree() == 4);
    CHECK(f.coeff(0) == 49);
    CHECK(f.coeff(4) == 1);
    CHECK(f(Int(1)) == 50);
    CHECK(f.str() == "t^4 - t^3 + 8*t^2 - 7*t + 49");

    IntPoly a = IntPoly::from_leading_first({1, 2, 7});
    IntPoly b = IntPoly::from_leading_first({1, -3, 7});
    CHECK(a * b == f);

    IntPoly shifted = a.shift_var(Int(1));
    CHECK(shifted(Int(0)) == a(Int(1)));
    CHECK(shifted.degree() == 2);

    auto [quot, rem] = f.divmod_monic(a);
    CHECK(rem.is_zero());
    CHECK(quot == b);

    CHECK(is_squarefree(f));
    CHECK(!is_squarefree(a * a));
    CHECK(gcd_poly(a * a * b, a * b).is_monic());
    CHECK(gcd_poly(a * a * b, a * b) == a * b);
}

TEST_CASE("power sums round-trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        long d = 1 + rng() % 5;
        std::vector<Int> c(d + 1);
        c[d] = 1;
        for (long i = 0; i < d; ++i) c[i] = Int(static_cast<long>(rng() % 21)) - 10;
        IntPoly f(c);
        auto p = f.power_sums(d);
        CHECK(IntPoly::from_power_sums(d, p) == f);
    }
}

TEST_CASE("finite field factorization: quartic over F_5 from the q=7 surface") {
    auto F5 = FiniteField::prime_field(5);
    // (t^2+2t+7)(t^2-3t+7) reduces mod 5 to (t-1)^2 (t-2)^2
    IntPoly f = IntPoly::from_leading_first({1, -1, 8, -7, 49});
    auto factors = ff_factor(FFPoly::from_int_poly(F5, f), 0);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].first == FFPoly::from_ints(F5, {3, 1}));  // t - 2
    CHECK(factors[0].second == 2);
    CHECK(factors[1].first == FFPoly::from_ints(F5, {4, 1}));  // t - 1
    CHECK(factors[1].second == 2);
}

TEST_CASE("finite field factorization: corner cases") {
    auto F3 = FiniteField::prime_field(3);
    auto factors = ff_factor(FFPoly::from_ints(F3, {0, 0, 0, 0, 1}), 0);  // t^4
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].first == FFPoly::from_ints(F3, {0, 1}));
    CHECK(factors[0].second == 4);

    auto F2 = FiniteField::prime_field(2);
    auto quintic = ff_factor(FFPoly::from_ints(F2, {1, 1, 1, 1, 1}), 0);
    REQUIRE(quintic.size() == 1);
    CHECK(quintic[0].second == 1);
    CHECK(ff_is_irreducible(quintic[0].first));
}

TEST_CASE("finite field factorization: product and irreducibility properties") {
    std::mt19937_64 rng(11);
    std::vector<FiniteField::Ptr> fields = {
        FiniteField::prime_field(2), FiniteField::prime_field(5),
        FiniteField::make(3, {1, 2, 1, 1})};  // F_27; x^3+x^2+2x+1 irreducible over F_3
    for (const auto& F : fields) {
        for (int trial = 0; trial < 20; ++trial) {
            long d = 2 + rng() % 5;
            std::vector<FiniteField::Elem> c(d + 1, F->zero());
            c[d] = F->one();
            for (long i = 0; i < d; ++i) c[i] = F->random_elem(rng);
            FFPoly f(F, std::move(c));
            auto factors = ff_factor(f, rng());
            FFPoly prod = FFPoly::from_ints(F, {1});
            for (const auto& [g, e] : factors) {
                CHECK(ff_is_irreducible(g));
                CHECK(g.is_monic());
                prod = ff_mul(prod, ff_pow(g, e));
            }
            CHECK(prod == f);
        }
    }
}

TEST_CASE("hensel lifting: the q=7 surface at ell=5, N=2") {
    IntPoly f = IntPoly::from_leading_first({1, -1, 8, -7, 49});
    auto F5 = FiniteField::prime_field(5);
    auto groups = ff_factor(FFPoly::from_int_poly(F5, f), 0);
    auto lifts = hensel_lift_grouped(f, groups, 5, 2);
    REQUIRE(lifts.size() == 2);
    auto R = lifts[0].R;
    // roots 6 and 11 mod 25: f(6) = 25 k, f(11) = 6*25, so the factor over
    // the root 2 is (t-12)(t-22) = t^2+16t+14 and over 1 is t^2+8t+16
    CHECK(lifts[0] == WittPoly::from_int_poly(R, IntPoly::from_leading_first({1, 16, 14})));
    CHECK(lifts[1] == WittPoly::from_int_poly(R, IntPoly::from_leading_first({1, 8, 16})));
    CHECK(wp_mul(lifts[0], lifts[1]) == WittPoly::from_int_poly(R, f));
}

TEST_CASE("hensel lifting: one group returns f itself") {
    IntPoly f = IntPoly::from_leading_first({1, 0, -5, 10});  // t^3 - 5t + 10 = t^3 mod 5
    auto F5 = FiniteField::prime_field(5);
    std::vector<std::pair<FFPoly, int>> groups{{FFPoly::from_ints(F5, {0, 1}), 3}};
    auto lifts = hensel_lift_grouped(f, groups, 5, 4);
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0] == WittPoly::from_int_poly(lifts[0].R, f));
}

TEST_CASE("hensel lifting: linear groups produce residues of roots") {
    // f = (t-1)(t-2)(t-4) has squarefree reduction mod 7
    IntPoly f = IntPoly(std::vector<Int>{-8, 14, -7, 1});
    auto F7 = FiniteField::prime_field(7);
    auto groups = ff_factor(FFPoly::from_int_poly(F7, f), 0);
    REQUIRE(groups.size() == 3);
    auto lifts = hensel_lift_grouped(f, groups, 7, 5);
    Int mod = 1;
    for (int i = 0; i < 5; ++i) mod *= 7;
    for (const auto& g : lifts) {
        REQUIRE(g.degree() == 1);
        Int root = mod - g.coeff(0)[0];  // g = t - root
        CHECK(f(root) % mod == 0);
    }
}

TEST_CASE("hensel lifting: random round-trips") {
    std::mt19937_64 rng(23);
    for (long ell : {2L, 3L, 5L}) {
        auto F = FiniteField::prime_field(ell);
        for (int trial = 0; trial < 15; ++trial) {
            long d = 2 + rng() % 4;
            std::vector<Int> c(d + 1);
            c[d] = 1;
            for (long i = 0; i < d; ++i) c[i] = Int(static_cast<long>(rng() % 200)) - 100;
            IntPoly f(c);
            FFPoly fbar = FFPoly::from_int_poly(F, f);
            if (fbar.degree() != d) continue;
            auto groups = ff_factor(fbar, rng());
            int precision = 6;
            auto lifts = hensel_lift_grouped(f, groups, ell, precision);
            auto R = lifts[0].R;
            WittPoly prod = WittPoly::from_int_poly(R, IntPoly::constant(1));
            for (size_t i = 0; i < lifts.size(); ++i) {
                prod = wp_mul(prod, lifts[i]);
                // reduction recovers hbar^d exactly
                auto red = wp_reduce(lifts[i]);
                CHECK(red == ff_pow(groups[i].first, groups[i].second));
            }
            CHECK(prod == WittPoly::from_int_poly(R, f));
        }
    }
}

TEST_CASE("hensel lifting: shared factor is rejected") {
    IntPoly f = IntPoly::from_leading_first({1, 0, 0, 0});  // t^3
    auto F5 = FiniteField::prime_field(5);
    FFPoly t = FFPoly::from_ints(F5, {0, 1});
    std::vector<std::pair<FFPoly, int>> groups{{t, 1}, {t, 2}};
    CHECK_THROWS_AS(hensel_lift_grouped(f, groups, 5, 3), NotCoprime);
}

TEST_CASE("teichmueller lift") {
    auto W = WittRing::make(5, 2);
    auto F = W->residue_field();
    CHECK(W->teichmueller(F->from_int(Int(2)))[0] == 7);
    CHECK(W->teichmueller(F->from_int(Int(0)))[0] == 0);
    CHECK(W->teichmueller(F->from_int(Int(1)))[0] == 1);
    auto W3 = WittRing::make(5, 3);
    CHECK(W3->teichmueller(W3->residue_field()->from_int(Int(1)))[0] == 1);

    // multiplicative: x^(ell^m) = x at precision
    auto W7 = WittRing::make(7, 6);
    auto t = W7->teichmueller(W7->residue_field()->from_int(Int(3)));
    CHECK(W7->pow(t, 7) == t);
}

TEST_CASE("teichmueller lift: compatibility under truncation") {
    std::mt19937_64 rng(5);
    std::vector<std::pair<int64_t, std::vector<int64_t>>> specs = {
        {3, {0, 1}}, {5, {0, 1}}, {2, {1, 1, 1}}, {3, {1, 2, 0, 1}}};
    for (const auto& [ell, hbar] : specs) {
        for (int n = 2; n <= 5; ++n) {
            auto big = WittRing::make(ell, hbar, n + 1);
            auto small = WittRing::make(ell, hbar, n);
            for (int trial = 0; trial < 8; ++trial) {
                auto res = big->residue_field()->random_elem(rng);
                auto at_big = big->teichmueller(res);
                auto at_small = small->teichmueller(res);
                CHECK(small->canonical(at_big) == at_small);
            }
        }
    }
}

TEST_CASE("valuation") {
    auto W = WittRing::make(5, 2);
    CHECK(W->valuation(W->from_int(10)) == ExtVal::finite(1));
    CHECK(W->valuation(W->from_int(0)).is_top());
    CHECK(W->valuation(W->from_int(25)).is_top());  // indistinguishable from 0 at N=2
    CHECK(ExtVal::top_val() > ExtVal::finite(1000000));

    std::mt19937_64 rng(17);
    auto W6 = WittRing::make(3, 6);
    for (int trial = 0; trial < 40; ++trial) {
        Int x = Int(static_cast<long>(rng() % 600 + 1));
        Int y = Int(static_cast<long>(rng() % 600 + 1));
        auto vx = W6->valuation(W6->from_int(x));
        auto vy = W6->valuation(W6->from_int(y));
        if (vx.is_top() || vy.is_top() || vx.v + vy.v >= 6) continue;
        CHECK(W6->valuation(W6->mul(W6->from_int(x), W6->from_int(y))) ==
              ExtVal::finite(vx.v + vy.v));
    }
}

TEST_CASE("witt ring arithmetic over an extension") {
    auto W = WittRing::make(2, {1, 1, 1}, 5);  // Z_4-Witt: S/2^5 with residue F_4
    auto y = W->gen();
    // y^2 + y + 1 = 0 in the residue; the lift polynomial is exactly that
    auto v = W->add(W->add(W->mul(y, y), y), W->one());
    CHECK(W->is_zero(v));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        WittRing::Elem a{Int(static_cast<long>(rng() % 32)), Int(static_cast<long>(rng() % 32))};
        if (!W->is_unit(a)) continue;
        CHECK(W->is_one(W->mul(a, W->inv(a))));
    }
}

TEST_CASE("smith normal form over the local ring") {
    auto W = WittRing::make(5, 3);
    WittMatrix d(W, 2, 2);
    d.at(0, 0) = W->from_int(5);
    d.at(1, 1) = W->from_int(25);
    CHECK(smith_normal_form_local(d) == std::vector<long>{1, 2});

    CHECK(smith_normal_form_local(WittMatrix::identity(W, 3)) == std::vector<long>{0, 0, 0});

    // 5 U for a unimodular U: divisors (1,1) - the (Z/5)^2 cokernel
    WittMatrix u(W, 2, 2);
    u.at(0, 0) = W->from_int(10);
    u.at(0, 1) = W->from_int(15);
    u.at(1, 0) = W->from_int(5);
    u.at(1, 1) = W->from_int(10);
    CHECK(smith_normal_form_local(u) == std::vector<long>{1, 1});

    WittMatrix zero(W, 2, 2);
    CHECK_THROWS_AS(smith_normal_form_local(zero), PrecisionExhausted);
}

TEST_CASE("smith normal form: transforms and invariance") {
    std::mt19937_64 rng(29);
    auto random_unimodular = [&](const WittRing::Ptr& W, long n) {
        WittMatrix u = WittMatrix::identity(W, n);
        for (int step = 0; step < 6; ++step) {
            long i = rng() % n, j = rng() % n;
            if (i == j) continue;
            auto c = W->from_int(Int(static_cast<long>(rng() % 50)));
            for (long k = 0; k < n; ++k) u.at(i, k) = W->add(u.at(i, k), W->mul(c, u.at(j, k)));
        }
        return u;
    };
    for (long ell : {2L, 5L}) {
        auto W = WittRing::make(ell, 6);
        for (int trial = 0; trial < 15; ++trial) {
            long n = 2 + rng() % 2;
            WittMatrix m(W, n, n);
            bool sing = false;
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    m.at(i, j) = W->from_int(Int(static_cast<long>(rng() % 400)));
            auto res = snf_local_raw(m);
            if (res.exhausted) continue;
            // left * m * right equals the diagonal of ell^e_i
            WittMatrix diag = wm_mul(wm_mul(res.left, m), res.right);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    if (i != j) {
                        CHECK(W->is_zero(diag.at(i, j)));
                    } else {
                        Int p = 1;
                        for (long k = 0; k < res.divisors[i].v; ++k) p *= ell;
                        CHECK(diag.at(i, j) == W->from_int(p));
                    }
                }
            if (sing) continue;
            auto divisors = res.divisors;
            WittMatrix m2 = wm_mul(wm_mul(random_unimodular(W, n), m), random_unimodular(W, n));
            auto res2 = snf_local_raw(m2);
            CHECK(res2.divisors == divisors);
        }
    }
}

TEST_CASE("witt polynomial and matrix JSON round-trip") {
    auto W = WittRing::make(3, {2, 2, 1}, 4);
    std::mt19937_64 rng(31);
    std::vector<WittRing::Elem> coeffs;
    for (int i = 0; i < 4; ++i)
        coeffs.push_back(W->canonical({Int(static_cast<long>(rng() % 81)),
                                       Int(static_cast<long>(rng() % 81))}));
    coeffs.push_back(W->one());
    WittPoly p(W, coeffs);
    auto j = to_json(p);
    CHECK(witt_poly_from_json(j) == p);
    CHECK(j.contains("ell"));
    CHECK(j.contains("residue_poly"));
    CHECK(j.contains("precision"));
    CHECK(j.contains("coeffs"));

    WittMatrix m(W, 2, 3);
    for (long i = 0; i < 2; ++i)
        for (long k = 0; k < 3; ++k)
            m.at(i, k) = W->canonical({Int(static_cast<long>(rng() % 81)),
                                       Int(static_cast<long>(rng() % 81))});
    CHECK(witt_matrix_from_json(to_json(m)) == m);
}
