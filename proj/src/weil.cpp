#include "atlas/weil.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>

#include "atlas/errors.hpp"

namespace atlas {

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// q = p^k with p prime; throws NotPrimePower otherwise
std::pair<Int, int> prime_power_split(const Int& q) {
    if (q < 2) throw NotPrimePower("q must be at least 2");
    for (int k = static_cast<int>(mpz_sizeinbase(q.get_mpz_t(), 2)); k >= 1; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && is_probable_prime(root))
            return {root, k};
    }
    throw NotPrimePower(q.get_str() + " is not a prime power");
}

}  // namespace

std::vector<std::pair<double, double>> approx_roots(const IntPoly& f) {
    using C = std::complex<double>;
    IntPoly g = f;
    IntPoly sq = gcd_poly(f, f.derivative());
    if (sq.degree() > 0) g = f.divmod_monic(sq).first;
    long d = g.degree();
    std::vector<C> a(d + 1);
    for (long i = 0; i <= d; ++i) a[i] = C(g.coeff(i).get_d(), 0.0);
    double radius = 0.0;
    for (long i = 0; i < d; ++i) radius = std::max(radius, std::abs(a[i] / a[d]));
    radius = 1.0 + radius;
    std::vector<C> z(d);
    C seed(0.4, 0.9);
    C cur(1.0, 0.0);
    for (long i = 0; i < d; ++i) {
        cur *= seed;
        z[i] = radius * cur;
    }
    auto eval = [&](C x) {
        C acc = 0;
        for (long i = d; i >= 0; --i) acc = acc * x + a[i];
        return acc;
    };
    for (int it = 0; it < 500; ++it) {
        double moved = 0.0;
        for (long i = 0; i < d; ++i) {
            C denom = a[d];
            for (long j = 0; j < d; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            C delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14 * radius) break;
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(d);
    for (const auto& r : z) out.emplace_back(r.real(), r.imag());
    return out;
}

WeilPolynomial validate_weil(const IntPoly& f, const Int& q, bool force) {
    if (f.is_zero() || !f.is_monic())
        throw FunctionalEquationViolated("Weil polynomial must be monic");
    long deg = f.degree();
    if (deg < 2 || deg % 2 != 0)
        throw FunctionalEquationViolated("Weil polynomial must have even degree >= 2");
    long g = deg / 2;
    auto [p, k] = prime_power_split(q);
    // t^(2g) f(q/t) = q^g f(t)
    Int qg = 1;
    for (long i = 0; i < g; ++i) qg *= q;
    // coefficient of t^m on the left is a_(2g-m) q^(2g-m)
    for (long m = 0; m <= deg; ++m) {
        Int q2gm = 1;
        for (long i = 0; i < deg - m; ++i) q2gm *= q;
        if (f.coeff(deg - m) * q2gm != qg * f.coeff(m))
            throw FunctionalEquationViolated("coefficient relation a_(2g-i) = q^(g-i) a_i fails");
    }
    WeilPolynomial w{f, q, p, k, g, false};
    // numeric gate on |omega| = sqrt(q)
    double sq = std::sqrt(q.get_d());
    for (const auto& [re, im] : approx_roots(f)) {
        double mod = std::hypot(re, im);
        if (std::abs(mod - sq) > 1e-8 * sq) {
            if (!force)
                throw RootModulusSuspect("a root has modulus " + std::to_string(mod) +
                                         " != sqrt(q) = " + std::to_string(sq));
            w.modulus_suspect = true;
            break;
        }
    }
    return w;
}

std::vector<LocalFactor> local_decomposition(const WeilPolynomial& w, int64_t ell,
                                             const DecompositionOptions& opt) {
    if (Int(ell) == w.p) throw EllEqualsP("ell must differ from the characteristic");
    int precision = opt.precision > 0 ? opt.precision : static_cast<int>(w.f.degree()) + 2;
    auto F = FiniteField::prime_field(ell);
    FFPoly fbar = FFPoly::from_int_poly(F, w.f);
    check_internal(fbar.degree() == w.f.degree(), "local_decomposition: f drops degree mod ell");
    auto groups = ff_factor(fbar, opt.seed);
    auto lifts = hensel_lift_grouped(w.f, groups, ell, precision);

    std::vector<LocalFactor> out;
    out.reserve(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) {
        const auto& [hbar, d] = groups[i];
        long m = hbar.degree();
        LocalFactor lf;
        lf.hbar = hbar;
        lf.d = d;
        lf.f_lift = lifts[i];
        WittPoly g_ext;  // the factor of f_lift congruent to (t - alphabar)^d over S
        FiniteField::Elem root_residue;
        if (m == 1) {
            lf.ext = WittRing::make(ell, precision);
            root_residue = F->neg(hbar.coeff(0));
            g_ext = lf.f_lift;
        } else {
            std::vector<int64_t> hb(hbar.c.size());
            for (size_t j = 0; j < hbar.c.size(); ++j) hb[j] = hbar.c[j][0];
            lf.ext = WittRing::make(ell, hb, precision);
            auto Fx = lf.ext->residue_field();
            root_residue = Fx->gen();
            // embed f_lift into S and split off (t - alphabar)^d
            std::vector<WittRing::Elem> emb;
            emb.reserve(lf.f_lift.c.size());
            for (const auto& cf : lf.f_lift.c) emb.push_back(lf.ext->from_int(cf[0]));
            WittPoly f_ext(lf.ext, std::move(emb));
            FFPoly lin(Fx, {Fx->neg(root_residue), Fx->one()});
            FFPoly part = ff_pow(lin, static_cast<unsigned long>(d));
            auto [rest, rem] = ff_divmod(wp_reduce(f_ext), part);
            check_internal(rem.is_zero(), "local_decomposition: root is not a factor");
            if (rest.degree() == 0) {
                g_ext = f_ext;
            } else {
                g_ext = hensel_lift_pair(f_ext, part, rest).first;
            }
        }
        if (opt.lift) {
            lf.alpha = lf.ext->canonical(opt.lift(root_residue, *lf.ext));
            if (lf.ext->reduce(lf.alpha) != root_residue)
                throw error(errc::parse, "local_decomposition: lift does not reduce to the root");
        } else {
            lf.alpha = lf.ext->teichmueller(root_residue);
        }
        // the conjugate factor g is pinned by its reduction (t - alphabar)^d,
        // so only the shift itself depends on the chosen lift of the root
        lf.q_shift = wp_shift_var(g_ext, lf.alpha);
        FFPoly qbar = wp_reduce(lf.q_shift);
        check_internal(qbar.degree() == d, "local_decomposition: Q degree mismatch");
        for (long j = 0; j < d; ++j)
            check_internal(qbar.F->is_zero(qbar.coeff(j)),
                           "local_decomposition: Q != t^d mod ell");
        lf.np = NewtonPolygon::of(lf.q_shift);
        out.push_back(std::move(lf));
    }
    return out;
}

bool operator==(const DistinguishedScheme& a, const DistinguishedScheme& b) {
    return a.hbar == b.hbar && a.partition == b.partition;
}

long TorsionClass::dim() const {
    long s = 0;
    for (const auto& x : summands) s += x.hbar.degree() * x.partition.total();
    return s;
}

bool operator==(const TorsionClass& a, const TorsionClass& b) {
    return a.summands.size() == b.summands.size() &&
           std::equal(a.summands.begin(), a.summands.end(), b.summands.begin());
}

TorsionClass make_class(std::vector<DistinguishedScheme> summands) {
    std::sort(summands.begin(), summands.end(), [](const auto& a, const auto& b) {
        if (a.hbar.degree() != b.hbar.degree()) return a.hbar.degree() < b.hbar.degree();
        return a.hbar.c < b.hbar.c;
    });
    // merge summands with the same hbar: the scheme only depends on the
    // total Jordan type per residue polynomial
    std::vector<DistinguishedScheme> merged;
    for (auto& s : summands) {
        if (!merged.empty() && merged.back().hbar == s.hbar) {
            auto parts = merged.back().partition.parts();
            for (long p : s.partition.parts()) parts.push_back(p);
            merged.back().partition = YoungPolygon(std::move(parts));
        } else {
            merged.push_back(std::move(s));
        }
    }
    return TorsionClass{std::move(merged)};
}

bool class_order_less(const TorsionClass& a, const TorsionClass& b) {
    size_t n = std::min(a.summands.size(), b.summands.size());
    for (size_t i = 0; i < n; ++i) {
        const auto& x = a.summands[i];
        const auto& y = b.summands[i];
        if (x.hbar.degree() != y.hbar.degree()) return x.hbar.degree() < y.hbar.degree();
        if (x.hbar.c != y.hbar.c) return x.hbar.c < y.hbar.c;
        if (x.partition != y.partition) return y.partition < x.partition;  // decreasing lex
    }
    return a.summands.size() < b.summands.size();
}

std::vector<TorsionClass> classify_torsion(const WeilPolynomial& w, int64_t ell,
                                           const DecompositionOptions& opt) {
    if (!is_squarefree(w.f))
        throw NotSquarefree(
            "f has multiple roots; the quartic case is handled by classify_surface");
    auto decomp = local_decomposition(w, ell, opt);
    std::vector<std::vector<YoungPolygon>> choices;
    choices.reserve(decomp.size());
    for (const auto& lf : decomp)
        choices.push_back(admissible_partitions(lf.np.clamped(), lf.d));
    std::vector<TorsionClass> out;
    std::vector<size_t> idx(decomp.size(), 0);
    for (;;) {
        std::vector<DistinguishedScheme> summands;
        summands.reserve(decomp.size());
        for (size_t i = 0; i < decomp.size(); ++i)
            summands.push_back({decomp[i].hbar, choices[i][idx[i]]});
        out.push_back(make_class(std::move(summands)));
        long pos = static_cast<long>(decomp.size()) - 1;
        while (pos >= 0 && ++idx[pos] == choices[pos].size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end(), class_order_less);
    return out;
}

namespace {

FFMatrix class_frobenius(const TorsionClass& c, int64_t ell) {
    auto F = FiniteField::prime_field(ell);
    long dim = c.dim();
    FFMatrix m(F, dim, dim);
    long pos = 0;
    for (const auto& s : c.summands) {
        FFPoly hb(F, s.hbar.c);
        FFMatrix blk = frobenius_matrix(hb, s.partition);
        for (long i = 0; i < blk.rows; ++i)
            for (long j = 0; j < blk.cols; ++j) m.at(pos + i, pos + j) = blk.at(i, j);
        pos += blk.rows;
    }
    return m;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    std::sort(out.begin(), out.end());
    return out;
}

long moebius(long n) {
    long mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

Int scheme_fixed_points(const TorsionClass& c, int64_t ell, long r) {
    FFMatrix f = class_frobenius(c, ell);
    FFMatrix pw = ff_mat_pow(f, static_cast<unsigned long>(r));
    FFMatrix diff = ff_mat_sub(pw, FFMatrix::identity(f.F, f.rows));
    long nullity = f.rows - ff_mat_rank(diff);
    Int count = 1;
    for (long i = 0; i < nullity; ++i) count *= ell;
    return count;
}

long scheme_frobenius_order(const TorsionClass& c, int64_t ell) {
    FFMatrix f = class_frobenius(c, ell);
    FFMatrix id = FFMatrix::identity(f.F, f.rows);
    FFMatrix pw = f;
    for (long k = 1; k <= 1000000; ++k) {
        if (pw == id) return k;
        pw = ff_mat_mul(pw, f);
    }
    throw InternalError("scheme_frobenius_order: order not found (matrix not invertible?)");
}

std::map<long, int64_t> scheme_point_counts(const TorsionClass& c, int64_t ell, long max_degree) {
    std::map<long, Int> fixed;
    for (long e = 1; e <= max_degree; ++e) fixed[e] = scheme_fixed_points(c, ell, e);
    std::map<long, int64_t> out;
    for (long r = 1; r <= max_degree; ++r) {
        Int sum = 0;
        for (long e : divisors_of(r)) sum += moebius(r / e) * fixed[e];
        check_internal(sum % r == 0 && sum >= 0, "scheme_point_counts: Moebius inversion broke");
        Int br = sum / r;
        if (br > 0) {
            check_internal(br.fits_slong_p(), "scheme_point_counts: count overflow");
            out[r] = br.get_si();
        }
    }
    return out;
}

IntPoly dual_weil(const IntPoly& f, const Int& q) {
    if (f.is_zero() || f.coeff(0) == 0) throw ZeroConstantTerm("dual_weil: f(0) = 0");
    long d = f.degree();
    std::vector<Int> v(d + 1);
    Int qpow = 1;
    for (long i = 0; i <= d; ++i) {
        Int num = f.coeff(i) * qpow;
        if (num % f.coeff(0) != 0)
            throw error(errc::parse, "dual_weil: dual polynomial is not integral");
        v[d - i] = num / f.coeff(0);
        qpow *= q;
    }
    return IntPoly(std::move(v));
}

std::vector<long> dual_polygon_map(const std::vector<LocalFactor>& decomp, const Int& q) {
    std::vector<long> pairing(decomp.size(), -1);
    for (size_t i = 0; i < decomp.size(); ++i) {
        const auto& h = decomp[i].hbar;
        const auto& F = h.F;
        if (F->is_zero(h.coeff(0)))
            throw UnpairedFactor("dual_polygon_map: residue polynomial vanishes at 0");
        long m = h.degree();
        // monic polynomial with roots q/alpha: reverse of h(q t) scaled
        auto qbar = F->from_int(q);
        std::vector<FiniteField::Elem> v(m + 1);
        auto inv0 = F->inv(h.coeff(0));
        auto qp = F->one();
        for (long j = 0; j <= m; ++j) {
            v[m - j] = F->mul(F->mul(h.coeff(j), qp), inv0);
            qp = F->mul(qp, qbar);
        }
        FFPoly dual_h(F, std::move(v));
        dual_h = ff_monic(dual_h);
        bool found = false;
        for (size_t j = 0; j < decomp.size(); ++j) {
            if (decomp[j].hbar == dual_h) {
                if (decomp[j].d != decomp[i].d)
                    throw UnpairedFactor("dual_polygon_map: paired factors have different d");
                pairing[i] = static_cast<long>(j);
                found = true;
                break;
            }
        }
        if (!found) throw UnpairedFactor("dual_polygon_map: no factor with the dual root");
    }
    // must be an involution
    for (size_t i = 0; i < pairing.size(); ++i)
        check_internal(pairing[pairing[i]] == static_cast<long>(i),
                       "dual_polygon_map: pairing is not an involution");
    return pairing;
}

long precision_cap(long degree) {
    if (const char* env = std::getenv("TORSION_ATLAS_PRECISION_CAP")) {
        long cap = std::atol(env);
        if (cap > 0) return cap;
    }
    return 64 * degree;
}

std::vector<long> point_group_at_factor(const WeilPolynomial& w, int64_t ell, size_t factor_index,
                                        const YoungPolygon& partition,
                                        const DecompositionOptions& opt) {
    long cap = precision_cap(w.f.degree());
    int precision = opt.precision > 0 ? opt.precision : static_cast<int>(w.f.degree()) + 2;
    for (;;) {
        try {
            DecompositionOptions cur = opt;
            cur.precision = precision;
            auto decomp = local_decomposition(w, ell, cur);
            check_internal(factor_index < decomp.size(), "point_group_at_factor: index");
            const auto& lf = decomp[factor_index];
            auto model = construct_lift(lf.q_shift, partition);
            // 1 - F = (1 - alpha) - x on this factor
            auto shift = model.ring->sub(model.ring->one(), model.ring->canonical(lf.alpha));
            return cokernel_group(model, shift);
        } catch (const PrecisionExhausted&) {
            if (2L * precision > cap)
                throw PrecisionExhausted("point_group_at_factor: precision cap " +
                                         std::to_string(cap) + " reached");
            precision *= 2;
        }
    }
}

}  // namespace atlas
