#include "atlas/witt.hpp"

#include <algorithm>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

WittRing::WittRing(int64_t ell, IntPoly lift, int precision, FiniteField::Ptr residue)
    : ell_(ell),
      m_(static_cast<int>(lift.degree())),
      precision_(precision),
      lift_(std::move(lift)),
      residue_(std::move(residue)) {
    modulus_ = 1;
    for (int i = 0; i < precision_; ++i) modulus_ *= ell_;
}

WittRing::Ptr WittRing::make(int64_t ell, int precision) {
    return make(ell, {0, 1}, precision);
}

WittRing::Ptr WittRing::make(int64_t ell, const std::vector<int64_t>& hbar, int precision) {
    if (precision < 1) throw error(errc::parse, "precision must be positive");
    auto residue = FiniteField::make(ell, hbar);
    std::vector<Int> lift(residue->modulus().size());
    for (size_t i = 0; i < lift.size(); ++i) lift[i] = residue->modulus()[i];
    return Ptr(new WittRing(ell, IntPoly(std::move(lift)), precision, std::move(residue)));
}

WittRing::Ptr WittRing::with_precision(int precision) const {
    if (precision == precision_) return shared_from_this();
    if (precision < 1) throw error(errc::parse, "precision must be positive");
    return Ptr(new WittRing(ell_, lift_, precision, residue_));
}

bool WittRing::same_ring(const WittRing& o) const {
    return ell_ == o.ell_ && precision_ == o.precision_ && lift_ == o.lift_;
}

WittRing::Elem WittRing::one() const {
    Elem e(m_, 0);
    e[0] = 1;
    return e;
}

WittRing::Elem WittRing::gen() const {
    if (m_ == 1) throw InternalError("gen() on the prime ring");
    Elem e(m_, 0);
    e[1] = 1;
    return e;
}

WittRing::Elem WittRing::from_int(const Int& n) const {
    Elem e(m_, 0);
    Int r = n % modulus_;
    if (r < 0) r += modulus_;
    e[0] = r;
    return e;
}

WittRing::Elem WittRing::canonical(Elem a) const {
    for (auto& x : a) {
        x %= modulus_;
        if (x < 0) x += modulus_;
    }
    return a;
}

bool WittRing::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

WittRing::Elem WittRing::add(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) {
        e[i] = a[i] + b[i];
        if (e[i] >= modulus_) e[i] -= modulus_;
    }
    return e;
}

WittRing::Elem WittRing::sub(const Elem& a, const Elem& b) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) {
        e[i] = a[i] - b[i];
        if (e[i] < 0) e[i] += modulus_;
    }
    return e;
}

WittRing::Elem WittRing::neg(const Elem& a) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = a[i] == 0 ? Int(0) : modulus_ - a[i];
    return e;
}

WittRing::Elem WittRing::mul(const Elem& a, const Elem& b) const {
    std::vector<Int> prod(2 * m_ - 1, 0);
    for (int i = 0; i < m_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < m_; ++j) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * m_ - 2; k >= m_; --k) {
        if (prod[k] == 0) continue;
        Int t = prod[k];
        prod[k] = 0;
        for (int j = 0; j < m_; ++j) prod[k - m_ + j] -= t * lift_.coeff(j);
    }
    prod.resize(m_);
    return canonical(std::move(prod));
}

WittRing::Elem WittRing::pow(Elem a, unsigned long e) const {
    Elem acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

bool WittRing::is_unit(const Elem& a) const { return !residue_->is_zero(reduce(a)); }

WittRing::Elem WittRing::inv(const Elem& a) const {
    if (!is_unit(a)) throw error(errc::parse, "inverse of a non-unit");
    Elem x = lift_residue(residue_->inv(reduce(a)));
    // Newton iteration doubles the number of correct digits
    int correct = 1;
    Elem two = from_int(2);
    while (correct < precision_) {
        x = mul(x, sub(two, mul(a, x)));
        correct *= 2;
    }
    return x;
}

ExtVal WittRing::valuation(const Elem& a) const {
    long best = -1;
    for (const auto& x : a) {
        if (x == 0) continue;
        Int tmp;
        long v = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), Int(ell_).get_mpz_t()));
        if (best < 0 || v < best) best = v;
        if (best == 0) break;
    }
    if (best < 0) return ExtVal::top_val();
    return ExtVal::finite(best);
}

WittRing::Elem WittRing::div_ell_pow(const Elem& a, long k) const {
    Int pk = 1;
    for (long i = 0; i < k; ++i) pk *= ell_;
    Elem e(m_);
    for (int i = 0; i < m_; ++i) {
        check_internal(a[i] % pk == 0, "div_ell_pow: element not divisible");
        e[i] = a[i] / pk;
    }
    return e;
}

FiniteField::Elem WittRing::reduce(const Elem& a) const {
    FiniteField::Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = mpz_class(a[i] % ell_).get_si();
    return e;
}

WittRing::Elem WittRing::lift_residue(const FiniteField::Elem& a) const {
    Elem e(m_);
    for (int i = 0; i < m_; ++i) e[i] = a[i];
    return e;
}

WittRing::Elem WittRing::teichmueller(const FiniteField::Elem& residue) const {
    Elem x = lift_residue(residue);
    // x -> x^(ell^m) gains one ell-adic digit per step
    unsigned long q_steps = static_cast<unsigned long>(m_);
    for (int k = 1; k < precision_; ++k) {
        Elem y = x;
        for (unsigned long s = 0; s < q_steps; ++s) {
            Elem p = one();
            // y^ell by repeated squaring on the exponent ell
            unsigned long e = static_cast<unsigned long>(ell_);
            Elem base = y;
            while (e > 0) {
                if (e & 1) p = mul(p, base);
                base = mul(base, base);
                e >>= 1;
            }
            y = p;
        }
        if (y == x) break;
        x = y;
    }
    return x;
}

// ---------------------------------------------------------------------------
// WittPoly

WittPoly::WittPoly(WittRing::Ptr ring, std::vector<WittRing::Elem> coeffs)
    : R(std::move(ring)), c(std::move(coeffs)) {
    for (auto& x : c) x = R->canonical(std::move(x));
    normalize();
}

WittPoly WittPoly::from_int_poly(WittRing::Ptr ring, const IntPoly& f) {
    std::vector<WittRing::Elem> v;
    v.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) v.push_back(ring->from_int(x));
    return WittPoly(ring, std::move(v));
}

void WittPoly::normalize() {
    while (!c.empty() && R->is_zero(c.back())) c.pop_back();
}

bool WittPoly::monic_exact() const { return !c.empty() && R->is_one(c.back()); }

WittRing::Elem WittPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return R->zero();
    return c[i];
}

std::string WittPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        auto a = coeff(i);
        if (R->is_zero(a)) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs;
        if (R->deg() == 1) {
            cs = a[0].get_str();
        } else {
            std::ostringstream cos;
            bool cf = true;
            for (int j = R->deg() - 1; j >= 0; --j) {
                if (a[j] == 0) continue;
                if (!cf) cos << "+";
                cf = false;
                if (a[j] != 1 || j == 0) cos << a[j].get_str();
                if (j > 0) {
                    if (a[j] != 1) cos << "*";
                    cos << "y";
                    if (j > 1) cos << "^" << j;
                }
            }
            cs = cos.str();
            if (!cf && cs.find('+') != std::string::npos && i > 0) cs = "(" + cs + ")";
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool operator==(const WittPoly& a, const WittPoly& b) { return a.c == b.c; }
bool operator!=(const WittPoly& a, const WittPoly& b) { return !(a == b); }

WittPoly wp_add(const WittPoly& a, const WittPoly& b) {
    std::vector<WittRing::Elem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.R->add(a.coeff(i), b.coeff(i));
    return WittPoly(a.R, std::move(v));
}

WittPoly wp_sub(const WittPoly& a, const WittPoly& b) {
    std::vector<WittRing::Elem> v(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.R->sub(a.coeff(i), b.coeff(i));
    return WittPoly(a.R, std::move(v));
}

WittPoly wp_mul(const WittPoly& a, const WittPoly& b) {
    if (a.is_zero() || b.is_zero()) return WittPoly(a.R, {});
    std::vector<WittRing::Elem> v(a.c.size() + b.c.size() - 1, a.R->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.R->is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            v[i + j] = a.R->add(v[i + j], a.R->mul(a.c[i], b.c[j]));
    }
    return WittPoly(a.R, std::move(v));
}

WittPoly wp_scale(const WittPoly& a, const WittRing::Elem& s) {
    std::vector<WittRing::Elem> v(a.c);
    for (auto& x : v) x = a.R->mul(x, s);
    return WittPoly(a.R, std::move(v));
}

std::pair<WittPoly, WittPoly> wp_divmod_monic(const WittPoly& a, const WittPoly& b) {
    check_internal(b.monic_exact(), "wp_divmod_monic: divisor is not exactly monic");
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {WittPoly(a.R, {}), a};
    auto rem = a.c;
    std::vector<WittRing::Elem> quo(da - db + 1, a.R->zero());
    for (long i = da; i >= db; --i) {
        if (a.R->is_zero(rem[i])) continue;
        auto q = rem[i];
        quo[i - db] = q;
        for (long j = 0; j <= db; ++j)
            rem[i - db + j] = a.R->sub(rem[i - db + j], a.R->mul(q, b.coeff(j)));
    }
    return {WittPoly(a.R, std::move(quo)), WittPoly(a.R, std::move(rem))};
}

WittRing::Elem wp_eval(const WittPoly& a, const WittRing::Elem& x) {
    auto acc = a.R->zero();
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = a.R->add(a.R->mul(acc, x), *it);
    return acc;
}

WittPoly wp_shift_var(const WittPoly& a, const WittRing::Elem& s) {
    WittPoly acc(a.R, {});
    WittPoly lin(a.R, {s, a.R->one()});
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
        acc = wp_add(wp_mul(acc, lin), WittPoly(a.R, {*it}));
    return acc;
}

FFPoly wp_reduce(const WittPoly& a) {
    std::vector<FiniteField::Elem> v;
    v.reserve(a.c.size());
    for (const auto& x : a.c) v.push_back(a.R->reduce(x));
    return FFPoly(a.R->residue_field(), std::move(v));
}

WittPoly wp_to_ring(const WittPoly& a, const WittRing::Ptr& ring) {
    check_internal(ring->precision() <= a.R->precision() && ring->ell() == a.R->ell(),
                   "wp_to_ring: target ring is not a truncation");
    std::vector<WittRing::Elem> v(a.c);
    return WittPoly(ring, std::move(v));
}

// ---------------------------------------------------------------------------
// WittMatrix

WittMatrix::WittMatrix(WittRing::Ptr ring, long r, long c)
    : R(std::move(ring)), rows(r), cols(c), e(r * c, R->zero()) {}

WittMatrix WittMatrix::identity(WittRing::Ptr ring, long n) {
    WittMatrix m(ring, n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = ring->one();
    return m;
}

bool operator==(const WittMatrix& a, const WittMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.e == b.e;
}

WittMatrix wm_mul(const WittMatrix& a, const WittMatrix& b) {
    check_internal(a.cols == b.rows, "wm_mul: dimension mismatch");
    WittMatrix r(a.R, a.rows, b.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long k = 0; k < a.cols; ++k) {
            if (a.R->is_zero(a.at(i, k))) continue;
            for (long j = 0; j < b.cols; ++j)
                r.at(i, j) = a.R->add(r.at(i, j), a.R->mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

WittMatrix wm_add(const WittMatrix& a, const WittMatrix& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "wm_add: dimension mismatch");
    WittMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.R->add(a.e[i], b.e[i]);
    return r;
}

WittMatrix wm_sub(const WittMatrix& a, const WittMatrix& b) {
    check_internal(a.rows == b.rows && a.cols == b.cols, "wm_sub: dimension mismatch");
    WittMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.R->sub(a.e[i], b.e[i]);
    return r;
}

FFMatrix wm_reduce(const WittMatrix& a) {
    FFMatrix r(a.R->residue_field(), a.rows, a.cols);
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < a.cols; ++j) r.at(i, j) = a.R->reduce(a.at(i, j));
    return r;
}

WittMatrix wm_to_ring(const WittMatrix& a, const WittRing::Ptr& ring) {
    check_internal(ring->precision() <= a.R->precision() && ring->ell() == a.R->ell(),
                   "wm_to_ring: target ring is not a truncation");
    WittMatrix r(ring, a.rows, a.cols);
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = ring->canonical(a.e[i]);
    return r;
}

WittPoly wm_charpoly(const WittMatrix& m) {
    check_internal(m.rows == m.cols, "wm_charpoly: matrix not square");
    const auto& R = m.R;
    long n = m.rows;
    if (n == 0) return WittPoly(R, {R->one()});
    // Berkowitz, iterating over trailing principal submatrices.
    // p holds det(tI - A_j) leading-first for the submatrix starting at j.
    std::vector<WittRing::Elem> p = {R->one(), R->neg(m.at(n - 1, n - 1))};
    for (long j = n - 2; j >= 0; --j) {
        long k = n - 1 - j;  // size of the current trailing submatrix B
        // Toeplitz coefficients t_0..t_{k+1}
        std::vector<WittRing::Elem> t(k + 2, R->zero());
        t[0] = R->one();
        t[1] = R->neg(m.at(j, j));
        std::vector<WittRing::Elem> v(k);
        for (long i = 0; i < k; ++i) v[i] = m.at(j + 1 + i, j);
        for (long i = 2; i <= k + 1; ++i) {
            auto dot = R->zero();
            for (long s = 0; s < k; ++s) dot = R->add(dot, R->mul(m.at(j, j + 1 + s), v[s]));
            t[i] = R->neg(dot);
            if (i <= k) {
                std::vector<WittRing::Elem> nv(k, R->zero());
                for (long r2 = 0; r2 < k; ++r2)
                    for (long s = 0; s < k; ++s)
                        nv[r2] = R->add(nv[r2], R->mul(m.at(j + 1 + r2, j + 1 + s), v[s]));
                v = std::move(nv);
            }
        }
        std::vector<WittRing::Elem> np(p.size() + 1, R->zero());
        for (size_t i = 0; i < np.size(); ++i)
            for (size_t s = 0; s <= i && s < t.size(); ++s)
                if (i - s < p.size()) np[i] = R->add(np[i], R->mul(t[s], p[i - s]));
        p = std::move(np);
    }
    std::vector<WittRing::Elem> cf(p.rbegin(), p.rend());
    return WittPoly(R, std::move(cf));
}

// ---------------------------------------------------------------------------
// Hensel lifting

std::tuple<FFPoly, FFPoly, FFPoly> ff_ext_gcd(const FFPoly& a, const FFPoly& b) {
    const auto& F = a.F;
    FFPoly r0 = a, r1 = b;
    FFPoly s0 = FFPoly::from_ints(F, {1}), s1(F, {});
    FFPoly t0(F, {}), t1 = FFPoly::from_ints(F, {1});
    while (!r1.is_zero()) {
        auto [q, r] = ff_divmod(r0, r1);
        FFPoly s2 = ff_sub(s0, ff_mul(q, s1));
        FFPoly t2 = ff_sub(t0, ff_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto lead_inv = F->inv(r0.leading());
    return {ff_scale(r0, lead_inv), ff_scale(s0, lead_inv), ff_scale(t0, lead_inv)};
}

std::pair<WittPoly, WittPoly> hensel_lift_pair(const WittPoly& f, const FFPoly& g0,
                                               const FFPoly& h0) {
    const auto& R = f.R;
    auto F = R->residue_field();
    check_internal(f.monic_exact(), "hensel_lift_pair: f not monic");
    if (!g0.is_monic() || !h0.is_monic())
        throw error(errc::parse, "hensel_lift_pair: factors must be monic");
    if (ff_mul(g0, h0) != wp_reduce(f))
        throw NotCoprime("hensel_lift_pair: factors do not multiply to f mod ell");
    auto [d, s, t] = ff_ext_gcd(g0, h0);
    if (d.degree() != 0) throw NotCoprime("hensel_lift_pair: factors share a common divisor");

    auto lift_ff = [&](const FFPoly& a) {
        std::vector<WittRing::Elem> v;
        v.reserve(a.c.size());
        for (const auto& x : a.c) v.push_back(R->lift_residue(x));
        return WittPoly(R, std::move(v));
    };

    WittPoly G = lift_ff(g0), H = lift_ff(h0);
    Int ellpow = R->ell();
    for (int k = 1; k < R->precision(); ++k) {
        WittPoly E = wp_sub(f, wp_mul(G, H));
        // E = ell^k * (correction), read the correction mod ell
        std::vector<FiniteField::Elem> ec(E.c.size());
        for (size_t i = 0; i < E.c.size(); ++i) {
            WittRing::Elem q(R->deg());
            for (int j = 0; j < R->deg(); ++j) {
                check_internal(E.c[i][j] % ellpow == 0, "hensel_lift_pair: error term valuation");
                q[j] = E.c[i][j] / ellpow;
            }
            ec[i] = R->reduce(q);
        }
        FFPoly e(F, std::move(ec));
        ellpow *= R->ell();
        if (e.is_zero()) continue;
        FFPoly dH = ff_divmod(ff_mul(s, e), h0).second;
        auto [dG, rem] = ff_divmod(ff_sub(e, ff_mul(g0, dH)), h0);
        check_internal(rem.is_zero(), "hensel_lift_pair: correction not divisible");
        Int step = ellpow / R->ell();
        auto scale_lift = [&](const FFPoly& a) {
            std::vector<WittRing::Elem> v;
            v.reserve(a.c.size());
            for (const auto& x : a.c) {
                WittRing::Elem w(R->deg());
                for (int j = 0; j < R->deg(); ++j) w[j] = Int(x[j]) * step;
                v.push_back(R->canonical(std::move(w)));
            }
            return WittPoly(R, std::move(v));
        };
        G = wp_add(G, scale_lift(dG));
        H = wp_add(H, scale_lift(dH));
    }
    check_internal(wp_mul(G, H) == f, "hensel_lift_pair: lift does not multiply back");
    return {G, H};
}

std::vector<WittPoly> hensel_lift_groups(const WittPoly& f, const std::vector<FFPoly>& parts) {
    check_internal(!parts.empty(), "hensel_lift_groups: no groups");
    if (parts.size() == 1) {
        if (wp_reduce(f) != parts[0])
            throw NotCoprime("hensel_lift_groups: group does not match f mod ell");
        return {f};
    }
    FFPoly rest = parts[1];
    for (size_t i = 2; i < parts.size(); ++i) rest = ff_mul(rest, parts[i]);
    auto [G, H] = hensel_lift_pair(f, parts[0], rest);
    std::vector<FFPoly> tail(parts.begin() + 1, parts.end());
    auto out = hensel_lift_groups(H, tail);
    out.insert(out.begin(), G);
    return out;
}

std::vector<WittPoly> hensel_lift_grouped(const IntPoly& f,
                                          const std::vector<std::pair<FFPoly, int>>& groups,
                                          int64_t ell, int precision) {
    if (!f.is_monic()) throw error(errc::parse, "hensel_lift_grouped: f must be monic");
    auto R = WittRing::make(ell, precision);
    auto F = R->residue_field();
    std::vector<FFPoly> parts;
    parts.reserve(groups.size());
    for (const auto& [h, d] : groups) {
        check_internal(h.F->ell() == ell && h.F->deg() == 1,
                       "hensel_lift_grouped: groups must live over F_ell");
        FFPoly hp = FFPoly(F, h.c);
        parts.push_back(ff_pow(hp, static_cast<unsigned long>(d)));
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (ff_gcd(parts[i], parts[j]).degree() != 0)
                throw NotCoprime("hensel_lift_grouped: groups share a factor mod ell");
    FFPoly prod = FFPoly::from_ints(F, {1});
    for (const auto& p : parts) prod = ff_mul(prod, p);
    if (prod != FFPoly::from_int_poly(F, f))
        throw NotCoprime("hensel_lift_grouped: groups do not multiply to f mod ell");
    return hensel_lift_groups(WittPoly::from_int_poly(R, f), parts);
}

// ---------------------------------------------------------------------------
// Smith normal form over the local ring

SnfResult snf_local_raw(const WittMatrix& m) {
    const auto& R = m.R;
    SnfResult res;
    WittMatrix a = m;
    res.left = WittMatrix::identity(R, m.rows);
    res.right = WittMatrix::identity(R, m.cols);
    long n = std::min(m.rows, m.cols);
    long k = 0;
    for (; k < n; ++k) {
        // minimal-valuation pivot, ties to the smallest row then column
        long pi = -1, pj = -1;
        ExtVal best = ExtVal::top_val();
        for (long i = k; i < m.rows; ++i)
            for (long j = k; j < m.cols; ++j) {
                ExtVal v = R->valuation(a.at(i, j));
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best.is_top()) break;
        long v = best.v;
        if (pi != k)
            for (long j = 0; j < m.cols; ++j) std::swap(a.at(k, j), a.at(pi, j));
        if (pi != k)
            for (long j = 0; j < m.rows; ++j) std::swap(res.left.at(k, j), res.left.at(pi, j));
        if (pj != k)
            for (long i = 0; i < m.rows; ++i) std::swap(a.at(i, k), a.at(i, pj));
        if (pj != k)
            for (long i = 0; i < m.cols; ++i) std::swap(res.right.at(i, k), res.right.at(i, pj));
        // normalize the pivot to exactly ell^v
        auto u = R->div_ell_pow(a.at(k, k), v);
        auto uinv = R->inv(u);
        for (long j = 0; j < m.cols; ++j) a.at(k, j) = R->mul(uinv, a.at(k, j));
        for (long j = 0; j < m.rows; ++j) res.left.at(k, j) = R->mul(uinv, res.left.at(k, j));
        // clear the column below, then the row to the right
        for (long i = k + 1; i < m.rows; ++i) {
            if (R->is_zero(a.at(i, k))) continue;
            auto factor = R->div_ell_pow(a.at(i, k), v);
            for (long j = 0; j < m.cols; ++j)
                a.at(i, j) = R->sub(a.at(i, j), R->mul(factor, a.at(k, j)));
            for (long j = 0; j < m.rows; ++j)
                res.left.at(i, j) = R->sub(res.left.at(i, j), R->mul(factor, res.left.at(k, j)));
        }
        for (long j = k + 1; j < m.cols; ++j) {
            if (R->is_zero(a.at(k, j))) continue;
            auto factor = R->div_ell_pow(a.at(k, j), v);
            for (long i = 0; i < m.rows; ++i)
                a.at(i, j) = R->sub(a.at(i, j), R->mul(factor, a.at(i, k)));
            for (long i = 0; i < m.cols; ++i)
                res.right.at(i, j) = R->sub(res.right.at(i, j), R->mul(factor, res.right.at(i, k)));
        }
        res.divisors.push_back(ExtVal::finite(v));
    }
    for (; k < n; ++k) {
        res.divisors.push_back(ExtVal::top_val());
        res.exhausted = true;
    }
    return res;
}

std::vector<long> smith_normal_form_local(const WittMatrix& m, WittMatrix* left,
                                          WittMatrix* right) {
    auto res = snf_local_raw(m);
    if (res.exhausted)
        throw PrecisionExhausted("smith_normal_form_local: divisor is zero at precision " +
                                 std::to_string(m.R->precision()));
    std::vector<long> out;
    out.reserve(res.divisors.size());
    for (const auto& d : res.divisors) out.push_back(d.v);
    if (left) *left = std::move(res.left);
    if (right) *right = std::move(res.right);
    return out;
}

}  // namespace atlas
