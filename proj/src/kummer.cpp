#include "atlas/kummer.hpp"

#include <algorithm>
#include <sstream>

#include "atlas/errors.hpp"

namespace atlas {

std::vector<Int> ZetaFactored::series(long order) const {
    std::vector<Int> acc(order + 1, 0);
    acc[0] = 1;
    auto mul_poly = [&](const IntPoly& p) {
        std::vector<Int> out(order + 1, 0);
        for (long i = 0; i <= order; ++i) {
            if (acc[i] == 0) continue;
            for (long j = 0; j <= p.degree() && i + j <= order; ++j)
                out[i + j] += acc[i] * p.coeff(j);
        }
        acc = std::move(out);
    };
    auto div_poly = [&](const IntPoly& p) {
        check_internal(p.coeff(0) == 1, "ZetaFactored: factor constant term must be 1");
        std::vector<Int> out(order + 1, 0);
        for (long n = 0; n <= order; ++n) {
            Int s = acc[n];
            for (long j = 1; j <= p.degree() && j <= n; ++j) s -= p.coeff(j) * out[n - j];
            out[n] = s;
        }
        acc = std::move(out);
    };
    for (const auto& [p, e] : factors) {
        for (int k = 0; k < e; ++k) mul_poly(p);
        for (int k = 0; k > e; --k) div_poly(p);
    }
    return acc;
}

std::vector<Int> inverse_root_power_sums(const IntPoly& p, long order) {
    check_internal(p.coeff(0) == 1, "inverse_root_power_sums: constant term must be 1");
    std::vector<Int> s(order + 1, 0);
    for (long d = 1; d <= order; ++d) {
        Int acc = Int(d) * p.coeff(d);
        for (long j = 1; j < d; ++j) acc += p.coeff(j) * s[d - j];
        s[d] = -acc;
    }
    return s;
}

std::vector<Int> ZetaFactored::log_counts(long order) const {
    std::vector<Int> n(order + 1, 0);
    for (const auto& [p, e] : factors) {
        auto s = inverse_root_power_sums(p, order);
        for (long d = 1; d <= order; ++d) n[d] -= Int(e) * s[d];
    }
    return n;
}

std::string ZetaFactored::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << "(" << p.str() << ")^" << e;
    }
    return os.str();
}

IntPoly exterior_square_poly(const IntPoly& f) {
    check_internal(f.is_monic() && f.degree() >= 2, "exterior_square_poly: monic f of degree >= 2");
    long d = f.degree();
    long dim = d * (d - 1) / 2;
    auto p = f.power_sums(2 * dim);
    std::vector<Int> s(dim);
    for (long k = 1; k <= dim; ++k) {
        Int v = p[k - 1] * p[k - 1] - p[2 * k - 1];
        check_internal(v % 2 == 0, "exterior_square_poly: odd pair trace");
        s[k - 1] = v / 2;
    }
    IntPoly chi = IntPoly::from_power_sums(dim, s);
    // P_2(t) = t^dim chi(1/t); chi(0) != 0 since the omega_i omega_j are nonzero
    IntPoly p2 = chi.reverse();
    check_internal(p2.coeff(0) == 1, "exterior_square_poly: P_2(0) != 1");
    return p2;
}

ZetaFactored zeta_abelian(const WeilPolynomial& w) {
    if (w.f.degree() != 4) throw WrongDegree("zeta_abelian: abelian surface required");
    const IntPoly& f = w.f;
    IntPoly p0(std::vector<Int>{1, -1});
    IntPoly p1 = f.reverse();
    IntPoly p2 = exterior_square_poly(f);
    // P_3(t) = f(q^2 t) / q^2
    IntPoly scaled = f.scale_var(w.q * w.q);
    std::vector<Int> v(scaled.coeffs());
    for (auto& x : v) {
        check_internal(x % (w.q * w.q) == 0, "zeta_abelian: P_3 not integral");
        x /= w.q * w.q;
    }
    IntPoly p3(std::move(v));
    IntPoly p4(std::vector<Int>{1, -(w.q * w.q)});
    return ZetaFactored{{{p0, -1}, {p1, 1}, {p2, -1}, {p3, 1}, {p4, -1}}};
}

std::string bvector_str(const BVector& b) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [r, n] : b) {
        if (n == 0) continue;
        if (!first) os << ",";
        first = false;
        os << "b" << r << "=" << n;
    }
    return os.str();
}

ZetaFactored kummer_zeta(const WeilPolynomial& w, const BVector& b) {
    if (w.f.degree() != 4) throw WrongDegree("kummer_zeta: abelian surface required");
    long total = 0;
    for (const auto& [r, n] : b) {
        if (r < 1 || n < 0) throw BadBVector("kummer_zeta: malformed b-vector");
        total += r * n;
    }
    if (total != 16) throw BadBVector("kummer_zeta: sum of r*b_r must be 16");
    IntPoly p = exterior_square_poly(w.f);
    for (const auto& [r, n] : b) {
        Int qr = 1;
        for (long i = 0; i < r; ++i) qr *= w.q;
        std::vector<Int> cyc(r + 1, 0);
        cyc[0] = 1;
        cyc[r] = -qr;
        IntPoly factor(std::move(cyc));
        for (long i = 0; i < n; ++i) p = p * factor;
    }
    check_internal(p.degree() == 22, "kummer_zeta: deg P != 22");
    IntPoly p0(std::vector<Int>{1, -1});
    IntPoly p4(std::vector<Int>{1, -(w.q * w.q)});
    return ZetaFactored{{{p0, -1}, {p, -1}, {p4, -1}}};
}

IntPoly frobenius_power_charpoly(const IntPoly& f, long r) {
    check_internal(r >= 1, "frobenius_power_charpoly: r >= 1");
    long d = f.degree();
    auto p = f.power_sums(d * r);
    std::vector<Int> pr(d);
    for (long k = 1; k <= d; ++k) pr[k - 1] = p[k * r - 1];
    return IntPoly::from_power_sums(d, pr);
}

Int kummer_point_count(const WeilPolynomial& w, const Int& two_torsion_points, long r) {
    check_internal(r >= 1, "kummer_point_count: r >= 1");
    IntPoly fr = r == 1 ? w.f : frobenius_power_charpoly(w.f, r);
    Int sum = fr(Int(1)) + fr(Int(-1));
    check_internal(sum % 2 == 0, "kummer_point_count: f_r(1) + f_r(-1) is odd");
    Int qr = 1;
    for (long i = 0; i < r; ++i) qr *= w.q;
    return sum / 2 + qr * two_torsion_points;
}

Int two_torsion_points_from_bvector(const BVector& b, long r) {
    Int total = 0;
    for (const auto& [deg, n] : b)
        if (r % deg == 0) total += Int(deg) * n;
    return total;
}

std::vector<std::pair<BVector, ZetaFactored>> enumerate_kummer_zetas(const WeilPolynomial& w,
                                                                     uint64_t seed) {
    if (w.p == 2) throw CharacteristicTwo("enumerate_kummer_zetas: p = 2 is excluded");
    if (w.f.degree() != 4) throw WrongDegree("enumerate_kummer_zetas: abelian surface required");
    DecompositionOptions opt;
    opt.seed = seed;
    auto sc = classify_surface(w, 2, opt);
    std::vector<BVector> bs;
    for (const auto& c : sc.classes) {
        long ord = scheme_frobenius_order(c, 2);
        BVector b;
        for (const auto& [r, n] : scheme_point_counts(c, 2, ord)) b[r] = n;
        bs.push_back(std::move(b));
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    std::vector<std::pair<BVector, ZetaFactored>> out;
    out.reserve(bs.size());
    for (auto& b : bs) {
        auto z = kummer_zeta(w, b);
        out.emplace_back(std::move(b), std::move(z));
    }
    return out;
}

namespace {

BVector counts_for(const TorsionClass& c) {
    long ord = scheme_frobenius_order(c, 2);
    BVector b;
    for (const auto& [r, n] : scheme_point_counts(c, 2, ord)) b[r] = n;
    return b;
}

FFPoly ff2(const std::vector<int64_t>& coeffs) {
    static auto F2 = FiniteField::prime_field(2);
    return FFPoly::from_ints(F2, coeffs);
}

NewtonPolygon polygon(std::vector<std::pair<long, long>> verts) {
    std::vector<std::pair<long, ExtVal>> v;
    v.reserve(verts.size());
    for (auto [x, y] : verts) v.emplace_back(x, ExtVal::finite(y));
    return NewtonPolygon::from_vertices(std::move(v));
}

std::string join_labels(const std::vector<NewtonPolygon>& polys) {
    std::ostringstream os;
    for (size_t i = 0; i < polys.size(); ++i) {
        if (i > 0) os << (i + 1 == polys.size() ? " or " : ",");
        os << polys[i].slope_label();
    }
    return os.str();
}

}  // namespace

std::vector<ClassTable> generate_tables() {
    std::vector<ClassTable> tables;
    FFPoly t_plus_1 = ff2({1, 1});
    FFPoly quad = ff2({1, 1, 1});      // t^2 + t + 1
    FFPoly quart = ff2({1, 1, 1, 1, 1});  // t^4 + t^3 + t^2 + t + 1

    // Table 1: f_A squarefree, f_A = (t+1)^4 mod 2, by clamped polygon slopes
    {
        ClassTable t1{"Table 1", {}};
        std::vector<std::vector<NewtonPolygon>> blocks = {
            {polygon({{0, 0}, {4, 1}})},
            {polygon({{0, 0}, {3, 1}, {4, 2}})},
            {polygon({{0, 0}, {4, 2}})},
            {polygon({{0, 0}, {3, 2}, {4, 3}}), polygon({{0, 0}, {2, 1}, {4, 3}}),
             polygon({{0, 0}, {4, 3}})},
            {polygon({{0, 0}, {4, 4}})},
        };
        for (const auto& block : blocks) {
            auto parts = admissible_partitions(block.front(), 4);
            for (size_t i = 1; i < block.size(); ++i)
                check_internal(admissible_partitions(block[i], 4) == parts,
                               "table 1: block polygons disagree");
            std::string label = join_labels(block);
            for (const auto& pi : parts)
                t1.rows.emplace_back(label, bvector_str(counts_for(make_class({{t_plus_1, pi}}))));
        }
        tables.push_back(std::move(t1));
    }

    // Table 2: f_A squarefree, f_A != (t+1)^4 mod 2
    {
        ClassTable t2{"Table 2", {}};
        t2.rows.emplace_back("t^4+t^3+t^2+t+1",
                             bvector_str(counts_for(make_class({{quart, YoungPolygon({1})}}))));
        auto lin_parts_low = admissible_partitions(polygon({{0, 0}, {2, 1}}), 2);   // nu = 1
        auto lin_parts_high = admissible_partitions(polygon({{0, 0}, {2, 2}}), 2);  // nu >= 2, clamped
        for (const auto& pi : lin_parts_low)
            t2.rows.emplace_back(
                "t^4+t^3+t+1 and 4 does not divide f_A(1)",
                bvector_str(counts_for(make_class({{t_plus_1, pi}, {quad, YoungPolygon({1})}}))));
        for (const auto& pi : lin_parts_high)
            t2.rows.emplace_back(
                "t^4+t^3+t+1 and 4 divides f_A(1)",
                bvector_str(counts_for(make_class({{t_plus_1, pi}, {quad, YoungPolygon({1})}}))));
        for (const auto& pi : lin_parts_low)
            t2.rows.emplace_back("t^4+t^2+1 and 4 does not divide a_1+a_2+1-2q",
                                 bvector_str(counts_for(make_class({{quad, pi}}))));
        for (const auto& pi : lin_parts_high)
            t2.rows.emplace_back("t^4+t^2+1 and 4 divides a_1+a_2+1-2q",
                                 bvector_str(counts_for(make_class({{quad, pi}}))));
        tables.push_back(std::move(t2));
    }

    // Table 3: f_A = P_A^2
    {
        ClassTable t3{"Table 3", {}};
        t3.rows.emplace_back("t^2+t+1",
                             bvector_str(counts_for(make_class({{quad, YoungPolygon({1, 1})}}))));
        auto low = admissible_partitions(polygon({{0, 0}, {2, 1}}), 2);
        auto high = admissible_partitions(polygon({{0, 0}, {2, 2}}), 2);
        auto pair_rows = [&](const std::vector<YoungPolygon>& parts, const std::string& label,
                             ClassTable& table) {
            std::vector<TorsionClass> classes;
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i; j < parts.size(); ++j)
                    classes.push_back(make_class({{t_plus_1, parts[i]}, {t_plus_1, parts[j]}}));
            std::sort(classes.begin(), classes.end(), class_order_less);
            for (const auto& c : classes) table.rows.emplace_back(label, bvector_str(counts_for(c)));
        };
        pair_rows(low, "t^2+1 and 4 does not divide P_A(1)", t3);
        pair_rows(high, "t^2+1 and 4 divides P_A(1)", t3);
        tables.push_back(std::move(t3));
    }

    // Table 4: f_A = (t +- sqrt(q))^2 f(t)
    {
        ClassTable t4{"Table 4", {}};
        t4.rows.emplace_back("t^2+t+1", bvector_str(counts_for(make_class(
                                            {{t_plus_1, YoungPolygon({1, 1})},
                                             {quad, YoungPolygon({1})}}))));
        auto cubic_low = admissible_partitions(polygon({{0, 0}, {2, 1}, {3, 2}}), 3);
        auto cubic_high = admissible_partitions(polygon({{0, 0}, {3, 3}}), 3);
        auto case7c_rows = [&](const std::vector<YoungPolygon>& pis, bool with_22,
                               const std::string& label, ClassTable& table) {
            std::vector<TorsionClass> classes;
            for (const auto& pi : pis) {
                auto parts = pi.parts();
                parts.push_back(1);
                classes.push_back(make_class({{t_plus_1, YoungPolygon(std::move(parts))}}));
            }
            if (with_22) classes.push_back(make_class({{t_plus_1, YoungPolygon({2, 2})}}));
            std::sort(classes.begin(), classes.end(), class_order_less);
            for (const auto& c : classes) table.rows.emplace_back(label, bvector_str(counts_for(c)));
        };
        case7c_rows(cubic_low, false, "t^2+1 and 4 does not divide f(1)", t4);
        case7c_rows(cubic_high, true, "t^2+1 and 4 divides f(1)", t4);
        tables.push_back(std::move(t4));
    }
    return tables;
}

std::string tables_to_tsv(const std::vector<ClassTable>& tables) {
    std::ostringstream os;
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i) os << "\n";
        os << "# " << tables[i].name << "\n";
        for (const auto& [cond, b] : tables[i].rows) os << cond << "\t" << b << "\n";
    }
    return os.str();
}

}  // namespace atlas
