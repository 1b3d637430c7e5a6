#include "atlas/json_io.hpp"

#include "atlas/errors.hpp"

namespace atlas {

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw error(errc::parse, "expected an integer or a decimal string");
}

Json to_json(const IntPoly& f) {
    Json arr = Json::array();
    for (const auto& c : f.coeffs()) arr.push_back(int_to_json(c));
    return arr;
}

Json to_json(const ExtVal& v) {
    if (v.is_top()) return Json("TOP");
    return Json(v.v);
}

Json to_json(const YoungPolygon& p) {
    Json arr = Json::array();
    for (long m : p.parts()) arr.push_back(m);
    return arr;
}

Json to_json(const NewtonPolygon& np) {
    Json verts = Json::array();
    for (const auto& [x, y] : np.vertices()) verts.push_back(Json::array({Json(x), to_json(y)}));
    return Json{{"vertices", verts}};
}

Json to_json(const FFPoly& f) {
    Json j;
    j["ell"] = f.F->ell();
    if (!f.F->is_prime_field()) {
        Json tower = Json::array();
        for (auto c : f.F->modulus()) tower.push_back(c);
        j["tower"] = tower;
    }
    Json coeffs = Json::array();
    for (const auto& c : f.c) {
        if (f.F->is_prime_field()) {
            coeffs.push_back(c[0]);
        } else {
            Json e = Json::array();
            for (auto x : c) e.push_back(x);
            coeffs.push_back(e);
        }
    }
    j["coeffs"] = coeffs;
    return j;
}

namespace {

Json ring_header(const WittRing::Ptr& r) {
    Json j;
    j["ell"] = r->ell();
    Json rp = Json::array();
    for (const auto& c : r->lift_poly().coeffs()) rp.push_back(int_to_json(c));
    j["residue_poly"] = rp;
    j["precision"] = r->precision();
    return j;
}

Json elem_to_json(const WittRing::Elem& e) {
    Json arr = Json::array();
    for (const auto& x : e) arr.push_back(int_to_json(x));
    return arr;
}

WittRing::Ptr ring_from_json(const Json& j) {
    int64_t ell = j.at("ell").get<int64_t>();
    int precision = j.at("precision").get<int>();
    std::vector<int64_t> hbar;
    for (const auto& c : j.at("residue_poly")) {
        Int v = int_from_json(c) % ell;
        if (v < 0) v += ell;
        hbar.push_back(v.get_si());
    }
    return WittRing::make(ell, hbar, precision);
}

WittRing::Elem elem_from_json(const Json& j, const WittRing::Ptr& r) {
    WittRing::Elem e;
    for (const auto& x : j) e.push_back(int_from_json(x));
    check_internal(static_cast<int>(e.size()) == r->deg(), "witt element has wrong length");
    return r->canonical(std::move(e));
}

}  // namespace

Json to_json(const WittPoly& f) {
    Json j = ring_header(f.R);
    Json coeffs = Json::array();
    for (const auto& c : f.c) coeffs.push_back(elem_to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

Json to_json(const WittMatrix& m) {
    Json j = ring_header(m.R);
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    Json entries = Json::array();
    for (long i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (long k = 0; k < m.cols; ++k) row.push_back(elem_to_json(m.at(i, k)));
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const LatticeModel& m) {
    Json j;
    j["ring"] = ring_header(m.ring);
    j["op"] = to_json(m.op);
    j["charpoly"] = to_json(m.charpoly);
    return j;
}

Json to_json(const DistinguishedScheme& s) {
    Json j;
    j["hbar"] = to_json(s.hbar);
    j["partition"] = to_json(s.partition);
    return j;
}

Json to_json(const TorsionClass& c) {
    Json summands = Json::array();
    for (const auto& s : c.summands) summands.push_back(to_json(s));
    return Json{{"summands", summands}};
}

Json to_json(const SurfaceCase& sc) {
    Json j;
    j["case"] = sc.case_id;
    Json cond;
    cond["residue_shape"] = sc.conditions.residue_shape;
    cond["squarefree"] = sc.conditions.squarefree;
    cond["a1"] = int_to_json(sc.conditions.a1);
    cond["a2"] = int_to_json(sc.conditions.a2);
    cond["a1^2-4a2+8q"] = int_to_json(sc.conditions.disc_s);
    cond["a1+a2+1-2q"] = int_to_json(sc.conditions.four_q);
    if (sc.conditions.regular) cond["regular"] = *sc.conditions.regular;
    if (sc.conditions.repeated_root)
        cond["repeated_root"] = int_to_json(*sc.conditions.repeated_root);
    if (sc.conditions.p1_at_root) cond["p1_at_root"] = int_to_json(*sc.conditions.p1_at_root);
    if (sc.conditions.ell2_divides_p1) cond["ell2_divides_p1"] = *sc.conditions.ell2_divides_p1;
    j["conditions"] = cond;
    Json classes = Json::array();
    for (const auto& c : sc.classes) classes.push_back(to_json(c));
    j["classes"] = classes;
    return j;
}

Json to_json(const ZetaFactored& z) {
    Json factors = Json::array();
    for (const auto& [p, e] : z.factors) {
        Json f;
        f["poly"] = to_json(p);
        f["exponent"] = e;
        factors.push_back(f);
    }
    return Json{{"factors", factors}};
}

Json to_json(const BVector& b) {
    Json j = Json::object();
    for (const auto& [r, n] : b) j[std::to_string(r)] = n;
    return j;
}

WittPoly witt_poly_from_json(const Json& j) {
    auto r = ring_from_json(j);
    std::vector<WittRing::Elem> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(elem_from_json(c, r));
    return WittPoly(r, std::move(coeffs));
}

WittMatrix witt_matrix_from_json(const Json& j) {
    auto r = ring_from_json(j);
    long rows = j.at("rows").get<long>();
    long cols = j.at("cols").get<long>();
    WittMatrix m(r, rows, cols);
    const auto& entries = j.at("entries");
    check_internal(static_cast<long>(entries.size()) == rows, "matrix row count mismatch");
    for (long i = 0; i < rows; ++i) {
        check_internal(static_cast<long>(entries[i].size()) == cols, "matrix column count mismatch");
        for (long k = 0; k < cols; ++k) m.at(i, k) = elem_from_json(entries[i][k], r);
    }
    return m;
}

}  // namespace atlas
