#include "atlas/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "atlas/errors.hpp"
#include "atlas/json_io.hpp"

namespace atlas {

namespace {

IntPoly parse_poly(const std::string& spec) {
    std::vector<Int> coeffs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw error(errc::parse, "empty coefficient in --poly");
        try {
            coeffs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw error(errc::parse, "bad coefficient '" + tok + "' in --poly");
        }
    }
    if (coeffs.empty()) throw error(errc::parse, "--poly is empty");
    // leading coefficient first on the command line
    return IntPoly::from_leading_first(coeffs);
}

YoungPolygon parse_partition(const std::string& spec) {
    std::vector<long> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stol(tok));
    return YoungPolygon(std::move(parts));
}

BVector parse_bvector(const std::string& spec) {
    BVector b;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw error(errc::parse, "expected r=count in --b");
        std::string key = tok.substr(0, eq);
        if (!key.empty() && key[0] == 'b') key = key.substr(1);
        b[std::stol(key)] = std::stol(tok.substr(eq + 1));
    }
    return b;
}

std::string matrix_str(const WittMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < m.rows; ++i) {
        if (i) os << ",";
        os << "[";
        for (long j = 0; j < m.cols; ++j) {
            if (j) os << ",";
            const auto& e = m.at(i, j);
            if (m.R->deg() == 1) {
                os << e[0].get_str();
            } else {
                os << "(";
                for (int k = 0; k < m.R->deg(); ++k) {
                    if (k) os << ",";
                    os << e[k].get_str();
                }
                os << ")";
            }
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

std::string class_str(const TorsionClass& c) {
    std::ostringstream os;
    for (size_t i = 0; i < c.summands.size(); ++i) {
        if (i) os << " (+) ";
        os << "A(" << c.summands[i].hbar.str() << ", " << c.summands[i].partition.str() << ")";
    }
    return os.str();
}

struct CommonArgs {
    std::string poly;
    std::string q = "0";
    int64_t ell = 0;
    int precision = 0;
    uint64_t seed = 0;
    bool json = false;
    bool force_weil = false;
    long max_degree = 0;
};

WeilPolynomial load_weil(const CommonArgs& a) {
    return validate_weil(parse_poly(a.poly), Int(a.q), a.force_weil);
}

DecompositionOptions decomposition_options(const CommonArgs& a) {
    DecompositionOptions opt;
    opt.precision = a.precision;
    opt.seed = a.seed;
    return opt;
}

int cmd_polygon(const CommonArgs& a, std::ostream& out) {
    auto w = load_weil(a);
    auto decomp = local_decomposition(w, a.ell, decomposition_options(a));
    if (a.json) {
        Json factors = Json::array();
        for (const auto& lf : decomp) {
            Json j;
            j["hbar"] = to_json(lf.hbar);
            j["d"] = lf.d;
            j["f_lift"] = to_json(lf.f_lift);
            j["Q"] = to_json(lf.q_shift);
            j["newton_polygon"] = to_json(lf.np);
            j["clamped"] = to_json(lf.np.clamped());
            Json parts = Json::array();
            for (const auto& p : admissible_partitions(lf.np.clamped(), lf.d))
                parts.push_back(to_json(p));
            j["admissible_partitions"] = parts;
            factors.push_back(j);
        }
        out << Json{{"factors", factors}}.dump(2) << "\n";
        return 0;
    }
    for (const auto& lf : decomp) {
        out << "h = " << lf.hbar.str() << ", d = " << lf.d << "\n";
        out << "  Np(Q) " << lf.np.slope_label() << ", clamped " << lf.np.clamped().slope_label()
            << ", admissible:";
        for (const auto& p : admissible_partitions(lf.np.clamped(), lf.d)) out << " " << p.str();
        out << "\n";
    }
    return 0;
}

int cmd_lift(const CommonArgs& a, const std::string& partition, std::ostream& out) {
    IntPoly q = parse_poly(a.poly);
    if (q.degree() < 1 || !q.is_monic())
        throw error(errc::parse, "lift: --poly must be a monic polynomial of degree >= 1");
    YoungPolygon part = parse_partition(partition);
    int precision = a.precision > 0 ? a.precision
                                    : static_cast<int>(q.degree()) + 2 + part.rows() - 1;
    auto ring = WittRing::make(a.ell, precision);
    auto model = construct_lift(WittPoly::from_int_poly(ring, q), part);
    if (a.json) {
        out << to_json(model).dump(2) << "\n";
        return 0;
    }
    out << matrix_str(model.op) << "\n";
    return 0;
}

int cmd_torsion(const CommonArgs& a, std::ostream& out) {
    auto w = load_weil(a);
    auto classes = classify_torsion(w, a.ell, decomposition_options(a));
    if (a.json) {
        Json arr = Json::array();
        for (const auto& c : classes) {
            Json j = to_json(c);
            if (a.max_degree > 0) j["b"] = to_json([&] {
                BVector b;
                for (auto& [r, n] : scheme_point_counts(c, a.ell, a.max_degree)) b[r] = n;
                return b;
            }());
            arr.push_back(j);
        }
        out << Json{{"classes", arr}}.dump(2) << "\n";
        return 0;
    }
    out << classes.size() << " classes:\n";
    for (const auto& c : classes) {
        out << "  " << class_str(c);
        if (a.max_degree > 0) {
            BVector b;
            for (auto& [r, n] : scheme_point_counts(c, a.ell, a.max_degree)) b[r] = n;
            out << "  [" << bvector_str(b) << "]";
        }
        out << "\n";
    }
    return 0;
}

int cmd_surface(const CommonArgs& a, std::ostream& out) {
    auto w = load_weil(a);
    auto sc = classify_surface(w, a.ell, decomposition_options(a));
    if (a.json) {
        out << to_json(sc).dump(2) << "\n";
        return 0;
    }
    out << "case " << sc.case_id << " (" << sc.conditions.residue_shape << ")\n";
    for (const auto& c : sc.classes) out << "  " << class_str(c) << "\n";
    return 0;
}

int cmd_dual(const CommonArgs& a, std::ostream& out) {
    auto w = load_weil(a);
    auto opt = decomposition_options(a);
    auto decomp = local_decomposition(w, a.ell, opt);
    auto pairing = dual_polygon_map(decomp, w.q);
    Json jfactors = Json::array();
    for (size_t i = 0; i < decomp.size(); ++i) {
        const auto& lf = decomp[i];
        if (!a.json)
            out << "factor " << i << ": h = " << lf.hbar.str() << "  <->  factor " << pairing[i]
                << " (h = " << decomp[pairing[i]].hbar.str() << ")\n";
        Json jf;
        jf["hbar"] = to_json(lf.hbar);
        jf["dual_index"] = pairing[i];
        Json groups = Json::array();
        for (const auto& part : admissible_partitions(lf.np.clamped(), lf.d)) {
            auto divisors = point_group_at_factor(w, a.ell, i, part, opt);
            if (!a.json) {
                out << "  reduction type " << part.str() << ": coker(1-F) = ";
                if (divisors.empty()) out << "0";
                for (size_t k = 0; k < divisors.size(); ++k)
                    out << (k ? " + " : "") << "Z/" << a.ell << "^" << divisors[k];
                out << "\n";
            }
            Json g;
            g["partition"] = to_json(part);
            Json ds = Json::array();
            for (long dv : divisors) ds.push_back(dv);
            g["cokernel"] = ds;
            groups.push_back(g);
        }
        jf["point_groups"] = groups;
        jfactors.push_back(jf);
    }
    if (a.json) out << Json{{"factors", jfactors}}.dump(2) << "\n";
    return 0;
}

int cmd_kummer(const CommonArgs& a, const std::string& bspec, std::ostream& out) {
    auto w = load_weil(a);
    long order = a.max_degree > 0 ? a.max_degree : 6;
    auto emit = [&](const BVector& b, const ZetaFactored& z, Json* jout) {
        auto counts = z.log_counts(order);
        if (jout) {
            Json j;
            j["b"] = to_json(b);
            j["zeta"] = to_json(z);
            Json cs = Json::array();
            for (long d = 1; d <= order; ++d) cs.push_back(int_to_json(counts[d]));
            j["point_counts"] = cs;
            jout->push_back(j);
        } else {
            out << "b-vector " << bvector_str(b) << "\n";
            out << "  Z_S = 1 / " << z.factors[1].first.str() << " (deg "
                << z.factors[1].first.degree() << ") * (1-t)(1-q^2 t)\n";
            out << "  |S(F_q^d)| for d=1.." << order << ":";
            for (long d = 1; d <= order; ++d) out << " " << counts[d].get_str();
            out << "\n";
        }
    };
    if (!bspec.empty()) {
        BVector b = parse_bvector(bspec);
        auto z = kummer_zeta(w, b);
        Json arr = Json::array();
        emit(b, z, a.json ? &arr : nullptr);
        if (a.json) out << Json{{"zetas", arr}}.dump(2) << "\n";
        return 0;
    }
    auto zetas = enumerate_kummer_zetas(w, a.seed);
    Json arr = Json::array();
    for (const auto& [b, z] : zetas) emit(b, z, a.json ? &arr : nullptr);
    if (a.json) out << Json{{"zetas", arr}}.dump(2) << "\n";
    return 0;
}

int cmd_tables(bool json, std::ostream& out) {
    auto tables = generate_tables();
    if (json) {
        Json arr = Json::array();
        for (const auto& t : tables) {
            Json rows = Json::array();
            for (const auto& [cond, b] : t.rows)
                rows.push_back(Json{{"condition", cond}, {"b", b}});
            arr.push_back(Json{{"name", t.name}, {"rows", rows}});
        }
        out << Json{{"tables", arr}}.dump(2) << "\n";
        return 0;
    }
    out << tables_to_tsv(tables);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of ell-torsion group schemes in an isogeny class, "
                 "and zeta functions of Kummer surfaces"};
    app.require_subcommand(1);

    CommonArgs a;
    std::string partition, bspec;

    auto add_common = [&](CLI::App* cmd, bool need_q, bool need_ell) {
        cmd->add_option("--poly", a.poly, "polynomial coefficients, leading first (e.g. 1,-1,8,-7,49)")
            ->required();
        if (need_q) cmd->add_option("--q", a.q, "size of the base field")->required();
        if (need_ell) cmd->add_option("--ell", a.ell, "the prime ell != char")->required();
        cmd->add_option("--precision", a.precision, "working precision N (default deg f + 2)");
        cmd->add_option("--seed", a.seed, "seed for the randomized factorization (default 0)");
        cmd->add_flag("--json", a.json, "machine-readable output");
        cmd->add_flag("--force-weil", a.force_weil, "accept polynomials failing the root-modulus gate");
        cmd->add_option("--max-degree", a.max_degree, "largest point degree to report");
    };

    auto* polygon = app.add_subcommand("polygon", "Newton polygons of the shifted local factors");
    add_common(polygon, true, true);
    auto* lift = app.add_subcommand("lift", "witness matrix for a reduction type");
    lift->add_option("--partition", partition, "Jordan type, e.g. 2,1,1")->required();
    add_common(lift, false, true);
    auto* torsion = app.add_subcommand("torsion", "classify A[ell] over the isogeny class");
    add_common(torsion, true, true);
    auto* surface = app.add_subcommand("surface", "abelian-surface classification, all cases");
    add_common(surface, true, true);
    auto* dual = app.add_subcommand("dual", "duality pairing and point groups");
    add_common(dual, true, true);
    auto* kummer = app.add_subcommand("kummer", "zeta functions of the Kummer surface");
    kummer->add_option("--b", bspec, "single b-vector, e.g. b1=2,b2=1,b4=3");
    add_common(kummer, true, false);
    auto* tables = app.add_subcommand("tables", "regenerate the four classification tables");
    bool tables_json = false;
    tables->add_flag("--json", tables_json, "machine-readable output");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (polygon->parsed()) return cmd_polygon(a, out);
        if (lift->parsed()) return cmd_lift(a, partition, out);
        if (torsion->parsed()) return cmd_torsion(a, out);
        if (surface->parsed()) return cmd_surface(a, out);
        if (dual->parsed()) return cmd_dual(a, out);
        if (kummer->parsed()) return cmd_kummer(a, bspec, out);
        if (tables->parsed()) return cmd_tables(tables_json, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    }
}

}  // namespace atlas
