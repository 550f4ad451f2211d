// Command dispatcher shared by the command-line tool and the tests.  Every
// verb is a thin adapter around one library call; all output is a pure
// function of the payload plus the recorded seed.
//
// Exit codes: 0 success, 2 validation error, 3 mathematical error,
// 4 internal defect.

#pragma once

#include "quadrica/og.hpp"
#include "quadrica/serialize.hpp"
#include "quadrica/veronese.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace quadrica {

struct CliResult {
    json output;
    int exit_code = 0;
};

namespace cli_detail {

inline json signature_json(const Signature& s) {
    return json::array({s.positives, s.negatives});
}

inline std::string kernel_polynomial(const std::vector<Rat>& diag) {
    MPoly acc;
    for (size_t i = 0; i < diag.size(); ++i) {
        MPoly xi = MPoly::variable("x" + std::to_string(i + 1));
        acc = acc + diag[i] * xi * xi;
    }
    return acc.str();
}

inline long height_cap_of(const json& payload, long fallback = 64) {
    if (!payload.contains("height_cap")) return fallback;
    long cap = payload.at("height_cap").get<long>();
    if (cap < 1) throw validation_error("height_cap must be positive");
    return cap;
}

inline json run_qform_analyze(const json& p) {
    check_fields(p, {"form", "height_cap"}, {"form"});
    QuadraticForm q = form_from_json(p.at("form"));
    if (!q.is_numeric()) throw validation_error("qform:analyze requires a numeric form");
    json out;
    out["dim"] = q.dim();
    size_t rank = rank_of(q);
    out["rank"] = rank;
    out["disc"] = discriminant(q).representative.str();
    out["signature"] = signature_json(signature(q));
    if (rank < q.dim()) {
        out["radical_dim"] = q.dim() - rank;
        return out;
    }
    auto w = witt_decompose(q, height_cap_of(p));
    out["witt_index"] = w.witt_index;
    out["kernel"] = kernel_polynomial(w.kernel_diagonal);
    return out;
}

inline json run_qform_witt(const json& p) {
    check_fields(p, {"form", "height_cap"}, {"form"});
    QuadraticForm q = form_from_json(p.at("form"));
    auto w = witt_decompose(q, height_cap_of(p));
    json transform = json::array();
    for (const auto& row : w.transform) transform.push_back(point_to_json(row));
    json kernel = json::array();
    for (const Rat& d : w.kernel_diagonal) kernel.push_back(rat_to_json(d));
    bool block_ok =
        qmat_congruence(q.numeric_gram(), w.transform) == witt_block_gram(w, q.dim());
    return json{{"witt_index", w.witt_index},
                {"kernel_diagonal", kernel},
                {"transform", transform},
                {"block_verified", block_ok}};
}

inline json run_qform_isotropic(const json& p) {
    check_fields(p, {"form", "height_cap", "witness"}, {"form"});
    QuadraticForm q = form_from_json(p.at("form"));
    bool want_witness = p.value("witness", true);
    bool iso = is_isotropic(q);
    json out{{"isotropic", iso}};
    if (iso && want_witness) {
        auto v = find_isotropic_vector(q, height_cap_of(p));
        out["witness"] = point_to_json(v);
        out["witness_value"] = rat_to_json(q.apply_numeric(v));
    }
    return out;
}

inline json run_qform_equivalent(const json& p) {
    check_fields(p, {"form1", "form2"}, {"form1", "form2"});
    QuadraticForm q1 = form_from_json(p.at("form1"));
    QuadraticForm q2 = form_from_json(p.at("form2"));
    return json{{"equivalent", equivalent_over_Q(q1, q2)}};
}

inline json run_qform_og(const json& p) {
    check_fields(p, {"op", "m", "n", "form", "a", "r", "s"}, {"op"});
    std::string op = p.at("op").get<std::string>();
    if (op == "dimension") {
        check_fields(p, {"op", "m", "n"}, {"m", "n"});
        return json{{"dimension", og_dimension(p.at("m").get<long>(), p.at("n").get<long>())}};
    }
    if (op == "component_class") {
        check_fields(p, {"op", "form"}, {"form"});
        auto cls = mid_og_component_class(form_from_json(p.at("form")));
        return json{{"class", cls.representative.str()}, {"reducible", cls.is_one()}};
    }
    if (op == "conic_pair") {
        check_fields(p, {"op", "a"}, {"a"});
        auto arr = p.at("a");
        if (!arr.is_array() || arr.size() != 5)
            throw validation_error("conic_pair needs 5 diagonal coefficients");
        std::array<Rat, 5> a;
        for (size_t i = 0; i < 5; ++i) a[i] = rat_from_json(arr[i]);
        auto [c, cp] = og13_conic_pair(a);
        return json{{"conic", form_to_json(c)},
                    {"conic_prime", form_to_json(cp)},
                    {"conic_isotropic", is_isotropic(c)},
                    {"conic_prime_isotropic", is_isotropic(cp)}};
    }
    if (op == "family_count") {
        check_fields(p, {"op", "r", "s"}, {"r", "s"});
        return json{{"count", real_veronese_family_count(p.at("r").get<int>(), p.at("s").get<int>())}};
    }
    if (op == "g_of_q3") {
        check_fields(p, {"op", "form"}, {"form"});
        QuadraticForm g = g_of_q3(form_from_json(p.at("form")));
        return json{{"form", form_to_json(g)}, {"isotropic", is_isotropic(g)}};
    }
    throw validation_error("unknown og op \"" + op + "\"");
}

inline json run_map_construct(const json& p) {
    check_fields(p, {"family", "l1", "l2", "l3", "l4", "alpha", "a", "b", "c", "q", "q1", "q6",
                     "h3", "cubic", "form", "p", "L", "variant"},
                 {"family"});
    std::string family = p.at("family").get<std::string>();
    auto poly_arg = [&](const char* key) { return poly_from_json(p.at(key)); };

    QuadraticMap m;
    if (family == "conic") {
        check_fields(p, {"family", "l1", "l2", "alpha"}, {"l1", "l2", "alpha"});
        m = construct_conic_map(poly_arg("l1"), poly_arg("l2"), poly_arg("alpha"));
    } else if (family == "surface") {
        check_fields(p, {"family", "l1", "l2", "l3", "l4", "a"}, {"l1", "l2", "l3", "l4", "a"});
        m = construct_surface_map(poly_arg("l1"), poly_arg("l2"), poly_arg("l3"), poly_arg("l4"),
                                  poly_arg("a"));
    } else if (family == "unprojection") {
        check_fields(p, {"family", "form", "p", "L"}, {"form", "p", "L"});
        m = construct_unprojection(form_from_json(p.at("form")), coords_from_json(p.at("p")),
                                   coords_from_json(p.at("L")));
    } else if (family == "quadric_cone") {
        check_fields(p, {"family", "l1", "l2", "alpha", "h3"}, {"l1", "l2", "alpha", "h3"});
        m = construct_quadric_cone_map(poly_arg("l1"), poly_arg("l2"), poly_arg("alpha"),
                                       poly_arg("h3"));
    } else if (family == "quadruple_plane") {
        check_fields(p, {"family", "cubic"}, {"cubic"});
        m = construct_quadruple_plane(poly_arg("cubic"));
    } else if (family == "projected_veronese") {
        check_fields(p, {"family", "a", "q"}, {"a", "q"});
        m = construct_projected_veronese(poly_arg("a"), poly_arg("q"));
    } else if (family == "veronese_q4") {
        check_fields(p, {"family", "a", "b"}, {"a", "b"});
        m = construct_veronese_q4(poly_arg("a"), poly_arg("b"));
    } else if (family == "veronese_q5") {
        check_fields(p, {"family", "a", "b", "c"}, {"a", "b", "c"});
        m = construct_veronese_q5(poly_arg("a"), poly_arg("b"), poly_arg("c"));
    } else if (family == "sphere") {
        check_fields(p, {"family", "variant"}, {"variant"});
        m = construct_sphere_veronese(p.at("variant").get<int>());
    } else if (family == "deformation_qp") {
        check_fields(p, {"family"});
        m = construct_deformation_qp();
    } else if (family == "deformation_pv") {
        check_fields(p, {"family", "a", "q1", "q6"}, {"a", "q1", "q6"});
        m = construct_deformation_pv(rat_from_json(p.at("a")), poly_arg("q1"), poly_arg("q6"));
    } else {
        throw validation_error("unknown construction family \"" + family + "\"");
    }
    json out = plane_map_to_json(m);
    out["verified"] = verify_on_quadric(*m.target, m);
    return out;
}

inline json run_map_verify(const json& p) {
    check_fields(p, {"form", "map"}, {"form", "map"});
    QuadraticForm q = form_from_json(p.at("form"));
    QuadraticMap m = plane_map_from_json(p.at("map"));
    return json{{"verified", verify_on_quadric(q, m)}};
}

inline json run_map_classify(const json& p, std::uint64_t seed) {
    check_fields(p, {"map", "seed"}, {"map"});
    std::uint64_t use_seed = p.contains("seed") ? p.at("seed").get<std::uint64_t>() : seed;
    QuadraticMap m = plane_map_from_json(p.at("map"));
    MapClass c = classify(m, use_seed);
    json out{{"label", c.label}, {"span_dim", c.span_dim}, {"seed", c.seed}};
    if (c.center_rank) out["center_rank"] = *c.center_rank;
    if (c.kernel_rank) out["kernel_rank"] = *c.kernel_rank;
    return out;
}

inline json run_curve_reduce(const json& p) {
    check_fields(p, {"form", "map"}, {"form", "map"});
    QuadraticForm q = form_from_json(p.at("form"));
    CurveMap m = curve_map_from_json(p.at("map"));
    CurveMap r = degree_reduce(q, m);
    return curve_map_to_json(r);
}

inline json run_curve_conic3(const json& p) {
    check_fields(p, {"form", "points"}, {"form", "points"});
    QuadraticForm q = form_from_json(p.at("form"));
    const json& pts = p.at("points");
    if (!pts.is_array() || pts.size() != 3)
        throw validation_error("curve:conic3 needs exactly 3 points");
    CurveMap c = conic_through_three_points(q, point_from_json(pts[0]), point_from_json(pts[1]),
                                            point_from_json(pts[2]));
    return curve_map_to_json(c);
}

inline json run_curve_sympower(const json& p) {
    check_fields(p, {"poly", "x_vars", "t_var", "points"}, {"poly", "points"});
    MPoly q = poly_from_json(p.at("poly"));
    std::string t_var = p.value("t_var", std::string("t"));
    std::vector<std::string> x_vars;
    if (p.contains("x_vars")) {
        x_vars = p.at("x_vars").get<std::vector<std::string>>();
    } else {
        for (const auto& v : q.support_vars())
            if (v != t_var) x_vars.push_back(v);
    }
    std::vector<std::vector<Rat>> points;
    for (const auto& pt : p.at("points")) points.push_back(point_from_json(pt));
    auto res = sym_power_residual(q, x_vars, t_var, points);
    json interp = json::array();
    for (const auto& g : res.interpolant) interp.push_back(g.str());
    return json{{"interpolant", interp},
                {"residual", res.residual.str()},
                {"anchors", json::array({point_to_json(res.anchor0), point_to_json(res.anchor1)})}};
}

inline json run_veronese_check(const json& p) {
    check_fields(p, {"check", "a", "b", "c", "point", "form", "map", "p"}, {"check"});
    std::string check = p.at("check").get<std::string>();
    auto report = [](const std::string& name, bool ok, const std::string& witness = "") {
        json r{{"check_name", name}, {"status", ok ? "pass" : "fail"}};
        if (!witness.empty()) r["witness"] = witness;
        return r;
    };

    if (check == "sigma") {
        check_fields(p, {"check"});
        std::vector<MPoly> xs;
        for (const auto& n : p5_coordinate_names()) xs.push_back(MPoly::variable(n));
        SymMatrix3 m = SymMatrix3::from_p5(xs);
        bool ok = sigma(sigma(m)) == m.scaled(m.det());
        return json{{"reports", json::array({report("sigma_involution", ok)})}};
    }
    if (check == "linkage") {
        check_fields(p, {"check"});
        json reports = json::array();
        for (const auto& r : linkage_check())
            reports.push_back(report(r.check_name, r.status, r.witness));
        return json{{"reports", reports}};
    }
    if (check == "stratum") {
        check_fields(p, {"check", "point"}, {"point"});
        auto pt = point_from_json(p.at("point"));
        if (pt.size() != 6) throw validation_error("stratum point needs 6 coordinates");
        return json{{"rank", veronese_rank_stratum(SymMatrix3::from_p5_numeric(pt))}};
    }
    if (check == "quadric_from_conic") {
        check_fields(p, {"check", "a", "b", "c"}, {"a", "b", "c"});
        QuadraticForm q = quadric_from_conic(poly_from_json(p.at("a")), poly_from_json(p.at("b")),
                                             poly_from_json(p.at("c")));
        bool vanishes = q.apply(standard_veronese()).is_zero();
        json out{{"form", form_to_json(q)},
                 {"reports", json::array({report("contains_standard_veronese", vanishes)})}};
        return out;
    }
    if (check == "conic_product") {
        check_fields(p, {"check", "a", "b", "c"}, {"a", "b", "c"});
        MPoly a = poly_from_json(p.at("a")), b = poly_from_json(p.at("b")),
              c = poly_from_json(p.at("c"));
        auto cp = conic_product_iso(a, b, c);
        MPoly qcx = a * parse_poly("x0^2") + b * parse_poly("x1^2") + c * parse_poly("x2^2");
        MPoly qcy = a * parse_poly("y0^2") + b * parse_poly("y1^2") + c * parse_poly("y2^2");
        auto [qs, rem] = cp.target.apply(cp.psi).divmod({qcx, qcy});
        json reports = json::array();
        reports.push_back(report("pullback_in_conic_ideal", rem.is_zero(), rem.str()));
        std::map<std::string, MPoly> z_to_psi;
        for (int i = 0; i < 4; ++i) z_to_psi["z" + std::to_string(i)] = cp.psi[i];
        bool inv_ok = true;
        std::string witness;
        for (int side = 0; side < 2; ++side) {
            const auto& inv = side == 0 ? cp.inverse_x : cp.inverse_y;
            const char* base = side == 0 ? "x" : "y";
            std::vector<MPoly> e;
            for (const auto& f : inv) e.push_back(f.substitute(z_to_psi));
            for (int i = 0; i < 3 && inv_ok; ++i)
                for (int j = i + 1; j < 3 && inv_ok; ++j) {
                    MPoly cross = e[i] * MPoly::variable(base + std::to_string(j)) -
                                  e[j] * MPoly::variable(base + std::to_string(i));
                    auto [qq, rr] = cross.divmod({qcx, qcy});
                    if (!rr.is_zero()) {
                        inv_ok = false;
                        witness = rr.str();
                    }
                }
        }
        reports.push_back(report("inverse_composition", inv_ok, witness));
        std::map<std::string, MPoly> diag;
        for (int i = 0; i < 3; ++i)
            diag["y" + std::to_string(i)] = MPoly::variable("x" + std::to_string(i));
        bool dz = cp.psi[0].substitute(diag).is_zero() && cp.psi[1].substitute(diag).is_zero() &&
                  cp.psi[2].substitute(diag).is_zero();
        reports.push_back(report("diagonal_vanishes", dz));
        return json{{"psi", coords_to_json(cp.psi)},
                    {"target", form_to_json(cp.target)},
                    {"reports", reports}};
    }
    if (check == "double_line") {
        check_fields(p, {"check", "a", "b"}, {"a", "b"});
        MPoly locus = double_line_locus(rat_from_json(p.at("a")), rat_from_json(p.at("b")));
        return json{{"locus", locus.str()},
                    {"reports", json::array({report("locus_extracted", true)})}};
    }
    if (check == "tangent_conic") {
        check_fields(p, {"check", "a", "b", "p"}, {"a", "b", "p"});
        Rat a = rat_from_json(p.at("a")), b = rat_from_json(p.at("b"));
        QuadraticMap phi = construct_veronese_q4(MPoly::constant(a), MPoly::constant(b));
        auto pt = point_from_json(p.at("p"));
        MPoly conic = tangent_pullback_conic(*phi.target, phi, pt);
        int rank = int(qmat_rank(
            QuadraticForm::from_polynomial(conic, plane_vars()).numeric_gram()));
        return json{{"conic", conic.str()}, {"rank", rank}};
    }
    throw validation_error("unknown veronese check \"" + check + "\"");
}

inline json run_sphere_stereo(const json& p) {
    check_fields(p, {"n"}, {"n"});
    int n = p.at("n").get<int>();
    Stereographic s = stereographic(n);
    auto fun_to_json = [](const RatFun& f) {
        return json{{"numerator", f.numerator.str()}, {"denominator", f.denominator.str()}};
    };
    json fwd = json::array(), inv = json::array();
    for (const auto& f : s.forward) fwd.push_back(fun_to_json(f));
    for (const auto& f : s.inverse) inv.push_back(fun_to_json(f));

    // exact identity checks with cleared denominators
    MPoly sphere;
    for (int i = 1; i <= n; ++i) {
        MPoly xi = MPoly::variable("x" + std::to_string(i));
        sphere = sphere + xi * xi;
    }
    MPoly z = MPoly::variable("z");
    sphere = sphere + z * z - MPoly::constant(1);
    // q(pi^{-1}): substitute x_i -> num_i/den, z -> num_z/den, multiply by den^2
    MPoly den = s.inverse[0].denominator;
    MPoly num_check;
    for (int i = 1; i <= n; ++i)
        num_check = num_check + s.inverse[i - 1].numerator * s.inverse[i - 1].numerator;
    num_check = num_check + s.inverse[n].numerator * s.inverse[n].numerator - den * den;
    bool on_sphere = num_check.is_zero();

    // pi(pi^{-1}(x)) = x: component i is num_i / (den + num_z), so the
    // identity numerator is num_i - x_i (den + num_z)
    bool round_trip = true;
    for (int i = 1; i <= n && round_trip; ++i) {
        MPoly xi = MPoly::variable("x" + std::to_string(i));
        MPoly lhs = s.inverse[i - 1].numerator - xi * (den + s.inverse[n].numerator);
        round_trip = lhs.is_zero();
    }
    return json{{"forward", fwd},
                {"inverse", inv},
                {"identities",
                 json{{"inverse_on_sphere", on_sphere}, {"round_trip", round_trip}}}};
}

}  // namespace cli_detail

inline CliResult run_command(const std::string& verb, const json& payload,
                             std::uint64_t seed = kDefaultClassifySeed) {
    using namespace cli_detail;
    try {
        json out;
        if (verb == "qform:analyze") out = run_qform_analyze(payload);
        else if (verb == "qform:witt") out = run_qform_witt(payload);
        else if (verb == "qform:isotropic") out = run_qform_isotropic(payload);
        else if (verb == "qform:equivalent") out = run_qform_equivalent(payload);
        else if (verb == "qform:og") out = run_qform_og(payload);
        else if (verb == "map:construct") out = run_map_construct(payload);
        else if (verb == "map:verify") out = run_map_verify(payload);
        else if (verb == "map:classify") out = run_map_classify(payload, seed);
        else if (verb == "curve:reduce") out = run_curve_reduce(payload);
        else if (verb == "curve:conic3") out = run_curve_conic3(payload);
        else if (verb == "curve:sympower") out = run_curve_sympower(payload);
        else if (verb == "veronese:check") out = run_veronese_check(payload);
        else if (verb == "sphere:stereo") out = run_sphere_stereo(payload);
        else
            return {json{{"error", "unknown command \"" + verb + "\""}}, 2};
        return {out, 0};
    } catch (const validation_error& e) {
        return {json{{"error", e.what()}}, 2};
    } catch (const math_error& e) {
        return {json{{"error", e.what()}, {"code", e.code()}}, 3};
    } catch (const json::exception& e) {
        return {json{{"error", std::string("malformed payload: ") + e.what()}}, 2};
    } catch (const std::exception& e) {
        return {json{{"error", std::string("internal: ") + e.what()}}, 4};
    }
}

}  // namespace quadrica
