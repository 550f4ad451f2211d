// JSON wire formats.  Polynomials cross the boundary as grammar strings;
// rationals as canonical "p/q" strings (integers also accepted as JSON
// numbers); forms as square coefficient matrices or polynomial text.

#pragma once

#include "quadrica/curvemaps.hpp"
#include "quadrica/planemaps.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quadrica {

using json = nlohmann::json;

inline json rat_to_json(const Rat& r) { return rat_to_string(r); }

inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw validation_error("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

inline MPoly poly_from_json(const json& j,
                            const std::optional<std::vector<std::string>>& vars = std::nullopt) {
    if (j.is_number_integer()) return MPoly::constant(Rat(j.get<long long>()));
    if (j.is_string()) return parse_poly(j.get<std::string>(), vars);
    throw validation_error("expected polynomial text, got " + j.dump());
}

inline std::vector<Rat> point_from_json(const json& j) {
    if (!j.is_array()) throw validation_error("expected a coordinate array, got " + j.dump());
    std::vector<Rat> out;
    for (const auto& c : j) out.push_back(rat_from_json(c));
    return out;
}

inline json point_to_json(const std::vector<Rat>& p) {
    json out = json::array();
    for (const Rat& c : p) out.push_back(rat_to_json(c));
    return out;
}

// {"matrix": [[entries]]} with polynomial-text entries, or
// {"poly": "...", "vars": [...]} (vars required when parameters appear).
inline QuadraticForm form_from_json(const json& j) {
    if (!j.is_object()) throw validation_error("form must be an object, got " + j.dump());
    if (j.contains("matrix")) {
        const json& m = j.at("matrix");
        if (!m.is_array() || m.empty())
            throw validation_error("form matrix must be a nonempty array of rows");
        PMat gram;
        for (const auto& row : m) {
            std::vector<MPoly> r;
            for (const auto& e : row) {
                if (e.is_number_integer())
                    r.push_back(MPoly::constant(Rat(e.get<long long>())));
                else if (e.is_string())
                    r.push_back(parse_poly(e.get<std::string>()));
                else
                    throw validation_error("matrix entries must be numbers or polynomial text");
            }
            gram.push_back(std::move(r));
        }
        return QuadraticForm(gram);
    }
    if (j.contains("poly")) {
        MPoly p = poly_from_json(j.at("poly"));
        if (j.contains("vars")) {
            std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
            return QuadraticForm::from_polynomial(p, vars);
        }
        return QuadraticForm::from_polynomial(p);
    }
    throw validation_error("form needs either \"matrix\" or \"poly\"");
}

inline json form_to_json(const QuadraticForm& q) {
    json rows = json::array();
    for (const auto& row : q.gram()) {
        json r = json::array();
        for (const auto& e : row) {
            if (e.is_constant() && den(e.constant_value()) == 1 &&
                int_abs(num(e.constant_value())) < (Int(1) << 50))
                r.push_back((long long)num(e.constant_value()));
            else
                r.push_back(e.str());
        }
        rows.push_back(std::move(r));
    }
    return json{{"matrix", rows}};
}

inline std::vector<MPoly> coords_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw validation_error("map coordinates must be a nonempty array of polynomial text");
    std::vector<MPoly> out;
    for (const auto& c : j) out.push_back(poly_from_json(c));
    return out;
}

inline json coords_to_json(const std::vector<MPoly>& coords) {
    json out = json::array();
    for (const auto& c : coords) out.push_back(c.str());
    return out;
}

inline QuadraticMap plane_map_from_json(const json& coords,
                                        const std::optional<json>& target = std::nullopt) {
    QuadraticMap m;
    m.coords = coords_from_json(coords);
    if (target) m.target = form_from_json(*target);
    m.validate();
    return m;
}

inline json plane_map_to_json(const QuadraticMap& m) {
    json out{{"coords", coords_to_json(m.coords)}};
    if (m.target) out["target"] = form_to_json(*m.target);
    return out;
}

inline CurveMap curve_map_from_json(const json& coords,
                                    const std::optional<json>& target = std::nullopt) {
    CurveMap m;
    m.coords = coords_from_json(coords);
    if (target) m.target = form_from_json(*target);
    m.validate();
    return m;
}

inline json curve_map_to_json(const CurveMap& m) {
    json out{{"coords", coords_to_json(m.coords)}, {"degree", m.degree()}};
    if (m.target) out["target"] = form_to_json(*m.target);
    return out;
}

// Strict payload validation: unknown fields are rejected.
inline void check_fields(const json& payload, const std::vector<std::string>& allowed,
                         const std::vector<std::string>& required = {}) {
    if (!payload.is_object()) throw validation_error("payload must be a JSON object");
    for (const auto& [key, value] : payload.items()) {
        bool ok = false;
        for (const auto& a : allowed) ok = ok || key == a;
        if (!ok) throw validation_error("unknown payload field \"" + key + "\"");
    }
    for (const auto& r : required)
        if (!payload.contains(r)) throw validation_error("missing payload field \"" + r + "\"");
}

}  // namespace quadrica
