#include "json_io.hpp"

#include "errors.hpp"

namespace spinim {

namespace {

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

Vec3 vec3_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw ParseError(where + ": expected an array of 3 numbers");
    Vec3 v{};
    for (std::size_t i = 0; i < 3; ++i) v[i] = require_number(j[i], where);
    return v;
}

json vec3_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

Spinor spinor_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(where + ": expected [re, im, re, im]");
    return {cplx(require_number(j[0], where), require_number(j[1], where)),
            cplx(require_number(j[2], where), require_number(j[3], where))};
}

json spinor_to_json(const Spinor& s) {
    return json::array({s.c0.real(), s.c0.imag(), s.c1.real(), s.c1.imag()});
}

} // namespace

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON input");
    return j;
}

json mat3_to_json(const Mat3& m) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i)
        rows.push_back(json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return rows;
}

Mat3 mat3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("matrix: expected 3 rows");
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 3)
            throw ParseError("matrix: expected rows of 3 numbers");
        for (int k = 0; k < 3; ++k)
            m(i, k) = require_number(row[static_cast<std::size_t>(k)], "matrix entry");
    }
    return m;
}

json geometry_to_json(const FrameGeometry& g) {
    json j;
    j["name"] = g.name();
    json outer = json::array();
    for (int i = 0; i < 3; ++i) {
        json mid = json::array();
        for (int k = 0; k < 3; ++k) {
            json inner = json::array();
            for (int l = 0; l < 3; ++l) inner.push_back(g.christoffel(i, k, l));
            mid.push_back(inner);
        }
        outer.push_back(mid);
    }
    j["christoffel"] = outer;
    j["xi_index"] = g.xi_index();
    return j;
}

FrameGeometry geometry_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("geometry: expected an object");
    std::string name = j.value("name", std::string("unnamed"));
    if (!j.contains("christoffel"))
        throw ParseError("geometry: missing 'christoffel' array");
    const json& c = j["christoffel"];
    if (!c.is_array() || c.size() != 3)
        throw ParseError("geometry: 'christoffel' must be a 3x3x3 array");
    ChristoffelArray arr{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!c[i].is_array() || c[i].size() != 3)
            throw ParseError("geometry: 'christoffel' must be a 3x3x3 array");
        for (std::size_t k = 0; k < 3; ++k) {
            if (!c[i][k].is_array() || c[i][k].size() != 3)
                throw ParseError("geometry: 'christoffel' must be a 3x3x3 array");
            for (std::size_t l = 0; l < 3; ++l)
                arr[i][k][l] = require_number(c[i][k][l], "christoffel entry");
        }
    }
    int xi = 2;
    if (j.contains("xi_index")) {
        if (!j["xi_index"].is_number_integer())
            throw ParseError("geometry: 'xi_index' must be an integer");
        xi = j["xi_index"].get<int>();
    }
    return FrameGeometry::create(std::move(name), arr, xi);
}

json immersion_to_json(const ImmersionData& d) {
    json j;
    j["A"] = mat3_to_json(d.A());
    j["T"] = vec3_to_json(d.T());
    j["f"] = d.f();
    j["eta"] = json{{"re", d.eta().real()}, {"im", d.eta().imag()}};
    j["ambient"] = d.ambient() == Ambient::Product ? "product" : "space_form";
    j["branch"] = d.branch();
    return j;
}

ImmersionData immersion_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("immersion data: expected an object");
    if (!j.contains("A")) throw ParseError("immersion data: missing 'A'");
    const Mat3 a = mat3_from_json(j["A"]);

    Vec3 t{};
    if (j.contains("T")) t = vec3_from_json(j["T"], "immersion data 'T'");
    const double f = j.contains("f") ? require_number(j["f"], "immersion data 'f'") : 1.0;

    cplx eta{};
    if (j.contains("eta")) {
        const json& e = j["eta"];
        if (e.is_number()) {
            eta = cplx(e.get<double>(), 0.0);
        } else if (e.is_object()) {
            eta = cplx(e.value("re", 0.0), e.value("im", 0.0));
        } else {
            throw ParseError("immersion data: 'eta' must be a number or {re, im}");
        }
    }

    int branch = 1;
    if (j.contains("branch")) {
        if (!j["branch"].is_number_integer())
            throw ParseError("immersion data: 'branch' must be 1 or -1");
        branch = j["branch"].get<int>();
    }

    if (!j.contains("ambient"))
        throw ParseError("immersion data: missing 'ambient' (space_form|product)");
    const std::string ambient = j["ambient"].get<std::string>();
    if (ambient == "space_form") {
        if (max_abs(t) > 1e-12 || std::abs(f - 1.0) > 1e-12)
            throw ValidationError(
                "immersion data: space_form ambient fixes T = 0 and f = 1");
        return ImmersionData::space_form(a, eta, branch);
    }
    if (ambient == "product") return ImmersionData::product(a, t, f, eta, branch);
    throw ParseError("immersion data: 'ambient' must be space_form or product");
}

json spinor_field_to_json(const FramedSpinorField& f) {
    json j;
    j["value"] = spinor_to_json(f.value);
    json derivs = json::array();
    for (const Spinor& d : f.frame_derivs) derivs.push_back(spinor_to_json(d));
    j["frame_derivs"] = derivs;
    return j;
}

FramedSpinorField spinor_field_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("spinor field: expected an object");
    if (!j.contains("value")) throw ParseError("spinor field: missing 'value'");
    FramedSpinorField f;
    f.value = spinor_from_json(j["value"], "spinor field 'value'");
    if (j.contains("frame_derivs")) {
        const json& d = j["frame_derivs"];
        if (!d.is_array() || d.size() != 3)
            throw ParseError("spinor field: 'frame_derivs' must have 3 entries");
        for (std::size_t i = 0; i < 3; ++i)
            f.frame_derivs[i] = spinor_from_json(d[i], "spinor field 'frame_derivs'");
    }
    return f;
}

json compatibility_report_to_json(const CompatibilityReport& r, const std::string& geometry) {
    json j;
    j["schema"] = kSchemaTag;
    j["geometry"] = geometry;
    j["gauss"] = r.gauss;
    j["codazzi"] = r.codazzi;
    j["structural"] = json{
        {"nabla_T", r.nabla_t}, {"df", r.df}, {"unit_norm", r.unit_norm}};
    j["pass"] = r.pass();
    j["tolerance"] = r.tolerance;
    j["worst_indices"] = json{
        {"gauss", json::array({r.gauss_worst[0], r.gauss_worst[1], r.gauss_worst[2]})},
        {"codazzi", json::array({r.codazzi_worst[0], r.codazzi_worst[1]})}};
    return j;
}

json killing_report_to_json(const KillingCheckReport& r, const ImmersionData& d,
                            const std::string& geometry) {
    json j;
    j["schema"] = kSchemaTag;
    j["geometry"] = geometry;
    j["ambient"] = d.ambient() == Ambient::Product ? "product" : "space_form";
    j["branch"] = d.branch();
    j["eta"] = json{{"re", d.eta().real()}, {"im", d.eta().imag()}};
    j["kappa"] = d.kappa();
    j["killing"] = json{
        {"per_direction", json::array({r.killing[0], r.killing[1], r.killing[2]})},
        {"max", r.killing_max}};
    j["dirac"] = json{{"residual", r.dirac},
                      {"mean_curvature", d.mean_curvature()},
                      {"h_convention", "trace(A)/3"},
                      {"half_trace", d.half_trace()}};
    json norm_j{{"per_direction", json::array({r.norm_condition[0], r.norm_condition[1],
                                               r.norm_condition[2]})},
                {"max", r.norm_condition_max}};
    j["norm_condition"] = norm_j;
    if (r.imaginary_eta)
        j["norm_condition_unscaled"] =
            json::array({r.norm_condition_unscaled[0], r.norm_condition_unscaled[1],
                         r.norm_condition_unscaled[2]});
    j["pass"] = r.pass();
    j["tolerance"] = r.tolerance;
    return j;
}

json obstruction_to_json(const ObstructionResult& r, const std::string& geometry,
                         double tolerance) {
    json j;
    j["schema"] = kSchemaTag;
    j["geometry"] = geometry;
    j["ricci"] = mat3_to_json(r.ricci);
    j["split"] = json{{"lambda", r.split.lambda},
                      {"eta_einstein", r.split.eta},
                      {"xi_index", r.split.xi_index}};
    j["case"] = to_string(r.case_tag);
    json cands = json::array();
    for (const Mat3& c : r.candidates) cands.push_back(mat3_to_json(c));
    j["candidates"] = cands;
    j["codazzi_residuals"] = r.codazzi_residuals;
    j["verdict"] = to_string(r.verdict);
    j["diagnostic"] = r.diagnostic;
    j["tolerance"] = tolerance;
    return j;
}

} // namespace spinim
