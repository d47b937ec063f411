#include "spinim/spinim.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "catalog.hpp"
#include "conventions.hpp"
#include "errors.hpp"
#include "json_io.hpp"

using namespace spinim;

struct spinim_geometry_s {
    FrameGeometry geometry;
    std::optional<FramedSpinorField> special_spinor;
    std::map<std::string, double> parameters;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** out_error, const std::string& msg) {
    if (out_error != nullptr) *out_error = dup_string(msg);
}

spinim_status status_of(const std::exception& e) {
    if (dynamic_cast<const NotEtaEinsteinError*>(&e) != nullptr ||
        dynamic_cast<const EtaZeroError*>(&e) != nullptr)
        return SPINIM_NOT_ETA_EINSTEIN;
    if (dynamic_cast<const CalibrationError*>(&e) != nullptr)
        return SPINIM_CALIBRATION_FAILED;
    if (dynamic_cast<const Error*>(&e) != nullptr) return SPINIM_INVALID_INPUT;
    return SPINIM_INTERNAL_ERROR;
}

template <typename Fn>
spinim_status guarded(char** out_error, Fn&& fn) {
    if (out_error != nullptr) *out_error = nullptr;
    try {
        return fn();
    } catch (const std::exception& e) {
        set_error(out_error, e.what());
        return status_of(e);
    } catch (...) {
        set_error(out_error, "unknown error");
        return SPINIM_INTERNAL_ERROR;
    }
}

void write_report(char** out, const json& j) {
    if (out != nullptr) *out = dup_string(j.dump(2) + "\n");
}

} // namespace

extern "C" {

const char* spinim_version(void) { return "1.0.0"; }

const char* spinim_status_name(spinim_status status) {
    switch (status) {
        case SPINIM_OK: return "ok";
        case SPINIM_CHECK_FAILED: return "check_failed";
        case SPINIM_INVALID_INPUT: return "invalid_input";
        case SPINIM_NOT_ETA_EINSTEIN: return "not_eta_einstein";
        case SPINIM_CALIBRATION_FAILED: return "calibration_failed";
        case SPINIM_INTERNAL_ERROR: return "internal_error";
    }
    return "unknown";
}

void spinim_string_free(char* str) { std::free(str); }

spinim_status spinim_geometry_create(const char* spec_json, spinim_geometry** out_geometry,
                                     char** out_error) {
    return guarded(out_error, [&]() {
        if (spec_json == nullptr || out_geometry == nullptr)
            throw ValidationError("spinim_geometry_create: null argument");
        const json spec = parse_json(spec_json);
        auto handle = new spinim_geometry_s();
        try {
            if (spec.is_object() && spec.contains("christoffel")) {
                handle->geometry = geometry_from_json(spec);
            } else {
                if (!spec.is_object() || !spec.contains("name"))
                    throw ParseError("geometry spec: missing 'name'");
                std::map<std::string, double> params;
                for (const auto& [key, value] : spec.items())
                    if (value.is_number()) params[key] = value.get<double>();
                CatalogEntry entry = by_name(spec["name"].get<std::string>(), params);
                handle->geometry = entry.geometry;
                handle->special_spinor = entry.special_spinor;
                handle->parameters = entry.parameters;
            }
        } catch (...) {
            delete handle;
            throw;
        }
        *out_geometry = handle;
        return SPINIM_OK;
    });
}

void spinim_geometry_free(spinim_geometry* geometry) { delete geometry; }

spinim_status spinim_geometry_describe(const spinim_geometry* geometry, char** out_json,
                                       char** out_error) {
    return guarded(out_error, [&]() {
        if (geometry == nullptr) throw ValidationError("spinim_geometry_describe: null handle");
        json j = geometry_to_json(geometry->geometry);
        j["ricci"] = mat3_to_json(geometry->geometry.ricci());
        if (!geometry->parameters.empty()) {
            json p;
            for (const auto& [key, value] : geometry->parameters) p[key] = value;
            j["parameters"] = p;
        }
        write_report(out_json, j);
        return SPINIM_OK;
    });
}

spinim_status spinim_check_compatibility(const spinim_geometry* geometry,
                                         const char* data_json, double tolerance,
                                         char** out_report_json, char** out_error) {
    return guarded(out_error, [&]() {
        if (geometry == nullptr || data_json == nullptr)
            throw ValidationError("spinim_check_compatibility: null argument");
        if (!(tolerance > 0.0))
            throw ValidationError("spinim_check_compatibility: tolerance must be positive");
        const ImmersionData d = immersion_from_json(parse_json(data_json));
        const CompatibilityReport r = check_compatibility(geometry->geometry, d, tolerance);
        write_report(out_report_json,
                     compatibility_report_to_json(r, geometry->geometry.name()));
        return r.pass() ? SPINIM_OK : SPINIM_CHECK_FAILED;
    });
}

spinim_status spinim_check_killing(const spinim_geometry* geometry, const char* data_json,
                                   double tolerance, char** out_report_json,
                                   char** out_error) {
    return guarded(out_error, [&]() {
        if (geometry == nullptr || data_json == nullptr)
            throw ValidationError("spinim_check_killing: null argument");
        if (!(tolerance > 0.0))
            throw ValidationError("spinim_check_killing: tolerance must be positive");
        const json doc = parse_json(data_json);
        const ImmersionData d = immersion_from_json(doc);

        FramedSpinorField field;
        if (doc.is_object() && doc.contains("spinor")) {
            field = spinor_field_from_json(doc["spinor"]);
        } else if (geometry->special_spinor) {
            field = *geometry->special_spinor;
        } else {
            throw ValidationError(
                "killing check: no 'spinor' in the data and the geometry has no "
                "catalog spinor");
        }

        const KillingCheckReport r =
            check_killing(geometry->geometry, field, d, tolerance);
        write_report(out_report_json,
                     killing_report_to_json(r, d, geometry->geometry.name()));
        return r.pass() ? SPINIM_OK : SPINIM_CHECK_FAILED;
    });
}

spinim_status spinim_obstruct(const spinim_geometry* geometry, int xi_index, double tolerance,
                              char** out_report_json, char** out_error) {
    return guarded(out_error, [&]() {
        if (geometry == nullptr) throw ValidationError("spinim_obstruct: null handle");
        if (!(tolerance > 0.0))
            throw ValidationError("spinim_obstruct: tolerance must be positive");
        const int xi = xi_index < 0 ? geometry->geometry.xi_index() : xi_index;
        if (xi > 2) throw ValidationError("spinim_obstruct: xi_index must be 0, 1 or 2");
        const ObstructionResult r = obstruct(geometry->geometry, xi, tolerance);
        write_report(out_report_json,
                     obstruction_to_json(r, geometry->geometry.name(), tolerance));
        return SPINIM_OK;
    });
}

spinim_status spinim_catalog_list(char** out_json, char** out_error) {
    return guarded(out_error, [&]() {
        json j;
        j["schema"] = kSchemaTag;
        json entries = json::array();
        for (const EntryDescriptor& e : list_entries()) {
            json entry;
            entry["name"] = e.name;
            entry["parameters"] = e.parameters;
            entry["summary"] = e.summary;
            entries.push_back(entry);
        }
        j["entries"] = entries;
        j["fixtures"] = fixture_names();
        write_report(out_json, j);
        return SPINIM_OK;
    });
}

spinim_status spinim_fixture(const char* name, char** out_json, char** out_error) {
    return guarded(out_error, [&]() {
        if (name == nullptr) throw ValidationError("spinim_fixture: null name");
        const CatalogEntry entry = build_fixture(name);
        json j;
        j["schema"] = kSchemaTag;
        j["name"] = entry.name;
        j["geometry"] = geometry_to_json(entry.geometry);
        j["data"] = immersion_to_json(entry.fixtures.at(0).data);
        if (entry.special_spinor) j["spinor"] = spinor_field_to_json(*entry.special_spinor);
        j["expected_verdict"] = entry.fixtures.at(0).expected_verdict;
        write_report(out_json, j);
        return SPINIM_OK;
    });
}

spinim_status spinim_conventions(char** out_report_json, char** out_error) {
    return guarded(out_error, [&]() {
        verify_representation();
        const ConventionsReport r = run_conventions();
        write_report(out_report_json, conventions_to_json(r));
        if (!r.pass()) {
            set_error(out_error, "one or more convention self-checks failed");
            return SPINIM_CALIBRATION_FAILED;
        }
        return SPINIM_OK;
    });
}

} // extern "C"
