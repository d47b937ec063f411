#pragma once

// JSON (de)serialization for geometries, immersion data, spinor fields and
// the report types. All reports carry a "schema": "spinim/1" field and use
// insertion-ordered objects so identical inputs produce byte-identical
// output.

#include <string>

#include "json.hpp"

#include "compatibility.hpp"
#include "frame_geometry.hpp"
#include "killing_dirac.hpp"
#include "obstruction.hpp"
#include "spin_calculus.hpp"

namespace spinim {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "spinim/1";

/// Parses text into JSON; throws ParseError on malformed input.
json parse_json(const std::string& text);

// --- geometry file format ---------------------------------------------------
// { "name": string, "christoffel": 3x3x3 numbers, "xi_index": int optional }

json geometry_to_json(const FrameGeometry& g);
FrameGeometry geometry_from_json(const json& j);

// --- immersion data ----------------------------------------------------------
// { "A": 3x3, "T": [x,y,z], "f": number, "eta": {"re": r, "im": s} | number,
//   "ambient": "space_form"|"product", "branch": 1|-1 }
// T, f, eta and branch are optional with defaults 0, 1, 0 and 1.

json immersion_to_json(const ImmersionData& d);
ImmersionData immersion_from_json(const json& j);

// --- spinor fields -------------------------------------------------------------
// { "value": [re,im,re,im], "frame_derivs": 3x[re,im,re,im] optional }

json spinor_field_to_json(const FramedSpinorField& f);
FramedSpinorField spinor_field_from_json(const json& j);

// --- reports -------------------------------------------------------------------

json compatibility_report_to_json(const CompatibilityReport& r, const std::string& geometry);
json killing_report_to_json(const KillingCheckReport& r, const ImmersionData& d,
                            const std::string& geometry);
json obstruction_to_json(const ObstructionResult& r, const std::string& geometry,
                         double tolerance);

json mat3_to_json(const Mat3& m);
Mat3 mat3_from_json(const json& j);

} // namespace spinim
