#ifndef SPINIM_H
#define SPINIM_H

/* C API of the spinim shared library.
 *
 * spinim verifies spin-geometric immersion data on framed 3-manifolds:
 * generalized Killing / Dirac spinor equations, Gauss-Codazzi compatibility
 * systems for hypersurfaces of 4-dimensional space forms and products
 * M^3(kappa) x R, shape-operator reconstruction from Dirac solutions, and
 * non-immersibility verdicts for homogeneous 3-geometries.
 *
 * Conventions:
 *   - All functions returning spinim_status write a malloc'ed UTF-8 string
 *     into *out_error on failure (may be NULL if no detail is available);
 *     release it with spinim_string_free(). On success *out_error is NULL.
 *   - Report strings are JSON documents with a "schema": "spinim/1" field;
 *     identical inputs produce byte-identical reports.
 *   - Frame indices are 0-based (e1 = 0, e2 = 1, e3 = 2).
 */

#include <stddef.h>

#if defined(_WIN32)
#define SPINIM_API __declspec(dllexport)
#else
#define SPINIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spinim_status {
    SPINIM_OK = 0,
    /* well-formed input, but residuals exceed the tolerance */
    SPINIM_CHECK_FAILED = 1,
    /* malformed JSON, invariant violations, unknown names */
    SPINIM_INVALID_INPUT = 2,
    /* the Ricci tensor is not eta-Einstein about xi, or eta vanishes */
    SPINIM_NOT_ETA_EINSTEIN = 3,
    /* a built-in convention self-check failed; the build is broken */
    SPINIM_CALIBRATION_FAILED = 4,
    SPINIM_INTERNAL_ERROR = 5
} spinim_status;

typedef struct spinim_geometry_s spinim_geometry;

SPINIM_API const char* spinim_version(void);
SPINIM_API const char* spinim_status_name(spinim_status status);

/* Releases strings returned through char** output parameters. */
SPINIM_API void spinim_string_free(char* str);

/* Creates a geometry handle from a JSON spec. Two forms are accepted:
 *   {"name": "sol3"}                                  built-in by name, with
 *   {"name": "e-kappa-tau", "kappa": 1, "tau": 1}     parameters as needed
 *   {"name": "torus-bundle", "alpha": 2}
 *   {"name": "flat"}
 *   {"name": ..., "christoffel": [[[...]]], "xi_index": 2}   explicit frame
 * The explicit form rejects arrays violating metric compatibility. */
SPINIM_API spinim_status spinim_geometry_create(const char* spec_json,
                                                spinim_geometry** out_geometry,
                                                char** out_error);

SPINIM_API void spinim_geometry_free(spinim_geometry* geometry);

/* Writes the geometry's explicit JSON form (name, christoffel, xi_index,
 * ricci, parameters). */
SPINIM_API spinim_status spinim_geometry_describe(const spinim_geometry* geometry,
                                                  char** out_json, char** out_error);

/* Gauss / Codazzi / structural residuals of the immersion data against the
 * geometry. Returns SPINIM_OK when all residuals pass at the tolerance,
 * SPINIM_CHECK_FAILED otherwise; the report is written in both cases. */
SPINIM_API spinim_status spinim_check_compatibility(const spinim_geometry* geometry,
                                                    const char* data_json, double tolerance,
                                                    char** out_report_json, char** out_error);

/* Generalized Killing / Dirac / norm-condition residuals. The data JSON may
 * carry a "spinor" member; otherwise the geometry's catalog spinor is used.
 * Status semantics as for spinim_check_compatibility. */
SPINIM_API spinim_status spinim_check_killing(const spinim_geometry* geometry,
                                              const char* data_json, double tolerance,
                                              char** out_report_json, char** out_error);

/* Non-immersibility pipeline for a flat 4-dimensional target. xi_index < 0
 * selects the geometry's distinguished direction. Returns SPINIM_OK with the
 * verdict ("non_immersible" or "inconclusive") in the report, or
 * SPINIM_NOT_ETA_EINSTEIN when the split does not apply. */
SPINIM_API spinim_status spinim_obstruct(const spinim_geometry* geometry, int xi_index,
                                         double tolerance, char** out_report_json,
                                         char** out_error);

/* Lists built-in geometries and fixtures. */
SPINIM_API spinim_status spinim_catalog_list(char** out_json, char** out_error);

/* Returns a fixture bundle {"name", "geometry", "data", "spinor",
 * "expected_verdict"} for "flat_plane", "hypersphere" or "product_slice". */
SPINIM_API spinim_status spinim_fixture(const char* name, char** out_json, char** out_error);

/* Runs the convention self-checks (gamma representation, curvature sign,
 * spin-connection sign). Returns SPINIM_OK when everything passes, else
 * SPINIM_CALIBRATION_FAILED with the report still written. */
SPINIM_API spinim_status spinim_conventions(char** out_report_json, char** out_error);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPINIM_H */
