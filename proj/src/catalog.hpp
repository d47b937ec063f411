#pragma once

// Named homogeneous geometries with their special spinor fields and model
// immersion-data fixtures. The special spinor of an entry satisfies
// nabla_{e_i} phi = coeffs[i] . phi exactly, with the per-geometry
// coefficient vectors recorded in the entry.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frame_geometry.hpp"
#include "killing_dirac.hpp"
#include "spin_calculus.hpp"

namespace spinim {

struct Fixture {
    ImmersionData data;
    std::string expected_verdict;  ///< "pass" for the model immersions
};

struct CatalogEntry {
    std::string name;
    FrameGeometry geometry;
    std::optional<FramedSpinorField> special_spinor;
    std::array<Vec3, 3> special_deriv_coeffs{};  ///< nabla_i phi = coeffs[i].phi
    std::vector<Fixture> fixtures;
    std::map<std::string, double> parameters;
    bool is_space_form = false;  ///< kappa = 4 tau^2 entries (round spheres)
};

/// Riemannian fibration frame E(kappa, tau); throws for tau = 0 (products
/// are not covered by this constructor). Entries with kappa = 4 tau^2 are
/// flagged as space forms and excluded from obstruction fixtures.
CatalogEntry build_e_kappa_tau(double kappa, double tau);

/// The solvable group Sol3 with its standard left-invariant frame.
CatalogEntry build_sol3();

/// Mapping torus of a hyperbolic toral automorphism with eigenvalue alpha;
/// requires alpha > 1. The eigenvector slope of the automorphism does not
/// enter the frame constants.
CatalogEntry build_torus_bundle(double alpha);

/// Flat frame (all Christoffel coefficients zero).
CatalogEntry build_flat();

/// Regression fixtures realizing the model immersions:
///   flat_plane    - flat frame, zero data (plane in R^4)
///   hypersphere   - unit round sphere frame, A = Id, eta = 0 (S^3 in R^4)
///   product_slice - unit round sphere frame, A = 0, eta = 1/2 (slice of
///                   S^3 x R)
/// Throws ValidationError for unknown names.
CatalogEntry build_fixture(const std::string& name);

std::vector<std::string> fixture_names();

/// Resolves a built-in geometry by name with optional parameters
/// (kappa/tau for e-kappa-tau, alpha for torus-bundle).
CatalogEntry by_name(const std::string& name, const std::map<std::string, double>& params);

struct EntryDescriptor {
    std::string name;
    std::vector<std::string> parameters;
    std::string summary;
};

/// Enumerates the built-in geometry constructors and fixtures.
std::vector<EntryDescriptor> list_entries();

/// Finds a unit spinor satisfying nabla_i phi = coeffs[i].phi for all i by
/// minimizing the stacked linear system; throws CalibrationError when no
/// unit spinor satisfies it within tol.
Spinor find_special_spinor(const FrameGeometry& g, const std::array<Vec3, 3>& coeffs,
                           double tol = 1e-10);

/// Residual of the entry's defining derivative equation in direction i.
double special_spinor_residual(const CatalogEntry& entry, int i);

} // namespace spinim
