#pragma once

// Gauss, Codazzi-Mainardi and structural compatibility residuals for an
// immersion candidate (g, A, T, f, kappa). All candidate fields are constant
// in the moving frame, so derivative-of-entries terms vanish and the df
// equation reduces to <A(e_i), T> = 0.

#include <array>

#include "frame_geometry.hpp"
#include "killing_dirac.hpp"
#include "linalg.hpp"

namespace spinim {

/// d^nabla A (e_i, e_j) = (nabla_{e_i}A)(e_j) - (nabla_{e_j}A)(e_i) for a
/// frame-constant symmetric tensor; antisymmetric in (i, j).
Vec3 codazzi_tensor(const FrameGeometry& g, const Mat3& A, int i, int j);

/// d^nabla A (e_i, e_j) - kappa f (<e_j,T> e_i - <e_i,T> e_j).
Vec3 codazzi_residual(const FrameGeometry& g, const ImmersionData& d, int i, int j);

/// R(e_i,e_j)e_k minus the Gauss right-hand side
///   <A(e_i),e_k>A(e_j) - <A(e_j),e_k>A(e_i)
///   + kappa(<e_i,e_k>e_j - <e_j,e_k>e_i - T-terms).
/// With (T,f) = (0,1) the T-terms vanish and this is the classical
/// space-form Gauss residual.
Vec3 gauss_residual(const FrameGeometry& g, const ImmersionData& d, int i, int j, int k);

struct CompatibilityReport {
    double gauss = 0.0;
    double codazzi = 0.0;
    double nabla_t = 0.0;
    double df = 0.0;
    double unit_norm = 0.0;
    std::array<int, 3> gauss_worst{};
    std::array<int, 2> codazzi_worst{};
    double tolerance = 1e-9;

    bool gauss_pass() const { return gauss <= tolerance; }
    bool codazzi_pass() const { return codazzi <= tolerance; }
    bool structural_pass() const {
        return nabla_t <= tolerance && df <= tolerance && unit_norm <= tolerance;
    }
    bool pass() const { return gauss_pass() && codazzi_pass() && structural_pass(); }
};

/// Aggregates max residuals over all index tuples: Gauss over (i,j,k),
/// Codazzi over (i,j), nabla_{e_i}T - f A(e_i), <A(e_i),T> and
/// |T|^2 + f^2 - 1. The structural residuals apply to the product ambient
/// only; for space forms they are reported as zero.
CompatibilityReport check_compatibility(const FrameGeometry& g, const ImmersionData& d,
                                        double tolerance = 1e-9);

} // namespace spinim
