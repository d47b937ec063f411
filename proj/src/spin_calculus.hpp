#pragma once

// Spin connection, Dirac operator and spinorial curvature on a framed
// geometry. The connection term in direction e_i is
//
//   Omega_i = 1/2 sum_{j<k} Gamma[i][j][k] gamma_j gamma_k,
//
// so the covariant derivative of a framed spinor field is
// e_i(phi) + Omega_i phi. The sign is pinned by the catalog special-spinor
// calibration (conventions.cpp).

#include <array>

#include "clifford.hpp"
#include "frame_geometry.hpp"

namespace spinim {

/// Pointwise spinor data in a moving frame: the value and the three frame
/// directional derivatives e_i(phi) of its component functions.
struct FramedSpinorField {
    Spinor value{};
    std::array<Spinor, 3> frame_derivs{};

    static FramedSpinorField constant(const Spinor& value) { return {value, {}}; }

    bool constant_components(double tol = 0.0) const {
        for (const Spinor& d : frame_derivs)
            if (norm(d) > tol) return false;
        return true;
    }
};

/// The connection matrix Omega_i; anti-Hermitian.
Mat2c spin_connection_matrix(const FrameGeometry& g, int i);

/// nabla_{e_i} phi = e_i(phi) + Omega_i phi.
Spinor covariant_spinor_derivative(const FrameGeometry& g, const FramedSpinorField& f, int i);

/// Dirac operator D phi = sum_i e_i . nabla_{e_i} phi.
Spinor dirac(const FrameGeometry& g, const FramedSpinorField& f);

/// Curvature of the spin connection on a constant-component field:
/// ([Omega_i, Omega_j] - sum_k [e_i,e_j]_k Omega_k) phi.
Spinor spinorial_curvature(const FrameGeometry& g, int i, int j, const Spinor& phi);

/// e_i(|phi|^2) computed from the stored frame derivatives.
double norm_sq_frame_derivative(const FramedSpinorField& f, int i);

} // namespace spinim
