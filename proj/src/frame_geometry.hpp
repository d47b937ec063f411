#pragma once

// Homogeneous orthonormal frames: a 3-manifold presented through constant
// Christoffel coefficients Gamma[i][j][k] = <nabla_{e_i} e_j, e_k>.
//
// Sign conventions (pinned by the catalog Ricci calibration, see
// conventions.cpp):
//   R(e_i,e_j)e_k has components riemann(i,j,k,l) such that the unit round
//   sphere frame has riemann(i,j,i,j) = +1 for i != j, and
//   ricci(j,k) = sum_i riemann(j,i,k,i).

#include <array>
#include <string>

#include "linalg.hpp"

namespace spinim {

using ChristoffelArray = std::array<std::array<std::array<double, 3>, 3>, 3>;

class FrameGeometry {
public:
    /// Flat frame with an empty name; use create() for anything else.
    FrameGeometry() = default;

    /// Validates metric compatibility Gamma[i][j][k] = -Gamma[i][k][j];
    /// throws ValidationError on violation. xi_index names the distinguished
    /// unit direction (0-based frame index, e3 by default).
    static FrameGeometry create(std::string name, const ChristoffelArray& christoffel,
                                int xi_index = 2, double tol = 1e-12);

    const std::string& name() const { return name_; }
    int xi_index() const { return xi_index_; }

    double christoffel(int i, int j, int k) const {
        return gamma_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                     [static_cast<std::size_t>(k)];
    }
    const ChristoffelArray& christoffel_array() const { return gamma_; }

    /// [e_i, e_j] in frame components, from the torsion-free identity.
    Vec3 lie_bracket(int i, int j) const;

    /// <R(e_i,e_j)e_k, e_l> for the constant-coefficient connection.
    double riemann(int i, int j, int k, int l) const;

    /// R(e_i,e_j)e_k as a frame vector.
    Vec3 riemann_vector(int i, int j, int k) const;

    /// Ricci tensor Ric(e_i, e_j); symmetric for realizable frame data.
    Mat3 ricci() const;

    /// Max norm of the bracket Jacobiator; zero exactly when the frame data
    /// is realizable as a homogeneous space.
    double jacobi_residual() const;

private:
    std::string name_;
    ChristoffelArray gamma_{};
    int xi_index_ = 2;
};

/// Decomposition Ric = lambda * Id + eta * (xi (x) xi).
struct RicciSplit {
    double lambda{};
    double eta{};
    int xi_index{};
};

/// Splits a symmetric Ricci matrix about the frame direction xi_index.
/// Throws NotEtaEinsteinError when the matrix is not of the split form
/// within tol (off-diagonal entries, or anisotropy on the xi-orthogonal
/// plane).
RicciSplit eta_einstein_split(const Mat3& ric, int xi_index, double tol = 1e-10);

/// Rebuilds lambda * Id + eta * (xi (x) xi) from a split.
Mat3 reconstruct_ricci(const RicciSplit& split);

} // namespace spinim
