#pragma once

// The complex Clifford algebra Cl(3) acting on two-component spinors.
//
// The representation is fixed once for the whole build: gamma_j = -i * sigma_j
// with sigma_j the standard Pauli matrices. This choice satisfies
//
//   gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij Id   (negative-definite),
//   gamma_i anti-Hermitian,
//   -gamma_1 gamma_2 gamma_3 = Id                        (volume convention),
//   gamma_i gamma_j = gamma_k for cyclic (i,j,k).
//
// verify_representation() re-checks all four properties and throws if the
// build is broken.

#include "errors.hpp"
#include "linalg.hpp"

namespace spinim {

/// Element of the 3-dimensional complex spinor space Sigma_3 ~ C^2.
struct Spinor {
    cplx c0{};
    cplx c1{};
};

inline Spinor operator+(const Spinor& a, const Spinor& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
inline Spinor operator-(const Spinor& a, const Spinor& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
inline Spinor operator*(const cplx& s, const Spinor& a) { return {s * a.c0, s * a.c1}; }
inline Spinor operator*(double s, const Spinor& a) { return {s * a.c0, s * a.c1}; }
inline Spinor operator-(const Spinor& a) { return {-a.c0, -a.c1}; }

inline Spinor apply(const Mat2c& m, const Spinor& s) {
    return {m(0, 0) * s.c0 + m(0, 1) * s.c1, m(1, 0) * s.c0 + m(1, 1) * s.c1};
}

/// Hermitian product, complex-linear in the first slot.
inline cplx hermitian(const Spinor& a, const Spinor& b) {
    return a.c0 * std::conj(b.c0) + a.c1 * std::conj(b.c1);
}

inline double norm_sq(const Spinor& a) { return std::real(hermitian(a, a)); }
inline double norm(const Spinor& a) { return std::sqrt(norm_sq(a)); }

/// Action of the frame vector e_i, i in {0,1,2}.
const Mat2c& gamma(int i);

/// Action of an arbitrary real vector, sum_i v_i gamma_i.
Mat2c gamma_of(const Vec3& v);

/// Clifford multiplication v . phi.
Spinor mul_vec(const Vec3& v, const Spinor& phi);

/// Iterated Clifford multiplication v . w . phi.
Spinor mul_bivec(const Vec3& v, const Vec3& w, const Spinor& phi);

struct RealBasisCoords {
    double r{};
    Vec3 v{};
};

/// Decompose psi = v . base + r * base with real coefficients, using the
/// Re<.,.>-orthonormal basis {base/|base|, e_i.base/|base|} of Sigma_3.
/// Throws ZeroBaseSpinor-style error when |base| < tol.
RealBasisCoords real_basis_coords(const Spinor& base, const Spinor& psi, double tol = 1e-12);

/// Re-check the four defining properties of the representation; throws
/// CalibrationError if any residual exceeds tol.
void verify_representation(double tol = 1e-12);

} // namespace spinim
