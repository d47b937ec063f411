#pragma once

// Small fixed-size kernels used everywhere: real 3-vectors, real 3x3
// matrices, complex 2x2 matrices. Everything is a plain value type.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinim {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// real 3-vectors

using Vec3 = std::array<double, 3>;

constexpr Vec3 kZeroVec3{0.0, 0.0, 0.0};

inline Vec3 basis_vec3(int i) {
    Vec3 v{0.0, 0.0, 0.0};
    v[static_cast<std::size_t>(i)] = 1.0;
    return v;
}

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm_sq(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm_sq(a)); }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline Vec3 operator*(double s, const Vec3& a) {
    return {s * a[0], s * a[1], s * a[2]};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

inline double max_abs(const Vec3& a) {
    return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

// ---------------------------------------------------------------------------
// real 3x3 matrices (row-major)

struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return m[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 zero() { return Mat3{}; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }

    static Mat3 diag(double a, double b, double c) {
        Mat3 r;
        r(0, 0) = a;
        r(1, 1) = b;
        r(2, 2) = c;
        return r;
    }

    /// Column j as a vector; for symmetric matrices this is A(e_j).
    Vec3 column(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }

    Vec3 apply(const Vec3& v) const {
        Vec3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
        return r;
    }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 r;
    for (std::size_t k = 0; k < 9; ++k) r.m[k] = s * a.m[k];
    return r;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return r;
}

inline double max_abs(const Mat3& a) {
    double r = 0.0;
    for (double x : a.m) r = std::max(r, std::abs(x));
    return r;
}

inline double asymmetry(const Mat3& a) { return max_abs(a - a.transpose()); }

inline Mat3 symmetric_part(const Mat3& a) { return 0.5 * (a + a.transpose()); }
inline Mat3 skew_part(const Mat3& a) { return 0.5 * (a - a.transpose()); }

// ---------------------------------------------------------------------------
// complex 2x2 matrices (row-major)

struct Mat2c {
    std::array<cplx, 4> m{};

    cplx& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
    cplx operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }

    static Mat2c zero() { return Mat2c{}; }

    static Mat2c identity() {
        Mat2c r;
        r(0, 0) = r(1, 1) = 1.0;
        return r;
    }

    Mat2c adjoint() const {
        Mat2c r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }
};

inline Mat2c operator+(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
    return r;
}
inline Mat2c operator-(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
    return r;
}
inline Mat2c operator*(const cplx& s, const Mat2c& a) {
    Mat2c r;
    for (std::size_t k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
    return r;
}
inline Mat2c operator*(double s, const Mat2c& a) { return cplx(s, 0.0) * a; }

inline Mat2c operator*(const Mat2c& a, const Mat2c& b) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
    return r;
}

inline Mat2c commutator(const Mat2c& a, const Mat2c& b) { return a * b - b * a; }

inline double max_abs(const Mat2c& a) {
    double r = 0.0;
    for (const cplx& x : a.m) r = std::max(r, std::abs(x));
    return r;
}

} // namespace spinim
