#include "compatibility.hpp"

#include <cmath>

namespace spinim {

namespace {

// (nabla_{e_i}A)(e_j) for frame-constant A:
//   sum_k A_{jk} nabla_{e_i} e_k - A(nabla_{e_i} e_j).
Vec3 covariant_a(const FrameGeometry& g, const Mat3& A, int i, int j) {
    Vec3 out{};
    for (int l = 0; l < 3; ++l) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
            s += A(j, k) * g.christoffel(i, k, l) - g.christoffel(i, j, k) * A(k, l);
        out[static_cast<std::size_t>(l)] = s;
    }
    return out;
}

} // namespace

Vec3 codazzi_tensor(const FrameGeometry& g, const Mat3& A, int i, int j) {
    return covariant_a(g, A, i, j) - covariant_a(g, A, j, i);
}

Vec3 codazzi_residual(const FrameGeometry& g, const ImmersionData& d, int i, int j) {
    const Vec3 lhs = codazzi_tensor(g, d.A(), i, j);
    const Vec3 rhs = (d.kappa() * d.f()) *
                     (d.T()[static_cast<std::size_t>(j)] * basis_vec3(i) -
                      d.T()[static_cast<std::size_t>(i)] * basis_vec3(j));
    return lhs - rhs;
}

Vec3 gauss_residual(const FrameGeometry& g, const ImmersionData& d, int i, int j, int k) {
    const Mat3& a = d.A();
    const Vec3& t = d.T();
    const double kappa = d.kappa();
    const auto ti = t[static_cast<std::size_t>(i)];
    const auto tj = t[static_cast<std::size_t>(j)];
    const auto tk = t[static_cast<std::size_t>(k)];

    Vec3 rhs = a(i, k) * a.column(j) - a(j, k) * a.column(i);
    Vec3 curv = (i == k ? 1.0 : 0.0) * basis_vec3(j) - (j == k ? 1.0 : 0.0) * basis_vec3(i);
    curv = curv - (tj * (i == k ? 1.0 : 0.0)) * t;
    curv = curv - (ti * tk) * basis_vec3(j);
    curv = curv + (ti * (j == k ? 1.0 : 0.0)) * t;
    curv = curv + (tj * tk) * basis_vec3(i);
    rhs = rhs + kappa * curv;

    return g.riemann_vector(i, j, k) - rhs;
}

CompatibilityReport check_compatibility(const FrameGeometry& g, const ImmersionData& d,
                                        double tolerance) {
    CompatibilityReport r;
    r.tolerance = tolerance;

    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double res = norm(gauss_residual(g, d, i, j, k));
                if (res > r.gauss) {
                    r.gauss = res;
                    r.gauss_worst = {i, j, k};
                }
            }

    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double res = norm(codazzi_residual(g, d, i, j));
            if (res > r.codazzi) {
                r.codazzi = res;
                r.codazzi_worst = {i, j};
            }
        }

    if (d.ambient() == Ambient::Product) {
        for (int i = 0; i < 3; ++i) {
            Vec3 nabla_t{};
            for (int l = 0; l < 3; ++l) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += d.T()[static_cast<std::size_t>(k)] * g.christoffel(i, k, l);
                nabla_t[static_cast<std::size_t>(l)] = s;
            }
            r.nabla_t = std::max(r.nabla_t, norm(nabla_t - d.f() * d.A().column(i)));
            r.df = std::max(r.df, std::abs(dot(d.A().column(i), d.T())));
        }
        r.unit_norm = std::abs(norm_sq(d.T()) + d.f() * d.f() - 1.0);
    }

    return r;
}

} // namespace spinim
