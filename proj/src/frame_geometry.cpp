#include "frame_geometry.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace spinim {

FrameGeometry FrameGeometry::create(std::string name, const ChristoffelArray& christoffel,
                                    int xi_index, double tol) {
    if (xi_index < 0 || xi_index > 2)
        throw ValidationError("frame geometry '" + name + "': xi_index must be 0, 1 or 2");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const double s = christoffel[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                            [static_cast<std::size_t>(k)] +
                                 christoffel[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]
                                            [static_cast<std::size_t>(j)];
                if (std::abs(s) > tol) {
                    std::ostringstream msg;
                    msg << "frame geometry '" << name << "': metric compatibility violated at ("
                        << i << "," << j << "," << k << "), Gamma[i][j][k] + Gamma[i][k][j] = " << s;
                    throw ValidationError(msg.str());
                }
            }
    FrameGeometry g;
    g.name_ = std::move(name);
    g.gamma_ = christoffel;
    g.xi_index_ = xi_index;
    return g;
}

Vec3 FrameGeometry::lie_bracket(int i, int j) const {
    Vec3 b{};
    for (int k = 0; k < 3; ++k)
        b[static_cast<std::size_t>(k)] = christoffel(i, j, k) - christoffel(j, i, k);
    return b;
}

double FrameGeometry::riemann(int i, int j, int k, int l) const {
    // Quadratic part of [nabla_i, nabla_j] plus the bracket correction, with
    // the overall sign fixed so that the round-sphere frame has positive
    // sectional curvatures (see header).
    double t = 0.0;
    for (int m = 0; m < 3; ++m) {
        t += christoffel(i, k, m) * christoffel(j, m, l) -
             christoffel(j, k, m) * christoffel(i, m, l);
        t += (christoffel(i, j, m) - christoffel(j, i, m)) * christoffel(m, k, l);
    }
    return t;
}

Vec3 FrameGeometry::riemann_vector(int i, int j, int k) const {
    Vec3 v{};
    for (int l = 0; l < 3; ++l) v[static_cast<std::size_t>(l)] = riemann(i, j, k, l);
    return v;
}

Mat3 FrameGeometry::ricci() const {
    Mat3 r;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            double s = 0.0;
            for (int i = 0; i < 3; ++i) s += riemann(j, i, k, i);
            r(j, k) = s;
        }
    return r;
}

double FrameGeometry::jacobi_residual() const {
    // Jacobiator of the frame brackets, [e_i,[e_j,e_k]] summed cyclically.
    double worst = 0.0;
    auto bracket_of = [this](int i, const Vec3& w) {
        Vec3 out{};
        for (int m = 0; m < 3; ++m) {
            const Vec3 b = lie_bracket(i, m);
            out = out + w[static_cast<std::size_t>(m)] * b;
        }
        return out;
    };
    const int trips[1][3] = {{0, 1, 2}};
    for (const auto& t : trips) {
        Vec3 jac{};
        const int idx[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
        for (const auto& p : idx) jac = jac + bracket_of(p[0], lie_bracket(p[1], p[2]));
        worst = std::max(worst, max_abs(jac));
    }
    return worst;
}

RicciSplit eta_einstein_split(const Mat3& ric, int xi_index, double tol) {
    if (asymmetry(ric) > tol)
        throw NotEtaEinsteinError("eta_einstein_split: Ricci matrix is not symmetric");
    const int p = (xi_index + 1) % 3;
    const int q = (xi_index + 2) % 3;

    double off = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) off = std::max(off, std::abs(ric(i, j)));
    const double aniso = std::abs(ric(p, p) - ric(q, q));
    if (off > tol || aniso > tol) {
        std::ostringstream msg;
        msg << "eta_einstein_split: matrix is not lambda*Id + eta*(xi(x)xi) about frame index "
            << xi_index << " (off-diagonal " << off << ", anisotropy " << aniso << ")";
        throw NotEtaEinsteinError(msg.str());
    }

    RicciSplit split;
    split.lambda = 0.5 * (ric(p, p) + ric(q, q));
    split.eta = ric(xi_index, xi_index) - split.lambda;
    split.xi_index = xi_index;
    return split;
}

Mat3 reconstruct_ricci(const RicciSplit& split) {
    return split.lambda * Mat3::identity() +
           split.eta * outer(basis_vec3(split.xi_index), basis_vec3(split.xi_index));
}

} // namespace spinim
