#include "spin_calculus.hpp"

namespace spinim {

Mat2c spin_connection_matrix(const FrameGeometry& g, int i) {
    Mat2c o;
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k)
            o = o + 0.5 * g.christoffel(i, j, k) * (gamma(j) * gamma(k));
    return o;
}

Spinor covariant_spinor_derivative(const FrameGeometry& g, const FramedSpinorField& f, int i) {
    return f.frame_derivs[static_cast<std::size_t>(i)] +
           apply(spin_connection_matrix(g, i), f.value);
}

Spinor dirac(const FrameGeometry& g, const FramedSpinorField& f) {
    Spinor d;
    for (int i = 0; i < 3; ++i)
        d = d + apply(gamma(i), covariant_spinor_derivative(g, f, i));
    return d;
}

Spinor spinorial_curvature(const FrameGeometry& g, int i, int j, const Spinor& phi) {
    Mat2c m = commutator(spin_connection_matrix(g, i), spin_connection_matrix(g, j));
    const Vec3 br = g.lie_bracket(i, j);
    for (int k = 0; k < 3; ++k)
        m = m - br[static_cast<std::size_t>(k)] * spin_connection_matrix(g, k);
    return apply(m, phi);
}

double norm_sq_frame_derivative(const FramedSpinorField& f, int i) {
    return 2.0 * std::real(hermitian(f.frame_derivs[static_cast<std::size_t>(i)], f.value));
}

} // namespace spinim
