#include "clifford.hpp"

#include <string>

namespace spinim {

namespace {

constexpr cplx kI{0.0, 1.0};

Mat2c make_gamma(int i) {
    // gamma_j = -i sigma_j
    Mat2c g;
    switch (i) {
        case 0: // sigma_1 = [[0,1],[1,0]]
            g(0, 1) = -kI;
            g(1, 0) = -kI;
            break;
        case 1: // sigma_2 = [[0,-i],[i,0]]
            g(0, 1) = -1.0;
            g(1, 0) = 1.0;
            break;
        default: // sigma_3 = [[1,0],[0,-1]]
            g(0, 0) = -kI;
            g(1, 1) = kI;
            break;
    }
    return g;
}

const Mat2c kGamma[3] = {make_gamma(0), make_gamma(1), make_gamma(2)};

} // namespace

const Mat2c& gamma(int i) { return kGamma[i]; }

Mat2c gamma_of(const Vec3& v) {
    return v[0] * kGamma[0] + v[1] * kGamma[1] + v[2] * kGamma[2];
}

Spinor mul_vec(const Vec3& v, const Spinor& phi) { return apply(gamma_of(v), phi); }

Spinor mul_bivec(const Vec3& v, const Vec3& w, const Spinor& phi) {
    return mul_vec(v, mul_vec(w, phi));
}

RealBasisCoords real_basis_coords(const Spinor& base, const Spinor& psi, double tol) {
    const double n2 = norm_sq(base);
    if (std::sqrt(n2) < tol)
        throw ZeroSpinorError("real_basis_coords: base spinor has norm below tolerance");
    RealBasisCoords out;
    out.r = std::real(hermitian(psi, base)) / n2;
    for (int i = 0; i < 3; ++i)
        out.v[static_cast<std::size_t>(i)] =
            std::real(hermitian(psi, apply(kGamma[i], base))) / n2;
    return out;
}

void verify_representation(double tol) {
    const Mat2c id = Mat2c::identity();
    auto fail = [](const std::string& what, double res) {
        throw CalibrationError("Clifford representation check failed: " + what +
                               " (residual " + std::to_string(res) + ")");
    };

    // Clifford relation and anti-Hermitian generators.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Mat2c anti =
                kGamma[i] * kGamma[j] + kGamma[j] * kGamma[i] + (i == j ? 2.0 : 0.0) * id;
            if (max_abs(anti) > tol) fail("anticommutation", max_abs(anti));
        }
        const double herm_res = max_abs(kGamma[i].adjoint() + kGamma[i]);
        if (herm_res > tol) fail("anti-Hermitian generator", herm_res);
    }

    // Volume convention: -gamma_1 gamma_2 gamma_3 = Id.
    const double vol = max_abs(-1.0 * (kGamma[0] * kGamma[1] * kGamma[2]) - id);
    if (vol > tol) fail("volume element", vol);

    // Cyclic products gamma_i gamma_j = gamma_k.
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (const auto& c : cyc) {
        const double res = max_abs(kGamma[c[0]] * kGamma[c[1]] - kGamma[c[2]]);
        if (res > tol) fail("cyclic product", res);
    }
}

} // namespace spinim
