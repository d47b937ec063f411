#include "catalog.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace spinim {

namespace {

std::string format_name(const char* fmt, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

void attach_special_spinor(CatalogEntry& entry, const std::array<Vec3, 3>& coeffs) {
    entry.special_deriv_coeffs = coeffs;
    entry.special_spinor =
        FramedSpinorField::constant(find_special_spinor(entry.geometry, coeffs));
}

void rename_entry(CatalogEntry& entry, const std::string& name) {
    entry.name = name;
    entry.geometry = FrameGeometry::create(name, entry.geometry.christoffel_array(),
                                           entry.geometry.xi_index());
}

} // namespace

CatalogEntry build_e_kappa_tau(double kappa, double tau) {
    if (tau == 0.0)
        throw ValidationError("e-kappa-tau: tau must be nonzero (tau = 0 is a product)");

    ChristoffelArray c{};
    const double sigma = tau - kappa / (2.0 * tau);
    c[0][1][2] = tau;
    c[0][2][1] = -tau;
    c[1][2][0] = tau;
    c[1][0][2] = -tau;
    c[2][1][0] = sigma;
    c[2][0][1] = -sigma;

    CatalogEntry entry;
    entry.name = format_name("e-kappa-tau(kappa=%g,tau=%g)", kappa, tau);
    entry.geometry = FrameGeometry::create(entry.name, c, 2);
    entry.parameters = {{"kappa", kappa}, {"tau", tau}};
    entry.is_space_form = std::abs(kappa - 4.0 * tau * tau) < 1e-12;

    const double xi_coeff = 0.5 * (kappa / (2.0 * tau) - tau);
    attach_special_spinor(entry, {Vec3{0.5 * tau, 0.0, 0.0}, Vec3{0.0, 0.5 * tau, 0.0},
                                  Vec3{0.0, 0.0, xi_coeff}});
    return entry;
}

CatalogEntry build_sol3() {
    ChristoffelArray c{};
    c[0][0][2] = -1.0;
    c[0][2][0] = 1.0;
    c[1][2][1] = -1.0;
    c[1][1][2] = 1.0;

    CatalogEntry entry;
    entry.name = "sol3";
    entry.geometry = FrameGeometry::create(entry.name, c, 2);
    attach_special_spinor(entry, {Vec3{0.0, 0.5, 0.0}, Vec3{0.5, 0.0, 0.0}, Vec3{}});
    return entry;
}

CatalogEntry build_torus_bundle(double alpha) {
    if (!(alpha > 1.0))
        throw ValidationError("torus-bundle: alpha must be greater than 1");

    const double la = std::log(alpha);
    ChristoffelArray c{};
    c[0][0][2] = -la;
    c[0][2][0] = la;
    c[1][2][1] = -la;
    c[1][1][2] = la;

    CatalogEntry entry;
    entry.name = format_name("torus-bundle(alpha=%g)", alpha);
    entry.geometry = FrameGeometry::create(entry.name, c, 2);
    entry.parameters = {{"alpha", alpha}, {"log_alpha", la}};
    attach_special_spinor(entry,
                          {Vec3{0.0, 0.5 * la, 0.0}, Vec3{0.5 * la, 0.0, 0.0}, Vec3{}});
    return entry;
}

CatalogEntry build_flat() {
    CatalogEntry entry;
    entry.name = "flat";
    entry.geometry = FrameGeometry::create(entry.name, ChristoffelArray{}, 2);
    attach_special_spinor(entry, {Vec3{}, Vec3{}, Vec3{}});
    return entry;
}

CatalogEntry build_fixture(const std::string& name) {
    if (name == "flat_plane") {
        CatalogEntry entry = build_flat();
        rename_entry(entry, "flat_plane");
        entry.fixtures.push_back(
            {ImmersionData::space_form(Mat3::zero(), cplx{0.0, 0.0}, 1), "pass"});
        return entry;
    }
    if (name == "hypersphere") {
        CatalogEntry entry = build_e_kappa_tau(4.0, 1.0);
        rename_entry(entry, "hypersphere");
        entry.fixtures.push_back(
            {ImmersionData::space_form(Mat3::identity(), cplx{0.0, 0.0}, -1), "pass"});
        return entry;
    }
    if (name == "product_slice") {
        CatalogEntry entry = build_e_kappa_tau(4.0, 1.0);
        rename_entry(entry, "product_slice");
        entry.fixtures.push_back(
            {ImmersionData::product(Mat3::zero(), kZeroVec3, 1.0, cplx{0.5, 0.0}, 1),
             "pass"});
        return entry;
    }
    throw ValidationError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"flat_plane", "hypersphere", "product_slice"};
}

CatalogEntry by_name(const std::string& name, const std::map<std::string, double>& params) {
    auto get = [&params](const char* key) -> double {
        auto it = params.find(key);
        if (it == params.end())
            throw ValidationError(std::string("geometry requires parameter '") + key + "'");
        return it->second;
    };
    if (name == "flat") return build_flat();
    if (name == "sol3") return build_sol3();
    if (name == "e-kappa-tau") return build_e_kappa_tau(get("kappa"), get("tau"));
    if (name == "torus-bundle") return build_torus_bundle(get("alpha"));
    throw ValidationError("unknown geometry '" + name + "'");
}

std::vector<EntryDescriptor> list_entries() {
    return {
        {"flat", {}, "flat frame, all connection coefficients zero"},
        {"e-kappa-tau", {"kappa", "tau"},
         "homogeneous fibration over a surface of curvature kappa with bundle "
         "curvature tau (Berger spheres, Nil3, universal cover of PSL2(R))"},
        {"sol3", {}, "solvable group Sol3 with its left-invariant metric"},
        {"torus-bundle", {"alpha"},
         "mapping torus of a hyperbolic toral automorphism with eigenvalue alpha"},
        {"flat_plane", {}, "fixture: plane in R^4 (zero data on the flat frame)"},
        {"hypersphere", {}, "fixture: unit 3-sphere in R^4 (A = Id)"},
        {"product_slice", {}, "fixture: slice of S^3 x R (A = 0, eta = 1/2)"},
    };
}

Spinor find_special_spinor(const FrameGeometry& g, const std::array<Vec3, 3>& coeffs,
                           double tol) {
    // Stack the three conditions (Omega_i - gamma(c_i)) phi = 0 and minimize
    // |M phi|^2 over unit spinors via the 2x2 Hermitian Gram matrix.
    Mat2c gram;
    std::array<Mat2c, 3> rows;
    for (int i = 0; i < 3; ++i) {
        rows[static_cast<std::size_t>(i)] =
            spin_connection_matrix(g, i) - gamma_of(coeffs[static_cast<std::size_t>(i)]);
        const Mat2c& m = rows[static_cast<std::size_t>(i)];
        gram = gram + m.adjoint() * m;
    }

    const double a = std::real(gram(0, 0));
    const double d = std::real(gram(1, 1));
    const cplx b = gram(0, 1);
    const double disc = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    const double lambda_min = 0.5 * (a + d) - disc;

    Spinor phi;
    if (std::abs(b) < 1e-14) {
        phi = (a <= d) ? Spinor{1.0, 0.0} : Spinor{0.0, 1.0};
    } else {
        phi = {b, cplx(lambda_min - a, 0.0)};
        const double n = norm(phi);
        phi = (1.0 / n) * phi;
    }

    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        worst = std::max(worst, norm(apply(rows[static_cast<std::size_t>(i)], phi)));
    if (worst > tol)
        throw CalibrationError(
            "find_special_spinor: no unit spinor satisfies the derivative system for '" +
            g.name() + "' (best residual " + std::to_string(worst) + ")");
    return phi;
}

double special_spinor_residual(const CatalogEntry& entry, int i) {
    if (!entry.special_spinor) return 0.0;
    const FramedSpinorField& f = *entry.special_spinor;
    const Spinor expected =
        mul_vec(entry.special_deriv_coeffs[static_cast<std::size_t>(i)], f.value);
    return norm(covariant_spinor_derivative(entry.geometry, f, i) - expected);
}

} // namespace spinim
