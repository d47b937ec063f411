#include "conventions.hpp"

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "clifford.hpp"
#include "errors.hpp"
#include "spin_calculus.hpp"

namespace spinim {

namespace {

ConventionCheck make_check(std::string name, double residual, double tol,
                           std::string detail = {}) {
    ConventionCheck c;
    c.name = std::move(name);
    c.residual = residual;
    c.pass = residual <= tol;
    c.detail = std::move(detail);
    return c;
}

double representation_residual() {
    const Mat2c id = Mat2c::identity();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, max_abs(gamma(i) * gamma(j) + gamma(j) * gamma(i) +
                                            (i == j ? 2.0 : 0.0) * id));
        worst = std::max(worst, max_abs(gamma(i).adjoint() + gamma(i)));
    }
    return worst;
}

double volume_residual() {
    return max_abs(-1.0 * (gamma(0) * gamma(1) * gamma(2)) - Mat2c::identity());
}

double cyclic_residual() {
    double worst = max_abs(gamma(0) * gamma(1) - gamma(2));
    worst = std::max(worst, max_abs(gamma(1) * gamma(2) - gamma(0)));
    worst = std::max(worst, max_abs(gamma(2) * gamma(0) - gamma(1)));
    return worst;
}

double skew_pairing_residual() {
    std::mt19937_64 rng(20240901);
    std::normal_distribution<double> dist;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Spinor psi{cplx(dist(rng), dist(rng)), cplx(dist(rng), dist(rng))};
        const Vec3 v{dist(rng), dist(rng), dist(rng)};
        worst = std::max(worst, std::abs(std::real(hermitian(mul_vec(v, psi), psi))));
        worst = std::max(worst, std::abs(std::real(hermitian(
                                    mul_bivec(basis_vec3(0), basis_vec3(1), psi), psi))));
    }
    return worst;
}

double ricci_calibration_residual() {
    double worst = 0.0;
    for (double kappa : {-1.0, 0.0, 1.0, 4.0})
        for (double tau : {0.5, 1.0}) {
            const CatalogEntry e = build_e_kappa_tau(kappa, tau);
            const Mat3 expected =
                Mat3::diag(kappa - 2 * tau * tau, kappa - 2 * tau * tau, 2 * tau * tau);
            worst = std::max(worst, max_abs(e.geometry.ricci() - expected));
        }
    worst = std::max(worst, max_abs(build_sol3().geometry.ricci() - Mat3::diag(0, 0, -2)));
    const double la = std::log(2.0);
    worst = std::max(worst, max_abs(build_torus_bundle(2.0).geometry.ricci() -
                                    Mat3::diag(0, 0, -2 * la * la)));
    return worst;
}

double special_spinor_residual_all() {
    double worst = 0.0;
    std::vector<CatalogEntry> entries;
    for (double kappa : {-1.0, 0.0, 1.0, 4.0})
        entries.push_back(build_e_kappa_tau(kappa, 1.0));
    entries.push_back(build_sol3());
    entries.push_back(build_torus_bundle(2.0));
    for (const CatalogEntry& e : entries)
        for (int i = 0; i < 3; ++i)
            worst = std::max(worst, special_spinor_residual(e, i));
    return worst;
}

double ricci_identity_residual() {
    std::mt19937_64 rng(20240902);
    std::normal_distribution<double> dist;
    double worst = 0.0;
    for (const CatalogEntry& e :
         {build_e_kappa_tau(1.0, 1.0), build_sol3(), build_torus_bundle(2.0)}) {
        for (int t = 0; t < 10; ++t) {
            const Spinor phi{cplx(dist(rng), dist(rng)), cplx(dist(rng), dist(rng))};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    // -(1/2) sum_{k<l} R_ijkl gamma_k gamma_l phi
                    Mat2c m;
                    for (int k = 0; k < 3; ++k)
                        for (int l = k + 1; l < 3; ++l)
                            m = m + e.geometry.riemann(i, j, k, l) * (gamma(k) * gamma(l));
                    const Spinor rhs = apply(-0.5 * m, phi);
                    worst = std::max(
                        worst, norm(spinorial_curvature(e.geometry, i, j, phi) - rhs));
                }
        }
    }
    return worst;
}

} // namespace

ConventionsReport run_conventions(double tol) {
    ConventionsReport r;
    r.checks.push_back(make_check("clifford relation and anti-Hermitian generators",
                                  representation_residual(), 1e-14,
                                  "gamma_j = -i sigma_j (Pauli)"));
    r.checks.push_back(make_check("volume element -gamma1 gamma2 gamma3 = Id",
                                  volume_residual(), 1e-14));
    r.checks.push_back(
        make_check("cyclic products gamma_i gamma_j = gamma_k", cyclic_residual(), 1e-14));
    r.checks.push_back(make_check("Re<v.psi, psi> = 0 for vectors and 2-forms",
                                  skew_pairing_residual(), 1e-12));
    r.checks.push_back(make_check("E(kappa,tau) Ricci calibration",
                                  ricci_calibration_residual(), tol,
                                  "pins the curvature sign convention"));
    r.checks.push_back(make_check("catalog special spinors found",
                                  special_spinor_residual_all(), 1e-12,
                                  "pins the spin-connection sign (no gamma flip needed)"));
    r.checks.push_back(make_check("spinorial curvature matches the curvature tensor",
                                  ricci_identity_residual(), tol));
    return r;
}

json conventions_to_json(const ConventionsReport& r) {
    json j;
    j["schema"] = kSchemaTag;
    json arr = json::array();
    for (const ConventionCheck& c : r.checks) {
        json e;
        e["name"] = c.name;
        e["residual"] = c.residual;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(e);
    }
    j["checks"] = arr;
    j["pass"] = r.pass();
    return j;
}

} // namespace spinim
