#include "killing_dirac.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace spinim {

namespace {

constexpr double kStructureTol = 1e-9;

void validate_eta(cplx eta) {
    if (std::min(std::abs(eta.real()), std::abs(eta.imag())) > 1e-12)
        throw ValidationError("immersion data: eta must be real or purely imaginary");
}

bool eta_is_imaginary(cplx eta) {
    return std::abs(eta.imag()) > std::abs(eta.real());
}

} // namespace

ImmersionData ImmersionData::space_form(const Mat3& A, cplx eta, int branch) {
    if (asymmetry(A) > 1e-10)
        throw ValidationError("immersion data: shape operator must be symmetric");
    validate_eta(eta);
    if (branch != 1 && branch != -1)
        throw ValidationError("immersion data: branch must be +1 or -1");
    ImmersionData d;
    d.a_ = A;
    d.t_ = kZeroVec3;
    d.f_ = 1.0;
    d.eta_ = eta;
    d.ambient_ = Ambient::SpaceForm;
    d.branch_ = branch;
    return d;
}

ImmersionData ImmersionData::product(const Mat3& A, const Vec3& T, double f, cplx eta,
                                     int branch) {
    if (asymmetry(A) > 1e-10)
        throw ValidationError("immersion data: shape operator must be symmetric");
    validate_eta(eta);
    if (branch != 1 && branch != -1)
        throw ValidationError("immersion data: branch must be +1 or -1");
    const double unit = norm_sq(T) + f * f;
    if (std::abs(unit - 1.0) > kStructureTol) {
        std::ostringstream msg;
        msg << "immersion data: product ambient requires |T|^2 + f^2 = 1, got " << unit;
        throw ValidationError(msg.str());
    }
    ImmersionData d;
    d.a_ = A;
    d.t_ = T;
    d.f_ = f;
    d.eta_ = eta;
    d.ambient_ = Ambient::Product;
    d.branch_ = branch;
    return d;
}

ImmersionData ImmersionData::with_mean_curvature(double h) const {
    ImmersionData d = *this;
    d.h_override_ = h;
    return d;
}

Spinor killing_residual(const FrameGeometry& g, const FramedSpinorField& f,
                        const ImmersionData& d, int i) {
    const double eps = static_cast<double>(d.branch());
    const Vec3 e = basis_vec3(i);
    const Spinor& phi = f.value;

    Spinor rhs = (-0.5 * eps) * mul_vec(d.A().column(i), phi);
    rhs = rhs + d.eta() * mul_bivec(e, d.T(), phi);
    rhs = rhs + (eps * d.eta() * d.f()) * mul_vec(e, phi);
    rhs = rhs + (d.eta() * d.T()[static_cast<std::size_t>(i)]) * phi;

    return covariant_spinor_derivative(g, f, i) - rhs;
}

Spinor dirac_residual(const FrameGeometry& g, const FramedSpinorField& f,
                      const ImmersionData& d) {
    const double eps = static_cast<double>(d.branch());
    const Spinor& phi = f.value;

    Spinor rhs = (eps * 1.5 * d.mean_curvature()) * phi;
    rhs = rhs - 2.0 * d.eta() * mul_vec(d.T(), phi);
    rhs = rhs - (eps * 3.0 * d.eta() * d.f()) * phi;

    return dirac(g, f) - rhs;
}

double norm_condition_residual(const FrameGeometry& g, const FramedSpinorField& f,
                               const ImmersionData& d, int i) {
    (void)g;
    const double dn = norm_sq_frame_derivative(f, i);
    if (!eta_is_imaginary(d.eta())) return dn;

    const Vec3 e = basis_vec3(i);
    const Spinor term = d.eta() * mul_bivec(e, d.T(), f.value) +
                        (d.eta() * d.f()) * mul_vec(e, f.value);
    return dn - 2.0 * std::real(hermitian(term, f.value));
}

double norm_condition_residual_unscaled(const FrameGeometry& g, const FramedSpinorField& f,
                                        const ImmersionData& d, int i) {
    (void)g;
    const double dn = norm_sq_frame_derivative(f, i);
    const Vec3 e = basis_vec3(i);
    const cplx iu{0.0, 1.0};
    const Spinor term = iu * mul_bivec(e, d.T(), f.value) +
                        (iu * d.f()) * mul_vec(e, f.value);
    return dn - std::real(hermitian(term, f.value));
}

Mat3 energy_momentum(const FrameGeometry& g, const FramedSpinorField& f) {
    const double n2 = norm_sq(f.value);
    if (std::sqrt(n2) < 1e-12)
        throw ZeroSpinorError("energy_momentum: spinor value has norm below tolerance");

    std::array<Spinor, 3> cov;
    for (int i = 0; i < 3; ++i)
        cov[static_cast<std::size_t>(i)] = covariant_spinor_derivative(g, f, i);

    Mat3 q;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Spinor s = mul_vec(basis_vec3(i), cov[static_cast<std::size_t>(j)]) +
                             mul_vec(basis_vec3(j), cov[static_cast<std::size_t>(i)]);
            q(i, j) = 0.5 * std::real(hermitian(s, f.value)) / n2;
        }
    return q;
}

ReconstructionResult reconstruct_shape(const FrameGeometry& g, const FramedSpinorField& f,
                                       const ReconstructionInput& in, double tol) {
    const double n2 = norm_sq(f.value);
    if (std::sqrt(n2) < 1e-12)
        throw ZeroSpinorError("reconstruct_shape: spinor value has norm below tolerance");

    // Preconditions: the phi_1-branch Dirac equation and the norm condition
    // must hold for the given partial data. Computed inline so arbitrary
    // (T, f) inputs are accepted.
    const bool imag_eta = eta_is_imaginary(in.eta);
    {
        Spinor rhs = (1.5 * in.H) * f.value;
        rhs = rhs - 2.0 * in.eta * mul_vec(in.T, f.value);
        rhs = rhs - (3.0 * in.eta * in.f) * f.value;
        const double dres = norm(dirac(g, f) - rhs);
        if (dres > tol) {
            std::ostringstream msg;
            msg << "reconstruct_shape: Dirac residual " << dres << " exceeds tolerance " << tol;
            throw PreconditionError(msg.str());
        }
    }
    double nres = 0.0;
    for (int i = 0; i < 3; ++i) {
        double res = norm_sq_frame_derivative(f, i);
        if (imag_eta) {
            const Vec3 e = basis_vec3(i);
            const Spinor term = in.eta * mul_bivec(e, in.T, f.value) +
                                (in.eta * in.f) * mul_vec(e, f.value);
            res -= 2.0 * std::real(hermitian(term, f.value));
        }
        nres = std::max(nres, std::abs(res));
    }
    if (nres > tol) {
        std::ostringstream msg;
        msg << "reconstruct_shape: norm-condition residual " << nres << " exceeds tolerance "
            << tol;
        throw PreconditionError(msg.str());
    }

    // Pointwise decomposition nabla_i phi = B(e_i).phi + omega(e_i) phi.
    ReconstructionResult out{};
    Mat3 b;
    for (int i = 0; i < 3; ++i) {
        const RealBasisCoords c =
            real_basis_coords(f.value, covariant_spinor_derivative(g, f, i));
        out.omega[static_cast<std::size_t>(i)] = c.r;
        for (int j = 0; j < 3; ++j) b(i, j) = c.v[static_cast<std::size_t>(j)];
    }
    out.U = skew_part(b);

    const Mat3 q = energy_momentum(g, f);

    if (!imag_eta) {
        out.V = Mat3::zero();
        out.A_rec = 2.0 * q + (2.0 * in.eta.real() * in.f) * Mat3::identity();
        return out;
    }

    // Imaginary eta: the correction tensor V collects the Re-pairings that
    // the energy-momentum tensor picks up from the eta-terms of the Killing
    // equation.
    Mat3 v;
    const double t_pair = std::real(in.eta * hermitian(mul_vec(in.T, f.value), f.value)) / n2;
    Vec3 e_pair{};
    for (int i = 0; i < 3; ++i)
        e_pair[static_cast<std::size_t>(i)] =
            std::real(in.eta * hermitian(mul_vec(basis_vec3(i), f.value), f.value)) / n2;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double val = (i == j) ? 2.0 * t_pair + 2.0 * in.f * in.eta.real() : 0.0;
            val -= in.T[static_cast<std::size_t>(j)] * e_pair[static_cast<std::size_t>(i)];
            val -= in.T[static_cast<std::size_t>(i)] * e_pair[static_cast<std::size_t>(j)];
            v(i, j) = val;
        }
    out.V = v;
    out.A_rec = 2.0 * q + v;
    return out;
}

KillingCheckReport check_killing(const FrameGeometry& g, const FramedSpinorField& f,
                                 const ImmersionData& d, double tolerance) {
    KillingCheckReport r;
    r.tolerance = tolerance;
    r.imaginary_eta = eta_is_imaginary(d.eta());
    for (int i = 0; i < 3; ++i) {
        r.killing[static_cast<std::size_t>(i)] = norm(killing_residual(g, f, d, i));
        r.norm_condition[static_cast<std::size_t>(i)] =
            std::abs(norm_condition_residual(g, f, d, i));
        if (r.imaginary_eta)
            r.norm_condition_unscaled[static_cast<std::size_t>(i)] =
                std::abs(norm_condition_residual_unscaled(g, f, d, i));
        r.killing_max = std::max(r.killing_max, r.killing[static_cast<std::size_t>(i)]);
        r.norm_condition_max =
            std::max(r.norm_condition_max, r.norm_condition[static_cast<std::size_t>(i)]);
    }
    r.dirac = norm(dirac_residual(g, f, d));
    return r;
}

} // namespace spinim
