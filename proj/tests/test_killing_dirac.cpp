#include "doctest.h"

#include "catalog.hpp"
#include "errors.hpp"
#include "killing_dirac.hpp"
#include "test_support.hpp"

using namespace spinim;
using namespace spinim::testing;

TEST_CASE("immersion data validation") {
    Mat3 nonsym = Mat3::identity();
    nonsym(0, 1) = 0.5;
    CHECK_THROWS_AS(ImmersionData::space_form(nonsym, 0.0), ValidationError);
    CHECK_THROWS_AS(ImmersionData::space_form(Mat3::identity(), cplx(0.5, 0.5)),
                    ValidationError);
    CHECK_THROWS_AS(ImmersionData::space_form(Mat3::identity(), 0.0, 2), ValidationError);
    CHECK_THROWS_AS(
        ImmersionData::product(Mat3::zero(), Vec3{0.5, 0.0, 0.0}, 0.5, cplx(0.5, 0.0)),
        ValidationError);
    CHECK_NOTHROW(ImmersionData::product(Mat3::zero(), Vec3{0.6, 0.8, 0.0}, 0.0, 0.25));

    const ImmersionData d = ImmersionData::space_form(Mat3::identity(), cplx(0.0, 0.5));
    CHECK(d.kappa() == doctest::Approx(-1.0));
    CHECK(ImmersionData::space_form(Mat3::identity(), 0.5).kappa() == doctest::Approx(1.0));
    CHECK(d.mean_curvature() == doctest::Approx(1.0));
    CHECK(d.half_trace() == doctest::Approx(1.5));
}

TEST_CASE("killing residual fixtures") {
    Rng rng(401);

    SUBCASE("flat plane: zero data, constant spinor") {
        const CatalogEntry e = build_fixture("flat_plane");
        for (int i = 0; i < 3; ++i)
            CHECK(norm(killing_residual(e.geometry, *e.special_spinor, e.fixtures[0].data,
                                        i)) == 0.0);
    }
    SUBCASE("product slice of S^3 x R") {
        const CatalogEntry e = build_fixture("product_slice");
        for (int i = 0; i < 3; ++i)
            CHECK(norm(killing_residual(e.geometry, *e.special_spinor, e.fixtures[0].data,
                                        i)) < 1e-14);
    }
    SUBCASE("hypersphere in R^4 (phi_1 space-form branch)") {
        const CatalogEntry e = build_fixture("hypersphere");
        CHECK(e.fixtures[0].data.branch() == -1);
        for (int i = 0; i < 3; ++i)
            CHECK(norm(killing_residual(e.geometry, *e.special_spinor, e.fixtures[0].data,
                                        i)) < 1e-14);
    }
    SUBCASE("random exact fields have zero residual on their own branch") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const int eps = (t % 2 == 0) ? 1 : -1;
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const double eta = uniform(rng, -1.0, 1.0);
            const FramedSpinorField field = make_exact_killing_field(
                entry.geometry, a, tv, f, eta, eps, random_spinor(rng));
            const ImmersionData d = ImmersionData::product(a, tv, f, eta, eps);
            for (int i = 0; i < 3; ++i)
                CHECK(norm(killing_residual(entry.geometry, field, d, i)) < 1e-12);
        }
    }
}

TEST_CASE("branch involution: (eps, A, eta) ~ (-eps, -A, -eta) when T = 0") {
    Rng rng(402);
    for (const bool imaginary : {false, true}) {
        for (int t = 0; t < 25; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const Mat3 a = random_symmetric(rng);
            const double s = uniform(rng, -1.0, 1.0);
            const cplx eta = imaginary ? cplx(0.0, s) : cplx(s, 0.0);
            FramedSpinorField field;
            field.value = random_spinor(rng);
            for (int i = 0; i < 3; ++i)
                field.frame_derivs[static_cast<std::size_t>(i)] = random_spinor(rng);

            const ImmersionData d1 = ImmersionData::space_form(a, eta, 1);
            const ImmersionData d2 = ImmersionData::space_form(-1.0 * a, -eta, -1);
            for (int i = 0; i < 3; ++i) {
                const Spinor r1 = killing_residual(entry.geometry, field, d1, i);
                const Spinor r2 = killing_residual(entry.geometry, field, d2, i);
                CHECK(norm(r1 - r2) < 1e-12);
            }
            CHECK(norm(dirac_residual(entry.geometry, field, d1) -
                       dirac_residual(entry.geometry, field, d2)) < 1e-12);
        }
    }
}

TEST_CASE("dirac residual") {
    Rng rng(403);

    SUBCASE("flat zero data") {
        const CatalogEntry e = build_fixture("flat_plane");
        CHECK(norm(dirac_residual(e.geometry, *e.special_spinor, e.fixtures[0].data)) == 0.0);
    }
    SUBCASE("slice: D phi = -3 eta phi = -(3/2) phi") {
        const CatalogEntry e = build_fixture("product_slice");
        CHECK(norm(dirac_residual(e.geometry, *e.special_spinor, e.fixtures[0].data)) <
              1e-14);
        const Spinor d = dirac(e.geometry, *e.special_spinor);
        CHECK(norm(d + 1.5 * e.special_spinor->value) < 1e-14);
    }
    SUBCASE("wrong mean curvature shifts the residual linearly") {
        const CatalogEntry e = build_fixture("product_slice");
        const ImmersionData wrong = e.fixtures[0].data.with_mean_curvature(1.0);
        const double res = norm(dirac_residual(e.geometry, *e.special_spinor, wrong));
        CHECK(res == doctest::Approx(1.5 * norm(e.special_spinor->value)));
    }
    SUBCASE("exact Killing fields satisfy the Dirac identity (both branches)") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const int eps = (t % 2 == 0) ? 1 : -1;
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const bool imaginary = (t % 3 == 0);
            const double s = uniform(rng, -1.0, 1.0);
            const cplx eta = imaginary ? cplx(0.0, s) : cplx(s, 0.0);
            const FramedSpinorField field = make_exact_killing_field(
                entry.geometry, a, tv, f, eta, eps, random_spinor(rng));
            const ImmersionData d = ImmersionData::product(a, tv, f, eta, eps);
            CHECK(norm(dirac_residual(entry.geometry, field, d)) < 1e-12);
        }
    }
}

TEST_CASE("norm condition residual") {
    Rng rng(404);

    SUBCASE("constant field with real eta") {
        const CatalogEntry e = build_fixture("product_slice");
        for (int i = 0; i < 3; ++i)
            CHECK(norm_condition_residual(e.geometry, *e.special_spinor, e.fixtures[0].data,
                                          i) == 0.0);
    }
    SUBCASE("real-eta exact solutions have constant norm") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const int eps = (t % 2 == 0) ? 1 : -1;
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const double eta = uniform(rng, -1.0, 1.0);
            const FramedSpinorField field = make_exact_killing_field(
                entry.geometry, a, tv, f, eta, eps, random_spinor(rng));
            const ImmersionData d = ImmersionData::product(a, tv, f, eta, eps);
            // killing residuals vanish, so the norm condition must too
            for (int i = 0; i < 3; ++i) {
                REQUIRE(norm(killing_residual(entry.geometry, field, d, i)) < 1e-10);
                CHECK(std::abs(norm_condition_residual(entry.geometry, field, d, i)) < 1e-9);
            }
        }
    }
    SUBCASE("imaginary-eta value against direct evaluation") {
        // eta = i/2, T = 0, f = 1, constant field:
        // residual = -2 Re<(i/2) e_i.phi, phi> = Im<e_i.phi, phi>.
        const CatalogEntry entry = build_flat();
        const ImmersionData d =
            ImmersionData::space_form(Mat3::zero(), cplx(0.0, 0.5));
        for (int t = 0; t < 25; ++t) {
            const Spinor phi = random_spinor(rng);
            const FramedSpinorField field = FramedSpinorField::constant(phi);
            for (int i = 0; i < 3; ++i) {
                const double oracle =
                    std::imag(hermitian(mul_vec(basis_vec3(i), phi), phi));
                CHECK(std::abs(norm_condition_residual(entry.geometry, field, d, i) -
                               oracle) < 1e-12);
            }
        }
    }
}

TEST_CASE("energy-momentum tensor") {
    Rng rng(405);

    SUBCASE("flat constant field") {
        const FrameGeometry g = build_flat().geometry;
        const Mat3 q = energy_momentum(g, FramedSpinorField::constant(random_spinor(rng)));
        CHECK(max_abs(q) == 0.0);
    }
    SUBCASE("killing spinor nabla phi = eta X.phi gives Q = -eta Id") {
        const FrameGeometry g = build_e_kappa_tau(4.0, 1.0).geometry;
        for (double eta : {0.5, -1.25}) {
            FramedSpinorField f;
            f.value = random_spinor(rng);
            for (int i = 0; i < 3; ++i)
                f.frame_derivs[static_cast<std::size_t>(i)] =
                    eta * mul_vec(basis_vec3(i), f.value) -
                    apply(spin_connection_matrix(g, i), f.value);
            CHECK(max_abs(energy_momentum(g, f) + eta * Mat3::identity()) < 1e-12);
        }
    }
    SUBCASE("field nabla_i phi = 1/2 A(e_i).phi gives Q = -A/2") {
        const FrameGeometry g = build_sol3().geometry;
        const Mat3 a = Mat3::diag(1, 1, -2);
        FramedSpinorField f;
        f.value = random_spinor(rng);
        for (int i = 0; i < 3; ++i)
            f.frame_derivs[static_cast<std::size_t>(i)] =
                0.5 * mul_vec(a.column(i), f.value) -
                apply(spin_connection_matrix(g, i), f.value);
        CHECK(max_abs(energy_momentum(g, f) + 0.5 * a) < 1e-12);
    }
    SUBCASE("exact eps-branch fields: Q = eps (A/2 - eta f Id)") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const int eps = (t % 2 == 0) ? 1 : -1;
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const double eta = uniform(rng, -1.0, 1.0);
            const FramedSpinorField field = make_exact_killing_field(
                entry.geometry, a, tv, f, eta, eps, random_spinor(rng));
            const Mat3 q = energy_momentum(entry.geometry, field);
            const Mat3 expected =
                static_cast<double>(eps) * (0.5 * a - (eta * f) * Mat3::identity());
            CHECK(max_abs(q - expected) < 1e-10);
        }
    }
    SUBCASE("symmetric output and zero-spinor rejection") {
        const FrameGeometry g = build_sol3().geometry;
        FramedSpinorField f;
        f.value = random_spinor(rng);
        for (int i = 0; i < 3; ++i)
            f.frame_derivs[static_cast<std::size_t>(i)] = random_spinor(rng);
        CHECK(asymmetry(energy_momentum(g, f)) < 1e-13);
        f.value = Spinor{};
        CHECK_THROWS_AS(energy_momentum(g, f), ZeroSpinorError);
    }
}

TEST_CASE("shape reconstruction") {
    Rng rng(406);

    SUBCASE("slice: A_rec = 0, omega = 0, U = 0") {
        const CatalogEntry e = build_fixture("product_slice");
        const ReconstructionResult r = reconstruct_shape(
            e.geometry, *e.special_spinor, ReconstructionInput{kZeroVec3, 1.0, 0.5, 0.0});
        CHECK(max_abs(r.A_rec) < 1e-12);
        CHECK(max_abs(r.omega) < 1e-12);
        CHECK(max_abs(r.U) < 1e-12);
        CHECK(max_abs(r.V) == 0.0);
    }
    SUBCASE("flat zero data") {
        const CatalogEntry e = build_fixture("flat_plane");
        const ReconstructionResult r = reconstruct_shape(
            e.geometry, *e.special_spinor, ReconstructionInput{kZeroVec3, 1.0, 0.0, 0.0});
        CHECK(max_abs(r.A_rec) == 0.0);
        CHECK(max_abs(r.omega) == 0.0);
        CHECK(max_abs(r.U) == 0.0);
    }
    SUBCASE("branch sign: field built with +A/2 derivatives returns -A") {
        const FrameGeometry g = build_sol3().geometry;
        const Mat3 a0 = Mat3::diag(1, 1, -2);
        // eps = -1, eta = 0: nabla_i phi = +1/2 A0(e_i).phi
        const FramedSpinorField field =
            make_exact_killing_field(g, a0, kZeroVec3, 1.0, 0.0, -1, random_spinor(rng));
        const ReconstructionResult r =
            reconstruct_shape(g, field, ReconstructionInput{kZeroVec3, 1.0, 0.0, -a0.trace() / 3.0});
        CHECK(max_abs(r.A_rec + a0) < 1e-9);
    }
    SUBCASE("round-trip for random real-eta exact fields") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const double eta = uniform(rng, -1.0, 1.0);
            Spinor phi0 = random_spinor(rng);
            if (norm(phi0) < 1e-3) phi0 = Spinor{1.0, 0.0};
            const FramedSpinorField field =
                make_exact_killing_field(entry.geometry, a, tv, f, eta, 1, phi0);
            const ReconstructionResult r = reconstruct_shape(
                entry.geometry, field,
                ReconstructionInput{tv, f, eta, a.trace() / 3.0});
            CHECK(max_abs(r.A_rec - a) < 1e-9);
            CHECK(max_abs(r.omega) < 1e-9);
            CHECK(max_abs(r.V) == 0.0);
        }
    }
    SUBCASE("round-trip for random imaginary-eta exact fields") {
        for (int t = 0; t < 50; ++t) {
            const CatalogEntry entry = catalog_sample()[static_cast<std::size_t>(t) % 8];
            const Mat3 a = random_symmetric(rng);
            Vec3 tv;
            double f = 1.0;
            random_tf(rng, tv, f);
            const cplx eta{0.0, uniform(rng, -1.0, 1.0)};
            Spinor phi0 = random_spinor(rng);
            if (norm(phi0) < 1e-3) phi0 = Spinor{1.0, 0.0};
            const FramedSpinorField field =
                make_exact_killing_field(entry.geometry, a, tv, f, eta, 1, phi0);
            const ReconstructionResult r = reconstruct_shape(
                entry.geometry, field,
                ReconstructionInput{tv, f, eta, a.trace() / 3.0});
            CHECK(max_abs(r.A_rec - a) < 1e-9);
            // omega equals the logarithmic norm derivative
            for (int i = 0; i < 3; ++i) {
                const double expected = norm_sq_frame_derivative(field, i) /
                                        (2.0 * norm_sq(field.value));
                CHECK(std::abs(r.omega[static_cast<std::size_t>(i)] - expected) < 1e-9);
            }
        }
    }
    SUBCASE("reconstructed operator closes the killing equation") {
        const FrameGeometry g = build_e_kappa_tau(1.0, 1.0).geometry;
        const Mat3 a = random_symmetric(rng);
        Vec3 tv;
        double f = 1.0;
        random_tf(rng, tv, f);
        const double eta = uniform(rng, -1.0, 1.0);
        const FramedSpinorField field =
            make_exact_killing_field(g, a, tv, f, eta, 1, random_spinor(rng));
        const ReconstructionResult r =
            reconstruct_shape(g, field, ReconstructionInput{tv, f, eta, a.trace() / 3.0});
        const ImmersionData d = ImmersionData::product(r.A_rec, tv, f, eta, 1);
        for (int i = 0; i < 3; ++i)
            CHECK(norm(killing_residual(g, field, d, i)) < 1e-9);
    }
    SUBCASE("precondition failures are reported") {
        const CatalogEntry e = build_fixture("product_slice");
        CHECK_THROWS_AS(
            reconstruct_shape(e.geometry, *e.special_spinor,
                              ReconstructionInput{kZeroVec3, 1.0, 0.5, 7.0}),
            PreconditionError);
        FramedSpinorField zero;
        CHECK_THROWS_AS(reconstruct_shape(e.geometry, zero,
                                          ReconstructionInput{kZeroVec3, 1.0, 0.0, 0.0}),
                        ZeroSpinorError);
    }
}

TEST_CASE("check_killing aggregation") {
    const CatalogEntry e = build_fixture("product_slice");
    const KillingCheckReport r =
        check_killing(e.geometry, *e.special_spinor, e.fixtures[0].data, 1e-9);
    CHECK(r.pass());
    CHECK(r.killing_max < 1e-12);
    CHECK(r.dirac < 1e-12);
    CHECK_FALSE(r.imaginary_eta);

    const ImmersionData wrong = e.fixtures[0].data.with_mean_curvature(1.0);
    const KillingCheckReport bad = check_killing(e.geometry, *e.special_spinor, wrong, 1e-9);
    CHECK_FALSE(bad.pass());
}
