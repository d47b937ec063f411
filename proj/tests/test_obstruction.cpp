#include "doctest.h"

#include "catalog.hpp"
#include "errors.hpp"
#include "obstruction.hpp"
#include "test_support.hpp"

using namespace spinim;
using namespace spinim::testing;

namespace {

double system_residual(const Mat3& a, double lambda, double eta) {
    // a1 a2 = (lambda+eta)/2, a2 a3 = a1 a3 = (lambda-eta)/2
    const double a1 = a(0, 0), a2 = a(1, 1), a3 = a(2, 2);
    double r = std::abs(a1 * a2 - 0.5 * (lambda + eta));
    r = std::max(r, std::abs(a2 * a3 - 0.5 * (lambda - eta)));
    r = std::max(r, std::abs(a1 * a3 - 0.5 * (lambda - eta)));
    return r;
}

} // namespace

TEST_CASE("solve_shape_candidates cases") {
    SUBCASE("sol3 values: lambda = 0, eta = -2") {
        const ShapeCandidates s = solve_shape_candidates(0.0, -2.0);
        CHECK(s.tag == ShapeCandidateCase::NoRealSolutionNegativeSquare);
        CHECK(s.candidates.empty());
    }
    SUBCASE("lambda = -eta") {
        const ShapeCandidates s = solve_shape_candidates(1.0, -1.0);
        CHECK(s.tag == ShapeCandidateCase::NoRealSolutionLambdaEqualsMinusEta);
    }
    SUBCASE("berger values: lambda = -1, eta = 3") {
        const ShapeCandidates s = solve_shape_candidates(-1.0, 3.0);
        REQUIRE(s.tag == ShapeCandidateCase::Candidates);
        REQUIRE(s.candidates.size() == 2);
        CHECK(max_abs(s.candidates[0] - Mat3::diag(1, 1, -2)) < 1e-12);
        CHECK(max_abs(s.candidates[1] - Mat3::diag(-1, -1, 2)) < 1e-12);
        CHECK(system_residual(s.candidates[0], -1.0, 3.0) < 1e-12);
    }
    SUBCASE("degenerate lambda = eta") {
        const ShapeCandidates s = solve_shape_candidates(2.0, 2.0);
        CHECK(s.tag == ShapeCandidateCase::UnderdeterminedLambdaEqualsEta);
    }
    SUBCASE("eta = 0 is rejected") {
        CHECK_THROWS_AS(solve_shape_candidates(1.0, 0.0), EtaZeroError);
    }
    SUBCASE("random solvable pairs satisfy the product system to 1e-12") {
        Rng rng(601);
        int produced = 0;
        while (produced < 100) {
            const double lambda = uniform(rng, -4.0, 4.0);
            const double eta = uniform(rng, -4.0, 4.0);
            if (std::abs(eta) < 1e-6 || lambda + eta < 1e-6 ||
                std::abs(lambda - eta) < 1e-6)
                continue;
            const ShapeCandidates s = solve_shape_candidates(lambda, eta);
            REQUIRE(s.tag == ShapeCandidateCase::Candidates);
            for (const Mat3& a : s.candidates)
                CHECK(system_residual(a, lambda, eta) < 1e-12);
            ++produced;
        }
    }
}

TEST_CASE("obstruct: the five non-immersible families") {
    SUBCASE("nil3 via candidates failing codazzi") {
        for (double tau : {0.5, 1.0, 2.0}) {
            const ObstructionResult r =
                obstruct(build_e_kappa_tau(0.0, tau).geometry, 2);
            CHECK(r.verdict == Verdict::NonImmersible);
            CHECK(r.case_tag == ShapeCandidateCase::Candidates);
            for (double c : r.codazzi_residuals) CHECK(c > 1e-6);
        }
    }
    SUBCASE("berger sphere with candidate audit trail") {
        const ObstructionResult r = obstruct(build_e_kappa_tau(1.0, 1.0).geometry, 2);
        CHECK(r.verdict == Verdict::NonImmersible);
        REQUIRE(r.candidates.size() == 2);
        CHECK(max_abs(r.candidates[0] - Mat3::diag(1, 1, -2)) < 1e-12);
        CHECK(r.split.lambda == doctest::Approx(-1.0));
        CHECK(r.split.eta == doctest::Approx(3.0));
        for (double c : r.codazzi_residuals) CHECK(c > 1e-6);
    }
    SUBCASE("universal cover of PSL2(R)") {
        const ObstructionResult r = obstruct(build_e_kappa_tau(-1.0, 1.0).geometry, 2);
        CHECK(r.verdict == Verdict::NonImmersible);
    }
    SUBCASE("sol3 via the negative-square case") {
        const ObstructionResult r = obstruct(build_sol3().geometry, 2);
        CHECK(r.verdict == Verdict::NonImmersible);
        CHECK(r.case_tag == ShapeCandidateCase::NoRealSolutionNegativeSquare);
        CHECK(r.split.lambda == doctest::Approx(0.0));
        CHECK(r.split.eta == doctest::Approx(-2.0));
    }
    SUBCASE("torus bundles") {
        for (double alpha : {2.0, 0.5 * (3.0 + std::sqrt(5.0))}) {
            const ObstructionResult r = obstruct(build_torus_bundle(alpha).geometry, 2);
            CHECK(r.verdict == Verdict::NonImmersible);
            CHECK(r.case_tag == ShapeCandidateCase::NoRealSolutionNegativeSquare);
            const double la = std::log(alpha);
            CHECK(r.split.eta == doctest::Approx(-2.0 * la * la));
        }
    }
    SUBCASE("grid sweep over kappa and tau") {
        for (double tau : {0.5, 1.0, 2.0})
            for (double kappa : {-1.0, 0.0, 1.0}) {
                if (std::abs(kappa - 4 * tau * tau) < 1e-12) continue;
                const ObstructionResult r =
                    obstruct(build_e_kappa_tau(kappa, tau).geometry, 2);
                CHECK(r.verdict == Verdict::NonImmersible);
            }
    }
}

TEST_CASE("obstruct: negative controls") {
    SUBCASE("round sphere is rejected by the eta != 0 precondition") {
        CHECK_THROWS_AS(obstruct(build_e_kappa_tau(4.0, 1.0).geometry, 2), EtaZeroError);
        CHECK_THROWS_AS(obstruct(build_e_kappa_tau(1.0, 0.5).geometry, 2), EtaZeroError);
        CHECK_THROWS_AS(obstruct(build_flat().geometry, 2), EtaZeroError);
    }
    SUBCASE("anisotropic ricci is rejected") {
        // solvable frame with rates (1, -2): the Ricci tensor distinguishes
        // e1 from e2, so no split about e3 exists
        ChristoffelArray c{};
        c[0][0][2] = -1.0;
        c[0][2][0] = 1.0;
        c[1][1][2] = 2.0;
        c[1][2][1] = -2.0;
        const FrameGeometry g = FrameGeometry::create("aniso", c, 2);
        CHECK_THROWS_AS(obstruct(g, 2), NotEtaEinsteinError);
    }
    SUBCASE("wrong split axis is rejected") {
        CHECK_THROWS_AS(obstruct(build_sol3().geometry, 0), NotEtaEinsteinError);
    }
}

TEST_CASE("candidate invariants hold for every returned candidate") {
    for (double tau : {0.5, 1.0, 2.0})
        for (double kappa : {-1.0, 0.0, 1.0}) {
            if (std::abs(kappa - 4 * tau * tau) < 1e-12) continue;
            const ObstructionResult r = obstruct(build_e_kappa_tau(kappa, tau).geometry, 2);
            for (const Mat3& a : r.candidates)
                CHECK(system_residual(a, r.split.lambda, r.split.eta) < 1e-12);
        }
}
