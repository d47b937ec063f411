#include "obstruction.hpp"

#include <cmath>
#include <sstream>

#include "compatibility.hpp"
#include "errors.hpp"

namespace spinim {

const char* to_string(ShapeCandidateCase c) {
    switch (c) {
        case ShapeCandidateCase::NoRealSolutionLambdaEqualsMinusEta:
            return "no_real_solution_lambda_equals_minus_eta";
        case ShapeCandidateCase::NoRealSolutionNegativeSquare:
            return "no_real_solution_negative_square";
        case ShapeCandidateCase::Candidates:
            return "candidates";
        case ShapeCandidateCase::UnderdeterminedLambdaEqualsEta:
            return "underdetermined_lambda_equals_eta";
    }
    return "unknown";
}

const char* to_string(Verdict v) {
    return v == Verdict::NonImmersible ? "non_immersible" : "inconclusive";
}

ShapeCandidates solve_shape_candidates(double lambda, double eta, double tol) {
    if (std::abs(eta) <= tol)
        throw EtaZeroError("solve_shape_candidates: eta vanishes (Einstein case)");

    ShapeCandidates out;
    if (std::abs(lambda + eta) <= tol) {
        out.tag = ShapeCandidateCase::NoRealSolutionLambdaEqualsMinusEta;
        return out;
    }
    if (std::abs(lambda - eta) <= tol) {
        // a3 = 0 and a1 a2 = lambda: a one-parameter family, no unique
        // candidate to test.
        out.tag = ShapeCandidateCase::UnderdeterminedLambdaEqualsEta;
        return out;
    }
    if (lambda + eta < 0.0) {
        // a3 != 0 forces a1 = a2, so a1^2 = (lambda + eta)/2 < 0.
        out.tag = ShapeCandidateCase::NoRealSolutionNegativeSquare;
        return out;
    }

    out.tag = ShapeCandidateCase::Candidates;
    const double a = std::sqrt(0.5 * (lambda + eta));
    const double a3 = (lambda - eta) / std::sqrt(2.0 * (lambda + eta));
    out.candidates.push_back(Mat3::diag(a, a, a3));
    out.candidates.push_back(Mat3::diag(-a, -a, -a3));
    return out;
}

ObstructionResult obstruct(const FrameGeometry& g, int xi_index, double tolerance) {
    ObstructionResult r;
    r.ricci = g.ricci();
    r.split = eta_einstein_split(r.ricci, xi_index);

    const ShapeCandidates sc = solve_shape_candidates(r.split.lambda, r.split.eta);
    r.case_tag = sc.tag;
    r.candidates = sc.candidates;

    switch (sc.tag) {
        case ShapeCandidateCase::NoRealSolutionLambdaEqualsMinusEta:
        case ShapeCandidateCase::NoRealSolutionNegativeSquare:
            r.verdict = Verdict::NonImmersible;
            r.diagnostic = "no real diagonal shape operator satisfies the eigenvalue system";
            return r;
        case ShapeCandidateCase::UnderdeterminedLambdaEqualsEta:
            r.verdict = Verdict::Inconclusive;
            r.diagnostic =
                "lambda = eta leaves the candidate family underdetermined; no conclusion";
            return r;
        case ShapeCandidateCase::Candidates:
            break;
    }

    // Target is flat R^4: the Codazzi right-hand side is zero, so the
    // candidate must be a Codazzi tensor outright.
    bool any_codazzi = false;
    for (const Mat3& a : r.candidates) {
        double worst = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                worst = std::max(worst, norm(codazzi_tensor(g, a, i, j)));
        r.codazzi_residuals.push_back(worst);
        if (worst <= tolerance) any_codazzi = true;
    }

    if (any_codazzi) {
        r.verdict = Verdict::Inconclusive;
        r.diagnostic = "a candidate satisfies the Codazzi equations; the necessary "
                       "condition is met";
    } else {
        r.verdict = Verdict::NonImmersible;
        std::ostringstream msg;
        msg << "both candidates fail the Codazzi test (residuals";
        for (double c : r.codazzi_residuals) msg << " " << c;
        msg << ")";
        r.diagnostic = msg.str();
    }
    return r;
}

} // namespace spinim
