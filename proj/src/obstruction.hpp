#pragma once

// Non-immersibility pipeline for targets R^4: eta-Einstein split of the
// Ricci tensor, the eigenvalue system for diagonal shape-operator
// candidates, and the Codazzi test on any real candidates.
//
// With Ric = lambda g + eta (xi (x) xi) and a candidate diagonalized as
// diag(a1, a2, a3) about xi, the system is
//
//   a1 a2 = (lambda + eta)/2,   a2 a3 = a1 a3 = (lambda - eta)/2.

#include <string>
#include <vector>

#include "frame_geometry.hpp"
#include "linalg.hpp"

namespace spinim {

enum class ShapeCandidateCase {
    NoRealSolutionLambdaEqualsMinusEta,  ///< lambda = -eta: system inconsistent
    NoRealSolutionNegativeSquare,        ///< lambda + eta < 0: a1^2 would be negative
    Candidates,                          ///< two real diagonal candidates
    UnderdeterminedLambdaEqualsEta,      ///< lambda = eta: a3 = 0, a1 a2 = lambda free
};

const char* to_string(ShapeCandidateCase c);

struct ShapeCandidates {
    ShapeCandidateCase tag{};
    std::vector<Mat3> candidates;  ///< empty unless tag == Candidates
};

/// Solves the eigenvalue system; candidates are
/// +-diag(sqrt((lambda+eta)/2), sqrt((lambda+eta)/2),
///        (lambda-eta)/sqrt(2(lambda+eta))).
/// Throws EtaZeroError when |eta| <= tol.
ShapeCandidates solve_shape_candidates(double lambda, double eta, double tol = 1e-10);

enum class Verdict { NonImmersible, Inconclusive };

const char* to_string(Verdict v);

struct ObstructionResult {
    Mat3 ricci;
    RicciSplit split;
    ShapeCandidateCase case_tag{};
    std::vector<Mat3> candidates;
    std::vector<double> codazzi_residuals;  ///< per candidate, max over (i,j)
    Verdict verdict{};
    std::string diagnostic;
};

/// Full pipeline: Ricci -> split -> candidates -> Codazzi test with zero
/// right-hand side (flat target). NonImmersible when no real candidate
/// exists or every candidate fails the Codazzi test; Inconclusive when a
/// candidate passes or the system is underdetermined.
/// Throws NotEtaEinsteinError / EtaZeroError when the split does not apply.
ObstructionResult obstruct(const FrameGeometry& g, int xi_index, double tolerance = 1e-9);

} // namespace spinim
