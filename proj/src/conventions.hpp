#pragma once

// Self-checks for the sign conventions the build fixes: the gamma-matrix
// representation, the spin-connection sign and the curvature sign. Each
// check pins a convention against catalog data; a failing check means the
// build is broken, not the input.

#include <string>
#include <vector>

#include "json_io.hpp"

namespace spinim {

struct ConventionCheck {
    std::string name;
    double residual = 0.0;
    bool pass = false;
    std::string detail;
};

struct ConventionsReport {
    std::vector<ConventionCheck> checks;

    bool pass() const {
        for (const ConventionCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

ConventionsReport run_conventions(double tol = 1e-10);

json conventions_to_json(const ConventionsReport& r);

} // namespace spinim
