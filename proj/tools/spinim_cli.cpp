// Command-line front end for the spinim shared library. Everything goes
// through the C API; this translation unit only parses flags, shuttles JSON
// and renders reports.

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinim/spinim.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

int exit_code_of(spinim_status status) {
    switch (status) {
        case SPINIM_OK: return kExitPass;
        case SPINIM_CHECK_FAILED:
        case SPINIM_CALIBRATION_FAILED: return kExitCheckFailed;
        default: return kExitBadInput;
    }
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { spinim_string_free(ptr); }
    std::string str() const { return ptr != nullptr ? std::string(ptr) : std::string(); }
};

struct GeometryHandle {
    spinim_geometry* ptr = nullptr;
    ~GeometryHandle() { spinim_geometry_free(ptr); }
};

[[noreturn]] void die(const std::string& msg, int code = kExitBadInput) {
    std::fprintf(stderr, "spinim: %s\n", msg.c_str());
    std::exit(code);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool file_exists(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return static_cast<bool>(in);
}

struct GeometryOptions {
    std::string geometry;
    std::string fixture;
    double kappa = 0.0, tau = 0.0, alpha = 0.0;
    bool has_kappa = false, has_tau = false, has_alpha = false;
};

void add_geometry_flags(CLI::App* cmd, GeometryOptions& opts, bool allow_fixture) {
    cmd->add_option("--geometry", opts.geometry,
                    "built-in geometry name or path to a geometry JSON file");
    cmd->add_option("--kappa", opts.kappa, "base curvature for e-kappa-tau")
        ->each([&opts](const std::string&) { opts.has_kappa = true; });
    cmd->add_option("--tau", opts.tau, "bundle curvature for e-kappa-tau")
        ->each([&opts](const std::string&) { opts.has_tau = true; });
    cmd->add_option("--alpha", opts.alpha, "eigenvalue for torus-bundle")
        ->each([&opts](const std::string&) { opts.has_alpha = true; });
    if (allow_fixture)
        cmd->add_option("--fixture", opts.fixture,
                        "built-in fixture: flat_plane | hypersphere | product_slice");
}

/// Resolves --geometry/--fixture to a geometry handle, plus the fixture
/// bundle when one was requested.
GeometryHandle make_geometry(const GeometryOptions& opts, json* fixture_bundle) {
    std::string spec;
    if (!opts.fixture.empty()) {
        if (!opts.geometry.empty()) die("--geometry and --fixture are mutually exclusive");
        OwnedString bundle_str, err;
        const spinim_status st = spinim_fixture(opts.fixture.c_str(), &bundle_str.ptr, &err.ptr);
        if (st != SPINIM_OK) die(err.str(), exit_code_of(st));
        json bundle = json::parse(bundle_str.str());
        if (fixture_bundle != nullptr) *fixture_bundle = bundle;
        spec = bundle["geometry"].dump();
    } else if (!opts.geometry.empty()) {
        if (file_exists(opts.geometry)) {
            spec = read_file(opts.geometry);
        } else {
            json j;
            j["name"] = opts.geometry;
            if (opts.has_kappa) j["kappa"] = opts.kappa;
            if (opts.has_tau) j["tau"] = opts.tau;
            if (opts.has_alpha) j["alpha"] = opts.alpha;
            spec = j.dump();
        }
    } else {
        die("one of --geometry or --fixture is required");
    }

    GeometryHandle handle;
    OwnedString err;
    const spinim_status st = spinim_geometry_create(spec.c_str(), &handle.ptr, &err.ptr);
    if (st != SPINIM_OK) die(err.str(), exit_code_of(st));
    return handle;
}

void print_verdict_line(bool pass, double tolerance) {
    std::printf("result: %s (tolerance = %g)\n", pass ? "PASS" : "FAIL", tolerance);
}

void render_check_text(const json& r) {
    std::printf("compatibility check: %s\n", r["geometry"].get<std::string>().c_str());
    const json& w = r["worst_indices"];
    std::printf("  gauss     max residual = %.3e  (worst i,j,k = %d,%d,%d)\n",
                r["gauss"].get<double>(), w["gauss"][0].get<int>(), w["gauss"][1].get<int>(),
                w["gauss"][2].get<int>());
    std::printf("  codazzi   max residual = %.3e  (worst i,j = %d,%d)\n",
                r["codazzi"].get<double>(), w["codazzi"][0].get<int>(),
                w["codazzi"][1].get<int>());
    const json& s = r["structural"];
    std::printf("  nabla_T   max residual = %.3e\n", s["nabla_T"].get<double>());
    std::printf("  df        max residual = %.3e\n", s["df"].get<double>());
    std::printf("  unit_norm residual     = %.3e\n", s["unit_norm"].get<double>());
    print_verdict_line(r["pass"].get<bool>(), r["tolerance"].get<double>());
}

void render_killing_text(const json& r) {
    std::printf("killing/dirac check: %s (ambient %s, branch %+d)\n",
                r["geometry"].get<std::string>().c_str(),
                r["ambient"].get<std::string>().c_str(), r["branch"].get<int>());
    std::printf("  eta = %g + %gi, kappa = %g\n", r["eta"]["re"].get<double>(),
                r["eta"]["im"].get<double>(), r["kappa"].get<double>());
    std::printf("  killing    max residual = %.3e\n", r["killing"]["max"].get<double>());
    std::printf("  dirac      residual     = %.3e (H = %g, %s)\n",
                r["dirac"]["residual"].get<double>(),
                r["dirac"]["mean_curvature"].get<double>(),
                r["dirac"]["h_convention"].get<std::string>().c_str());
    std::printf("  norm cond. max residual = %.3e\n",
                r["norm_condition"]["max"].get<double>());
    print_verdict_line(r["pass"].get<bool>(), r["tolerance"].get<double>());
}

void render_obstruct_text(const json& r) {
    std::printf("obstruction check: %s (target R^4, xi = e%d)\n",
                r["geometry"].get<std::string>().c_str(),
                r["split"]["xi_index"].get<int>() + 1);
    const json& ric = r["ricci"];
    std::printf("  ricci diag = (%g, %g, %g)\n", ric[0][0].get<double>(),
                ric[1][1].get<double>(), ric[2][2].get<double>());
    std::printf("  split: lambda = %g, eta = %g\n", r["split"]["lambda"].get<double>(),
                r["split"]["eta_einstein"].get<double>());
    std::printf("  case: %s\n", r["case"].get<std::string>().c_str());
    for (std::size_t c = 0; c < r["candidates"].size(); ++c) {
        const json& m = r["candidates"][c];
        std::printf("  candidate %zu: diag(%g, %g, %g), codazzi residual %.3e\n", c + 1,
                    m[0][0].get<double>(), m[1][1].get<double>(), m[2][2].get<double>(),
                    r["codazzi_residuals"][c].get<double>());
    }
    std::printf("verdict: %s\n", r["verdict"].get<std::string>().c_str());
}

void render_catalog_text(const json& r) {
    std::printf("built-in geometries:\n");
    for (const json& e : r["entries"]) {
        std::string params;
        for (const json& p : e["parameters"])
            params += (params.empty() ? "" : ", ") + p.get<std::string>();
        std::printf("  %-14s %s%s%s\n", e["name"].get<std::string>().c_str(),
                    e["summary"].get<std::string>().c_str(),
                    params.empty() ? "" : "; parameters: ", params.c_str());
    }
}

void render_conventions_text(const json& r) {
    std::printf("convention self-checks:\n");
    for (const json& c : r["checks"]) {
        std::printf("  %-55s %s (residual %.2e)\n",
                    (c["name"].get<std::string>() + ":").c_str(),
                    c["pass"].get<bool>() ? "pass" : "FAIL", c["residual"].get<double>());
    }
    std::printf("result: %s\n", r["pass"].get<bool>() ? "PASS" : "FAIL");
}

int emit(spinim_status st, const OwnedString& report, const OwnedString& err,
         const std::string& format, void (*text_renderer)(const json&)) {
    if (report.ptr == nullptr) die(err.str(), exit_code_of(st));
    if (format == "json") {
        std::fputs(report.ptr, stdout);
    } else {
        text_renderer(json::parse(report.str()));
    }
    return exit_code_of(st);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinim - spin-geometry verification toolkit for framed 3-manifolds"};
    app.require_subcommand(1);

    std::string format = "text";
    double tolerance = 1e-9;
    auto add_common_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--tolerance", tolerance, "residual pass threshold")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    GeometryOptions check_opts, killing_opts, obstruct_opts;
    std::string check_data, killing_data;

    CLI::App* check = app.add_subcommand("check", "Gauss/Codazzi compatibility residuals");
    add_geometry_flags(check, check_opts, true);
    check->add_option("--data", check_data, "immersion data JSON file");
    add_common_flags(check);

    CLI::App* obstruct =
        app.add_subcommand("obstruct", "non-immersibility verdict for a flat 4D target");
    add_geometry_flags(obstruct, obstruct_opts, false);
    add_common_flags(obstruct);

    CLI::App* killing =
        app.add_subcommand("killing", "generalized Killing/Dirac spinor residuals");
    add_geometry_flags(killing, killing_opts, true);
    killing->add_option("--data", killing_data,
                        "immersion data JSON file (may contain a 'spinor' member)");
    add_common_flags(killing);

    CLI::App* catalog = app.add_subcommand("catalog-list", "list built-in geometries");
    add_common_flags(catalog);
    CLI::App* conventions =
        app.add_subcommand("conventions", "print the resolved sign conventions");
    add_common_flags(conventions);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitBadInput;
    }

    if (check->parsed()) {
        json bundle;
        GeometryHandle g = make_geometry(check_opts, &bundle);
        std::string data;
        if (!check_data.empty()) {
            data = read_file(check_data);
        } else if (!bundle.is_null()) {
            data = bundle["data"].dump();
        } else {
            die("check: --data is required unless --fixture is used");
        }
        OwnedString report, err;
        const spinim_status st =
            spinim_check_compatibility(g.ptr, data.c_str(), tolerance, &report.ptr, &err.ptr);
        return emit(st, report, err, format, render_check_text);
    }

    if (killing->parsed()) {
        json bundle;
        GeometryHandle g = make_geometry(killing_opts, &bundle);
        json data;
        if (!killing_data.empty()) {
            data = json::parse(read_file(killing_data), nullptr, false);
            if (data.is_discarded()) die("killing: malformed JSON in --data file");
        } else if (!bundle.is_null()) {
            data = bundle["data"];
        } else {
            die("killing: --data is required unless --fixture is used");
        }
        if (!bundle.is_null() && !data.contains("spinor") && bundle.contains("spinor"))
            data["spinor"] = bundle["spinor"];
        const std::string data_str = data.dump();
        OwnedString report, err;
        const spinim_status st =
            spinim_check_killing(g.ptr, data_str.c_str(), tolerance, &report.ptr, &err.ptr);
        return emit(st, report, err, format, render_killing_text);
    }

    if (obstruct->parsed()) {
        GeometryHandle g = make_geometry(obstruct_opts, nullptr);
        OwnedString report, err;
        const spinim_status st = spinim_obstruct(g.ptr, -1, tolerance, &report.ptr, &err.ptr);
        return emit(st, report, err, format, render_obstruct_text);
    }

    if (catalog->parsed()) {
        OwnedString report, err;
        const spinim_status st = spinim_catalog_list(&report.ptr, &err.ptr);
        return emit(st, report, err, format, render_catalog_text);
    }

    if (conventions->parsed()) {
        OwnedString report, err;
        const spinim_status st = spinim_conventions(&report.ptr, &err.ptr);
        return emit(st, report, err, format, render_conventions_text);
    }

    return kExitBadInput;
}
