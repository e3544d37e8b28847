#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ifslab/claims.hpp"
#include "ifslab/ordinals.hpp"
#include "ifslab/svg.hpp"

namespace {

constexpr const char* kVersion = "0.2.0";

int run(int argc, char** argv) {
    CLI::App app{"ifslab: build counterexample spaces for iterated function "
                 "systems and verify their metric properties"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_version_flag("--version", kVersion);

    std::optional<std::uint64_t> seed;
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::optional<double> tolerance;
    app.add_option("--seed", seed, "RNG seed (required for sampled checks)");
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--out", out_path, "Output path");
    app.add_option("--tolerance", tolerance,
                   "Scale applied to resolution-based claim tolerances");

    // build ---------------------------------------------------------------
    auto* build = app.add_subcommand("build", "Sample a space into CSV + metadata");
    std::string space;
    build->add_option("space", space, "One of: snake, sharkteeth, dendrite, "
                                      "dendrite-straight, omega-omega")
        ->required();
    std::optional<std::size_t> depth, rows, samples;
    std::optional<double> angular_step, radial_step;
    build->add_option("--depth", depth, "Construction depth / truncation");
    build->add_option("--rows", rows, "Shark teeth rows");
    build->add_option("--samples", samples, "Samples per row / per arc");
    build->add_option("--angular-step", angular_step, "Snake angular step");
    build->add_option("--radial-step", radial_step, "Snake radial step");

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a claim suite, write a JSON report");
    std::string suite;
    verify->add_option("suite", suite, "One of: snake, sharkteeth, dendrite, "
                                       "scattered, all")
        ->required();

    // render --------------------------------------------------------------
    auto* render = app.add_subcommand("render", "Render a cloud CSV as SVG");
    std::string render_input;
    render->add_option("input", render_input, "Cloud CSV")->required()
        ->check(CLI::ExistingFile);
    double width = 900.0, height = 900.0, point_radius = 1.6;
    render->add_option("--width", width, "Canvas width (px)");
    render->add_option("--height", height, "Canvas height (px)");
    render->add_option("--point-radius", point_radius, "Point radius (px)");

    // height ----------------------------------------------------------------
    auto* height_cmd = app.add_subcommand(
        "height", "Cantor-Bendixson height of the ordinal interval [0, beta]");
    std::string cnf_text;
    height_cmd->add_option("ordinal", cnf_text,
                           "Ordinal in CNF, e.g. \"w^2*3 + w + 7\" or \"w^w\"")
        ->required();

    // min-word-length -------------------------------------------------------
    auto* mwl = app.add_subcommand(
        "min-word-length",
        "Smallest composition length whose image diameters fall below a threshold");
    std::string system_path, cloud_path;
    double threshold = 0.0;
    std::size_t m_max = 12;
    std::optional<std::string> free_arc_path;
    double resolution_override = 0.0;
    mwl->add_option("--system", system_path, "IFS JSON file")->required()
        ->check(CLI::ExistingFile);
    mwl->add_option("--cloud", cloud_path, "Cloud CSV file")->required()
        ->check(CLI::ExistingFile);
    mwl->add_option("--threshold", threshold, "Diameter threshold")->required();
    mwl->add_option("--m-max", m_max, "Largest word length to try");
    mwl->add_option("--free-arc", free_arc_path,
                    "Free-arc instance JSON for sharkteeth_* maps");
    mwl->add_option("--resolution", resolution_override,
                    "Cloud resolution when no sidecar metadata exists");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the parse error
        return code == 0 ? 0 : 2;
    }

    ifslab::RunConfig cfg;
    if (config_path) cfg = ifslab::load_run_config(*config_path);
    if (seed) {
        cfg.seed = *seed;
        cfg.has_seed = true;
    }
    if (tolerance) cfg.tolerance_scale = *tolerance;

    if (*build) {
        if (depth) {
            cfg.snake_depth = *depth;
            cfg.dendrite_depth = *depth;
            cfg.straight_depth = *depth;
            cfg.omega_depth = *depth;
        }
        if (rows) cfg.shark_rows = *rows;
        if (samples) {
            cfg.shark_samples_per_row = *samples;
            cfg.dendrite_samples_per_arc = *samples;
            cfg.straight_samples_per_arc = *samples;
        }
        if (angular_step) cfg.snake_angular_step = *angular_step;
        if (radial_step) cfg.snake_radial_step = *radial_step;
        const std::filesystem::path out = out_path ? *out_path : space + ".csv";
        const ifslab::BuildOutput result = ifslab::cmd_build(space, cfg, out);
        std::cout << "wrote " << result.csv.string() << " (" << result.points
                  << " points) and " << result.metadata.string() << "\n";
        return 0;
    }

    if (*verify) {
        const std::filesystem::path report =
            out_path ? *out_path : (suite + "-report.json");
        std::vector<ifslab::ClaimReport> reports;
        const bool ok = ifslab::cmd_verify(suite, cfg, report, &reports);
        for (const ifslab::ClaimReport& r : reports) {
            std::cout << "[" << ifslab::to_string(r.status) << "] " << r.claim_id
                      << " (" << r.runtime_ms << " ms)\n";
        }
        std::cout << "report: " << report.string() << "\n";
        return ok ? 0 : 1;
    }

    if (*render) {
        std::filesystem::path out;
        if (out_path) {
            out = *out_path;
        } else {
            out = render_input;
            out.replace_extension(".svg");
        }
        ifslab::SvgStyle style;
        style.width = width;
        style.height = height;
        style.point_radius = point_radius;
        ifslab::cmd_render(render_input, out, style);
        std::cout << "wrote " << out.string() << "\n";
        return 0;
    }

    if (*height_cmd) {
        const ifslab::CnfOrdinal beta = ifslab::parse_cnf(cnf_text);
        const ifslab::CnfOrdinal h = ifslab::height(beta);
        std::cout << "height(" << ifslab::format_cnf(beta) << ") = "
                  << ifslab::format_cnf(h)
                  << (h.is_limit() ? "  (limit ordinal: no topological self-map "
                                     "cover system exists)"
                                   : "")
                  << "\n";
        return 0;
    }

    if (*mwl) {
        const auto result = ifslab::cmd_min_word_length(
            system_path, cloud_path, threshold, m_max, cfg,
            free_arc_path ? std::optional<std::filesystem::path>(*free_arc_path)
                          : std::nullopt,
            resolution_override);
        if (result) {
            std::cout << "m = " << *result << "\n";
            return 0;
        }
        std::cout << "exceeded\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
