#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ifslab/geometry.hpp"
#include "ifslab/svg.hpp"

namespace ifslab {

/// One verified (or evidential) statement about a constructed space.
/// `evidence_only` is reserved for statements that are theorems elsewhere:
/// the suite reports supporting diagnostics but never claims a proof.
struct ClaimReport {
    enum class Status { pass, fail, evidence_only };

    std::string claim_id;
    Status status = Status::fail;
    nlohmann::json worst_witness;
    double tolerance = 0.0;
    nlohmann::json budget;
    std::int64_t runtime_ms = 0;
};

std::string to_string(ClaimReport::Status status);
nlohmann::json claim_report_to_json(const ClaimReport& report);

/// Construction parameters and knobs shared by the CLI commands and the
/// verification suites. JSON config files override the defaults field by
/// field; command-line flags override the file.
struct RunConfig {
    std::uint64_t seed = 0;
    bool has_seed = false;
    double tolerance_scale = 1.0;

    std::size_t snake_depth = 25;
    double snake_angular_step = 2e-3;
    double snake_radial_step = 1e-3;

    std::size_t shark_rows = 16;
    std::size_t shark_samples_per_row = 600;

    std::size_t dendrite_depth = 6;
    std::size_t dendrite_samples_per_arc = 512;
    std::size_t straight_depth = 12;
    std::size_t straight_samples_per_arc = 256;

    std::size_t omega_depth = 4;

    double prop1_sample_step = 1e-3;

    std::size_t weak_pair_budget = 100000;
    std::size_t lip_pair_budget = 100000;
};

RunConfig load_run_config(const std::filesystem::path& path);

std::vector<std::string> verify_suites();
bool is_verify_suite(const std::string& name);

/// Runs every claim registered for the suite. Deterministic for a fixed
/// seed up to runtime_ms.
std::vector<ClaimReport> run_suite(const std::string& suite, const RunConfig& cfg);

/// Wraps the reports in the on-disk document: {"schema_version": 1,
/// "claims": [...]}.
nlohmann::json reports_to_json(const std::vector<ClaimReport>& reports);

struct BuildOutput {
    std::filesystem::path csv;
    std::filesystem::path metadata;
    std::size_t points = 0;
};

extern const std::vector<std::string> kBuildSpaces;

BuildOutput cmd_build(const std::string& space, const RunConfig& cfg,
                      const std::filesystem::path& out_csv);

/// Returns true when every non-evidence claim passed; writes the JSON report.
bool cmd_verify(const std::string& suite, const RunConfig& cfg,
                const std::filesystem::path& report_path,
                std::vector<ClaimReport>* out_reports = nullptr);

void cmd_render(const std::filesystem::path& input_csv,
                const std::filesystem::path& out_svg, const SvgStyle& style);

/// Smallest word length m <= m_max whose composition-diameter certificate
/// passes at `threshold`; nullopt means "exceeded".
std::optional<std::size_t> cmd_min_word_length(
    const std::filesystem::path& system_json, const std::filesystem::path& cloud_csv,
    double threshold, std::size_t m_max, const RunConfig& cfg,
    const std::optional<std::filesystem::path>& free_arc_json = std::nullopt,
    double resolution_override = 0.0);

}  // namespace ifslab
