#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "ifslab/geometry.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/shark_teeth.hpp"

namespace ifslab {

/// Shortest decimal string with 17 significant digits; round-trips doubles
/// bit-exactly through strtod.
std::string format_double(double value);
double parse_double(const std::string& text);

/// CSV with header `x,y,label`. Labels must not contain commas or newlines
/// (ours never do).
void write_point_cloud_csv(const std::filesystem::path& path, const PointCloud& cloud);

/// Reads a cloud written by write_point_cloud_csv. Malformed input reports
/// the offending line number. The resolution is not part of the CSV; pass it
/// explicitly (it rides along in the sidecar metadata written by the CLI).
PointCloud read_point_cloud_csv(const std::filesystem::path& path, double resolution);

/// Sidecar metadata path: foo.csv -> foo.meta.json.
std::filesystem::path metadata_path_for(const std::filesystem::path& csv_path);

void write_cloud_metadata(const std::filesystem::path& csv_path,
                          const std::string& space, const PointCloud& cloud,
                          const nlohmann::json& params);

/// Reads the cloud plus its sidecar resolution; `resolution_override` wins
/// when positive. Throws if neither source provides a resolution.
PointCloud read_point_cloud_auto(const std::filesystem::path& csv_path,
                                 double resolution_override = 0.0);

/// IFS serialization: numeric parameters are stored as 17-significant-digit
/// decimal strings so round-trips are bit-exact regardless of the JSON
/// library's float formatting.
nlohmann::json ifs_to_json(const IfsSystem& system);
IfsSystem ifs_from_json(const nlohmann::json& doc);
void write_ifs_json(const std::filesystem::path& path, const IfsSystem& system);
IfsSystem read_ifs_json(const std::filesystem::path& path);

/// Free-arc instance description: {"arc": [[x,y],...], "sides": [[[x,y],...]],
/// "sample_step": s}.
nlohmann::json free_arc_config_to_json(const Polyline& arc,
                                       const std::vector<Polyline>& sides,
                                       double sample_step);
FreeArcSpace read_free_arc_config(const std::filesystem::path& path);

/// Writes via a temp file in the same directory followed by a rename.
void atomic_write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace ifslab
