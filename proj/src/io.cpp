#include "ifslab/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ifslab {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json point_to_json(const Point2& p) {
    return json::array({format_double(p.x), format_double(p.y)});
}

Point2 point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::runtime_error("expected a [x, y] pair");
    }
    auto get = [](const json& v) {
        return v.is_string() ? parse_double(v.get<std::string>()) : v.get<double>();
    };
    return {get(j[0]), get(j[1])};
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_double(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || errno == ERANGE) {
        throw std::runtime_error("malformed number '" + text + "'");
    }
    return v;
}

void atomic_write_file(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << contents;
        if (!out.good()) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

void write_point_cloud_csv(const std::filesystem::path& path, const PointCloud& cloud) {
    std::string out = "x,y,label\n";
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        out += format_double(cloud.points[i].x);
        out += ',';
        out += format_double(cloud.points[i].y);
        out += ',';
        if (cloud.has_labels()) out += cloud.labels[i];
        out += '\n';
    }
    atomic_write_file(path, out);
}

PointCloud read_point_cloud_csv(const std::filesystem::path& path, double resolution) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                                 ": " + what);
    };
    if (!std::getline(in, line)) fail("missing header");
    ++line_no;
    if (line == "x,y,label\r") line.pop_back();
    if (line != "x,y,label") fail("expected header 'x,y,label'");

    std::vector<Point2> points;
    std::vector<std::string> labels;
    bool any_label = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = (c1 == std::string::npos) ? std::string::npos
                                                  : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            fail("expected three comma-separated fields");
        }
        Point2 p;
        try {
            p.x = parse_double(line.substr(0, c1));
            p.y = parse_double(line.substr(c1 + 1, c2 - c1 - 1));
        } catch (const std::exception& e) {
            fail(e.what());
        }
        points.push_back(p);
        std::string label = line.substr(c2 + 1);
        any_label = any_label || !label.empty();
        labels.push_back(std::move(label));
    }
    if (points.empty()) fail("no data rows");
    if (!any_label) labels.clear();
    return PointCloud::create(std::move(points), std::move(labels), resolution);
}

std::filesystem::path metadata_path_for(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".meta.json");
    return p;
}

void write_cloud_metadata(const std::filesystem::path& csv_path,
                          const std::string& space, const PointCloud& cloud,
                          const nlohmann::json& params) {
    json doc;
    doc["schema_version"] = 1;
    doc["space"] = space;
    doc["resolution"] = format_double(cloud.resolution);
    doc["points"] = cloud.points.size();
    doc["params"] = params;
    atomic_write_file(metadata_path_for(csv_path), doc.dump(2) + "\n");
}

PointCloud read_point_cloud_auto(const std::filesystem::path& csv_path,
                                 double resolution_override) {
    double resolution = resolution_override;
    if (!(resolution > 0.0)) {
        const auto meta = metadata_path_for(csv_path);
        if (std::filesystem::exists(meta)) {
            const json doc = json::parse(read_file(meta));
            resolution = parse_double(doc.at("resolution").get<std::string>());
        }
    }
    if (!(resolution > 0.0)) {
        throw std::runtime_error("resolution unknown for " + csv_path.string() +
                                 "; no sidecar metadata found, pass it explicitly");
    }
    return read_point_cloud_csv(csv_path, resolution);
}

nlohmann::json ifs_to_json(const IfsSystem& system) {
    json maps = json::array();
    for (const MapSpec& m : system.maps) {
        json j;
        if (m.kind == MapSpec::Kind::affine) {
            j["kind"] = "affine";
            j["matrix"] = json::array({format_double(m.matrix[0]), format_double(m.matrix[1]),
                                       format_double(m.matrix[2]), format_double(m.matrix[3])});
            j["translation"] = point_to_json(m.translation);
        } else {
            j["kind"] = "named";
            j["name"] = m.name;
            json params = json::array();
            for (double p : m.params) params.push_back(format_double(p));
            j["params"] = std::move(params);
        }
        if (m.claimed_lip) j["claimed_lip"] = format_double(*m.claimed_lip);
        maps.push_back(std::move(j));
    }
    json doc;
    doc["schema_version"] = 1;
    switch (system.mode) {
        case IfsSystem::Mode::strict: doc["mode"] = "strict"; break;
        case IfsSystem::Mode::weak: doc["mode"] = "weak"; break;
        case IfsSystem::Mode::topological: doc["mode"] = "topological"; break;
    }
    doc["maps"] = std::move(maps);
    return doc;
}

IfsSystem ifs_from_json(const nlohmann::json& doc) {
    const std::string mode_s = doc.at("mode").get<std::string>();
    IfsSystem::Mode mode;
    if (mode_s == "strict") {
        mode = IfsSystem::Mode::strict;
    } else if (mode_s == "weak") {
        mode = IfsSystem::Mode::weak;
    } else if (mode_s == "topological") {
        mode = IfsSystem::Mode::topological;
    } else {
        throw std::runtime_error("unknown IFS mode '" + mode_s + "'");
    }
    std::vector<MapSpec> maps;
    for (const json& j : doc.at("maps")) {
        std::optional<double> lip;
        if (j.contains("claimed_lip")) {
            lip = parse_double(j.at("claimed_lip").get<std::string>());
        }
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "affine") {
            const json& mat = j.at("matrix");
            std::array<double, 4> matrix{};
            for (std::size_t k = 0; k < 4; ++k) {
                matrix[k] = parse_double(mat.at(k).get<std::string>());
            }
            maps.push_back(MapSpec::make_affine(matrix,
                                                point_from_json(j.at("translation")), lip));
        } else if (kind == "named") {
            std::vector<double> params;
            if (j.contains("params")) {
                for (const json& p : j.at("params")) {
                    params.push_back(parse_double(p.get<std::string>()));
                }
            }
            maps.push_back(MapSpec::make_named(j.at("name").get<std::string>(),
                                               std::move(params), lip));
        } else {
            throw std::runtime_error("unknown map kind '" + kind + "'");
        }
    }
    return IfsSystem::create(std::move(maps), mode);
}

void write_ifs_json(const std::filesystem::path& path, const IfsSystem& system) {
    atomic_write_file(path, ifs_to_json(system).dump(2) + "\n");
}

IfsSystem read_ifs_json(const std::filesystem::path& path) {
    return ifs_from_json(json::parse(read_file(path)));
}

nlohmann::json free_arc_config_to_json(const Polyline& arc,
                                       const std::vector<Polyline>& sides,
                                       double sample_step) {
    json doc;
    doc["schema_version"] = 1;
    json arc_j = json::array();
    for (const Point2& p : arc.vertices) arc_j.push_back(point_to_json(p));
    doc["arc"] = std::move(arc_j);
    json sides_j = json::array();
    for (const Polyline& s : sides) {
        json side = json::array();
        for (const Point2& p : s.vertices) side.push_back(point_to_json(p));
        sides_j.push_back(std::move(side));
    }
    doc["sides"] = std::move(sides_j);
    doc["sample_step"] = format_double(sample_step);
    return doc;
}

FreeArcSpace read_free_arc_config(const std::filesystem::path& path) {
    const json doc = json::parse(read_file(path));
    std::vector<Point2> arc_pts;
    for (const json& p : doc.at("arc")) arc_pts.push_back(point_from_json(p));
    std::vector<Polyline> sides;
    if (doc.contains("sides")) {
        for (const json& s : doc.at("sides")) {
            std::vector<Point2> pts;
            for (const json& p : s) pts.push_back(point_from_json(p));
            sides.push_back(Polyline::create(std::move(pts)));
        }
    }
    const json& step = doc.at("sample_step");
    const double sample_step =
        step.is_string() ? parse_double(step.get<std::string>()) : step.get<double>();
    return make_free_arc_space(Polyline::create(std::move(arc_pts)), sides, sample_step);
}

}  // namespace ifslab
