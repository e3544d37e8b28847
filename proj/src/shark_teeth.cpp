#include "ifslab/shark_teeth.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

namespace ifslab {

namespace {

/// Resample a polyline at spacing <= step, keeping every original vertex.
std::vector<Point2> resample_polyline(const Polyline& line, double step) {
    std::vector<Point2> out;
    out.push_back(line.vertices.front());
    for (std::size_t i = 1; i < line.vertices.size(); ++i) {
        const Point2& a = line.vertices[i - 1];
        const Point2& b = line.vertices[i];
        const double len = dist(a, b);
        const auto pieces = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(len / step)));
        for (std::size_t k = 1; k <= pieces; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(pieces);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    return out;
}

std::vector<double> cumulative_lengths(const std::vector<Point2>& pts) {
    std::vector<double> cum(pts.size(), 0.0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        cum[i] = cum[i - 1] + dist(pts[i - 1], pts[i]);
    }
    return cum;
}

/// Point at arc length `s` along a sampled chain (clamped to the ends).
Point2 point_at_length(const std::vector<Point2>& pts,
                       const std::vector<double>& cum, double s) {
    s = std::clamp(s, 0.0, cum.back());
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    if (it == cum.end()) return pts.back();
    const std::size_t hi = static_cast<std::size_t>(it - cum.begin());
    if (hi == 0) return pts.front();
    const double seg = cum[hi] - cum[hi - 1];
    const double t = (seg > 0.0) ? (s - cum[hi - 1]) / seg : 0.0;
    const Point2& a = pts[hi - 1];
    const Point2& b = pts[hi];
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Registered free-arc instance: the sampled arc with an inverse index plus
/// the side loops.
struct FreeArcData {
    std::vector<Point2> arc_pts;
    std::vector<double> arc_cum;
    double arc_len = 0.0;
    double on_tol = 0.0;
    std::unique_ptr<NearestPointIndex> arc_index;
    struct Loop {
        std::vector<Point2> pts;
        std::vector<double> cum;
        double len = 0.0;
    };
    std::vector<Loop> loops;

    // Normalized arc-length parametrization rho and its nearest-sample inverse.
    Point2 rho(double t) const {
        return point_at_length(arc_pts, arc_cum, t * arc_len);
    }
    double rho_inv(const Point2& p) const {
        return arc_cum[arc_index->nearest(p)] / arc_len;
    }
    bool on_arc(const Point2& p) const {
        return arc_index->nearest_distance(p) <= on_tol;
    }
};

std::vector<std::shared_ptr<const FreeArcData>>& instance_table() {
    static std::vector<std::shared_ptr<const FreeArcData>> table;
    return table;
}

const FreeArcData& instance_at(int slot) {
    auto& table = instance_table();
    if (slot < 0 || static_cast<std::size_t>(slot) >= table.size()) {
        throw std::invalid_argument("unknown free-arc instance slot " +
                                    std::to_string(slot));
    }
    return *table[static_cast<std::size_t>(slot)];
}

}  // namespace

double wave(double t) {
    if (!std::isfinite(t)) {
        throw std::domain_error("wave expects a finite argument");
    }
    const double u = t - std::floor(t);
    return (u <= 0.5) ? u : 1.0 - u;
}

double scaled_wave(std::size_t n, double t) {
    return std::ldexp(wave(std::ldexp(t, static_cast<int>(n))),
                      -static_cast<int>(n));
}

std::size_t row_index(std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("row index n_k is undefined for k = 0 "
                                    "(log2 log2 1 does not exist)");
    }
    // n_k = floor(log2 log2 (k+1)), via exact thresholds 2^(2^n) <= k+1.
    const std::uint64_t v = static_cast<std::uint64_t>(k) + 1;
    std::size_t n = 0;
    while (n < 5 && v >= (1ULL << (1ULL << (n + 1)))) ++n;
    return n;
}

SharkTeethSpace build_shark_teeth(std::size_t rows, std::size_t samples_per_row) {
    if (rows < 1 || samples_per_row < 2) {
        throw std::invalid_argument("shark teeth need rows >= 1 and >= 2 samples");
    }
    const double dt = 1.0 / static_cast<double>(samples_per_row - 1);
    std::vector<Point2> points;
    std::vector<std::string> labels;
    points.reserve((rows + 1) * samples_per_row);
    for (std::size_t s = 0; s < samples_per_row; ++s) {
        points.push_back({static_cast<double>(s) * dt, 0.0});
        labels.push_back("bone");
    }
    for (std::size_t k = 1; k <= rows; ++k) {
        const std::size_t nk = row_index(k);
        const std::string label = "M_" + std::to_string(k);
        for (std::size_t s = 0; s < samples_per_row; ++s) {
            const double t = static_cast<double>(s) * dt;
            points.push_back({t, scaled_wave(nk, t) / static_cast<double>(k)});
            labels.push_back(label);
        }
    }
    // Resolution covers the sampling gap along the rows (slope <= 1, so the
    // chord gap is at most sqrt(2) dt). Rows beyond the truncation lie within
    // 1/(2(rows+1)) of the bone; consumers account for that separately.
    SharkTeethSpace space;
    space.rows = rows;
    space.samples_per_row = samples_per_row;
    space.cloud = PointCloud::create(std::move(points), std::move(labels),
                                     std::sqrt(2.0) * dt);
    return space;
}

double tent(double x) {
    if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-12) {
        throw std::domain_error("tent map is defined on [0, 1]");
    }
    x = std::clamp(x, 0.0, 1.0);
    return (x <= 0.5) ? x : 1.0 - x;
}

double tent_contraction(std::size_t i, double x) {
    if (i > 2) {
        throw std::invalid_argument("tent contraction index must be 0, 1 or 2");
    }
    return (static_cast<double>(i) + 2.0 * tent(x)) / 3.0;
}

FreeArcSpace make_free_arc_space(const Polyline& arc,
                                 const std::vector<Polyline>& sides,
                                 double sample_step) {
    if (!(sample_step > 0.0)) {
        throw std::invalid_argument("free arc sampling step must be positive");
    }
    if (sides.size() > 2) {
        throw std::invalid_argument("a free arc has at most two sides");
    }

    // Long side loops magnify the arc-sample granularity: the image of the
    // sampled arc under rho_j . rho^{-1} is spaced (loop length) * dt. The
    // arc is therefore oversampled so those images still cover the sides
    // within twice the cloud resolution.
    const double arc_len_raw = polyline_length(arc);
    double loop_max = 0.0;
    for (const Polyline& side : sides) {
        double len = polyline_length(side);
        if (dist(side.vertices.front(), side.vertices.back()) > sample_step) {
            len *= 2.0;  // open sides get closed into out-and-back loops
        }
        loop_max = std::max(loop_max, len);
    }
    double arc_step = sample_step;
    if (loop_max > 1.5 * arc_len_raw) {
        arc_step = sample_step * 1.5 * arc_len_raw / loop_max;
    }

    FreeArcSpace space;
    std::vector<Point2> arc_pts = resample_polyline(arc, arc_step);
    {
        // rho must be injective on samples: nothing may collapse under dedup
        // except genuinely coincident consecutive vertices.
        std::vector<Point2> unique = dedup_points(arc_pts, arc_step / 10.0);
        if (unique.size() + 2 < arc_pts.size()) {
            throw std::invalid_argument(
                "arc parametrization is not injective at this resolution");
        }
    }
    const NearestPointIndex arc_probe(arc_pts, 8.0 * arc_step);

    std::vector<Point2> cloud_pts = arc_pts;
    std::vector<std::string> cloud_labels(arc_pts.size(), "L");

    // Free-arc test data: arc points touched by the closure of the sides,
    // clustered at the sampling scale; more than two clusters disqualifies L.
    std::vector<Point2> touch;

    for (std::size_t j = 0; j < sides.size(); ++j) {
        std::vector<Point2> side_pts = resample_polyline(sides[j], sample_step);
        // A side must be based at one of the arc endpoints.
        const double to_start = std::min(dist(side_pts.front(), arc_pts.front()),
                                         dist(side_pts.front(), arc_pts.back()));
        if (to_start > 1.5 * sample_step) {
            throw std::invalid_argument("side " + std::to_string(j + 1) +
                                        " does not start at an arc endpoint");
        }
        const std::string label = "P_" + std::to_string(j + 1);
        for (const Point2& p : side_pts) {
            cloud_pts.push_back(p);
            cloud_labels.push_back(label);
            if (arc_probe.nearest_distance(p) <= 1.5 * sample_step) {
                bool merged = false;
                for (const Point2& t : touch) {
                    if (dist(t, p) <= 4.0 * sample_step) {
                        merged = true;
                        break;
                    }
                }
                if (!merged) touch.push_back(p);
            }
        }
        if (touch.size() > 2) {
            throw std::runtime_error("L is not a free arc at this resolution");
        }
        // Close open sides into out-and-back loops so rho_j(0) = rho_j(1).
        if (dist(side_pts.front(), side_pts.back()) > sample_step) {
            std::vector<Point2> loop = side_pts;
            for (std::size_t i = side_pts.size() - 1; i-- > 0;) {
                loop.push_back(side_pts[i]);
            }
            side_pts = std::move(loop);
        }
        space.sides.push_back(Polyline::create(side_pts));
        space.side_cumlen.push_back(cumulative_lengths(side_pts));
    }

    space.arc = Polyline::create(arc_pts);
    space.arc_cumlen = cumulative_lengths(arc_pts);
    space.cloud = PointCloud::create(std::move(cloud_pts), std::move(cloud_labels),
                                     sample_step);
    return space;
}

Point2 free_arc_apply_F(int slot, std::size_t i, const Point2& p) {
    if (i > 2) {
        throw std::invalid_argument("free-arc F index must be 0, 1 or 2");
    }
    const FreeArcData& data = instance_at(slot);
    if (data.on_arc(p)) {
        return data.rho(tent_contraction(i, data.rho_inv(p)));
    }
    return data.rho(static_cast<double>(i) / 3.0);
}

Point2 free_arc_apply_G(int slot, std::size_t j, const Point2& p) {
    const FreeArcData& data = instance_at(slot);
    if (j < 1 || j > data.loops.size()) {
        throw std::invalid_argument("free-arc G index out of range");
    }
    const FreeArcData::Loop& loop = data.loops[j - 1];
    if (data.on_arc(p)) {
        return point_at_length(loop.pts, loop.cum, data.rho_inv(p) * loop.len);
    }
    return loop.pts.front();
}

FractalSystem build_free_arc_system(const FreeArcSpace& space) {
    auto data = std::make_shared<FreeArcData>();
    data->arc_pts = space.arc.vertices;
    data->arc_cum = space.arc_cumlen;
    data->arc_len = space.arc_cumlen.back();
    data->on_tol = space.cloud.resolution / 2.0;
    const double arc_spacing =
        data->arc_len / static_cast<double>(data->arc_pts.size() - 1);
    data->arc_index = std::make_unique<NearestPointIndex>(
        data->arc_pts, 8.0 * arc_spacing);
    for (std::size_t j = 0; j < space.sides.size(); ++j) {
        FreeArcData::Loop loop;
        loop.pts = space.sides[j].vertices;
        loop.cum = space.side_cumlen[j];
        loop.len = loop.cum.back();
        data->loops.push_back(std::move(loop));
    }

    auto& table = instance_table();
    const int slot = static_cast<int>(table.size());
    table.push_back(std::move(data));

    FractalSystem result;
    result.instance_slot = slot;
    result.f_count = 3;
    std::vector<MapSpec> maps;
    for (std::size_t i = 0; i < 3; ++i) {
        maps.push_back(MapSpec::make_named(
            "sharkteeth_F",
            {static_cast<double>(i), static_cast<double>(slot)}));
    }
    for (std::size_t j = 1; j <= space.sides.size(); ++j) {
        maps.push_back(MapSpec::make_named(
            "sharkteeth_G",
            {static_cast<double>(j), static_cast<double>(slot)}));
    }
    result.system = IfsSystem::create(std::move(maps), IfsSystem::Mode::topological);
    return result;
}

FreeArcSpace default_prop1_space(double sample_step) {
    // A straight free arc running through the unit bone, flanked by short
    // segments. Both side loops have length 0.7, so any composition ending in
    // a side retraction shrinks at least as fast as the tent words do.
    const Polyline arc = Polyline::create({{-0.4, 0.0}, {1.4, 0.0}});
    const std::vector<Polyline> sides = {
        Polyline::create({{-0.4, 0.0}, {-0.75, 0.0}}),
        Polyline::create({{1.4, 0.0}, {1.75, 0.0}}),
    };
    return make_free_arc_space(arc, sides, sample_step);
}

FreeArcSpace attached_shark_space(const SharkTeethSpace& shark) {
    const double dt = 1.0 / static_cast<double>(shark.samples_per_row - 1);
    // Serpentine tour of the whole space based at (1, 0): down the bone,
    // out along each row (rows end on the bone because the wave vanishes at
    // integers), repeating for every row.
    std::vector<Point2> tour;
    auto push = [&tour](const Point2& p) {
        if (tour.empty() || dist(tour.back(), p) > 0.0) tour.push_back(p);
    };
    for (std::size_t k = 1; k <= shark.rows; ++k) {
        const std::size_t nk = row_index(k);
        for (std::size_t s = shark.samples_per_row; s-- > 0;) {
            push({static_cast<double>(s) * dt, 0.0});
        }
        for (std::size_t s = 0; s < shark.samples_per_row; ++s) {
            const double t = static_cast<double>(s) * dt;
            push({t, scaled_wave(nk, t) / static_cast<double>(k)});
        }
    }
    push({1.0, 0.0});

    const Polyline arc = Polyline::create({{1.0, 0.0}, {2.0, 0.0}});
    const std::vector<Polyline> sides = {
        Polyline::create(tour),
        Polyline::create({{2.0, 0.0}, {2.4, 0.0}}),
    };
    return make_free_arc_space(arc, sides, dt);
}

}  // namespace ifslab
