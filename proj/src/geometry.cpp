#include "ifslab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace ifslab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct CellKey {
    std::int64_t ix;
    std::int64_t iy;
    bool operator==(const CellKey& o) const { return ix == o.ix && iy == o.iy; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.ix) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(k.iy) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// Uniform bucket grid over a fixed point set.
class BucketGrid {
public:
    BucketGrid(const std::vector<Point2>& pts, double cell)
        : points_(pts), cell_(cell) {
        buckets_.reserve(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const CellKey k = key_of(pts[i]);
            if (buckets_.empty() && i == 0) {
                min_ix_ = max_ix_ = k.ix;
                min_iy_ = max_iy_ = k.iy;
            }
            min_ix_ = std::min(min_ix_, k.ix);
            max_ix_ = std::max(max_ix_, k.ix);
            min_iy_ = std::min(min_iy_, k.iy);
            max_iy_ = std::max(max_iy_, k.iy);
            buckets_[k].push_back(i);
        }
    }

    CellKey key_of(const Point2& p) const {
        return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
                static_cast<std::int64_t>(std::floor(p.y / cell_))};
    }

    /// Exact nearest distance from q to the point set, abandoning early once
    /// the running minimum drops to `abandon_at` or below (the caller then
    /// only needs to know the true minimum is <= abandon_at).
    double min_dist(const Point2& q, double abandon_at) const {
        std::size_t idx = 0;
        return search(q, abandon_at, idx);
    }

    std::size_t nearest_index(const Point2& q) const {
        std::size_t idx = 0;
        search(q, -1.0, idx);
        return idx;
    }

private:
    double search(const Point2& q, double abandon_at, std::size_t& best_idx) const {
        const CellKey c = key_of(q);
        // Chebyshev cell distance from q's cell to the occupied bounding box:
        // rings below it are empty, rings beyond the far corner are too.
        auto axis_gap = [](std::int64_t v, std::int64_t lo, std::int64_t hi) {
            if (v < lo) return lo - v;
            if (v > hi) return v - hi;
            return std::int64_t{0};
        };
        const std::int64_t first_ring =
            std::max(axis_gap(c.ix, min_ix_, max_ix_), axis_gap(c.iy, min_iy_, max_iy_));
        const std::int64_t last_ring =
            std::max(std::max(std::llabs(c.ix - min_ix_), std::llabs(c.ix - max_ix_)),
                     std::max(std::llabs(c.iy - min_iy_), std::llabs(c.iy - max_iy_)));
        double best = std::numeric_limits<double>::infinity();
        for (std::int64_t ring = first_ring; ring <= last_ring; ++ring) {
            if (best <= abandon_at) return best;
            // Points in cells at Chebyshev cell-distance `ring` are at least
            // (ring-1)*cell away, so further rings cannot improve on `best`.
            if (ring > 0 && (static_cast<double>(ring) - 1.0) * cell_ > best) {
                return best;
            }
            for (std::int64_t dx = -ring; dx <= ring; ++dx) {
                const std::int64_t ix = c.ix + dx;
                if (ix < min_ix_ || ix > max_ix_) continue;
                const bool edge = std::llabs(dx) == ring;
                const std::int64_t step = edge ? 1 : 2 * ring;
                for (std::int64_t dy = -ring; dy <= ring; dy += std::max<std::int64_t>(step, 1)) {
                    const std::int64_t iy = c.iy + dy;
                    if (iy < min_iy_ || iy > max_iy_) continue;
                    auto it = buckets_.find({ix, iy});
                    if (it == buckets_.end()) continue;
                    for (std::size_t idx : it->second) {
                        const double d = dist(points_[idx], q);
                        if (d < best) {
                            best = d;
                            best_idx = idx;
                        }
                    }
                }
            }
        }
        return best;
    }
    const std::vector<Point2>& points_;
    double cell_;
    std::int64_t min_ix_ = 0, max_ix_ = 0, min_iy_ = 0, max_iy_ = 0;
    std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> buckets_;
};

double directed_naive(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    double worst = 0.0;
    for (const Point2& p : a) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point2& q : b) {
            best = std::min(best, dist(p, q));
            if (best <= worst) break;  // cannot raise the max
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double directed_grid(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    double min_x = b[0].x, max_x = b[0].x, min_y = b[0].y, max_y = b[0].y;
    for (const Point2& q : b) {
        min_x = std::min(min_x, q.x);
        max_x = std::max(max_x, q.x);
        min_y = std::min(min_y, q.y);
        max_y = std::max(max_y, q.y);
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    if (diag <= 0.0) return directed_naive(a, b);
    const double cell = std::max(diag / std::sqrt(static_cast<double>(b.size())),
                                 diag * 1e-9);
    BucketGrid grid(b, cell);
    double worst = 0.0;
    for (const Point2& p : a) {
        const double m = grid.min_dist(p, worst);
        worst = std::max(worst, m);
    }
    return worst;
}

// Andrew monotone chain; returns hull vertices (possibly collinear-degenerate).
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point2& a, const Point2& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    auto cross = [](const Point2& o, const Point2& a, const Point2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

bool point_is_finite(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

PolarPoint::PolarPoint(double radius, double angle) {
    if (!std::isfinite(radius) || !std::isfinite(angle)) {
        throw std::invalid_argument("polar point must have finite coordinates");
    }
    if (radius < 0.0) {
        throw std::invalid_argument("polar radius must be nonnegative");
    }
    r = radius;
    if (r == 0.0) {
        alpha = 0.0;
        return;
    }
    alpha = std::fmod(angle, kTwoPi);
    if (alpha < 0.0) alpha += kTwoPi;
    if (alpha == kTwoPi) alpha = 0.0;
}

Point2 polar_to_cartesian(const PolarPoint& p) {
    return {p.r * std::cos(p.alpha), p.r * std::sin(p.alpha)};
}

PolarPoint cartesian_to_polar(const Point2& p) {
    if (!point_is_finite(p)) {
        throw std::invalid_argument("cannot convert non-finite point to polar");
    }
    const double r = std::sqrt(p.x * p.x + p.y * p.y);
    if (r == 0.0) return PolarPoint(0.0, 0.0);
    return PolarPoint(r, std::atan2(p.y, p.x));
}

double dist(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

double polar_dist(const PolarPoint& a, const PolarPoint& b) {
    const double s = a.r * a.r + b.r * b.r -
                     2.0 * a.r * b.r * std::cos(a.alpha - b.alpha);
    return std::sqrt(std::max(s, 0.0));
}

Polyline Polyline::create(std::vector<Point2> vertices, std::vector<std::string> labels) {
    if (vertices.size() < 2) {
        throw std::invalid_argument("polyline needs at least two vertices");
    }
    if (!labels.empty() && labels.size() != vertices.size()) {
        throw std::invalid_argument("polyline labels must be empty or match vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!point_is_finite(vertices[i])) {
            throw std::invalid_argument("polyline vertex is not finite");
        }
        if (i > 0 && vertices[i].x == vertices[i - 1].x &&
            vertices[i].y == vertices[i - 1].y) {
            throw std::invalid_argument("consecutive polyline vertices must be distinct");
        }
    }
    Polyline line;
    line.vertices = std::move(vertices);
    line.labels = std::move(labels);
    return line;
}

double polyline_length(const Polyline& line) {
    double total = 0.0;
    for (std::size_t i = 1; i < line.vertices.size(); ++i) {
        total += dist(line.vertices[i - 1], line.vertices[i]);
    }
    return total;
}

std::vector<Point2> dedup_points(const std::vector<Point2>& points, double tol,
                                 std::vector<std::size_t>* kept) {
    // Hash grid of cell size `tol`; checking the 3x3 neighborhood catches
    // near-duplicates that straddle a cell boundary.
    std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> seen;
    std::vector<Point2> out;
    out.reserve(points.size());
    if (kept) kept->clear();
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Point2& p = points[i];
        const CellKey c{static_cast<std::int64_t>(std::floor(p.x / tol)),
                        static_cast<std::int64_t>(std::floor(p.y / tol))};
        bool duplicate = false;
        for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
            for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy) {
                auto it = seen.find({c.ix + dx, c.iy + dy});
                if (it == seen.end()) continue;
                for (std::size_t idx : it->second) {
                    if (dist(out[idx], p) < tol) {
                        duplicate = true;
                        break;
                    }
                }
            }
        }
        if (duplicate) continue;
        seen[c].push_back(out.size());
        out.push_back(p);
        if (kept) kept->push_back(i);
    }
    return out;
}

PointCloud PointCloud::create(std::vector<Point2> points,
                              std::vector<std::string> labels,
                              double resolution) {
    if (points.empty()) {
        throw std::invalid_argument("point cloud must be nonempty");
    }
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw std::invalid_argument("point cloud resolution must be positive");
    }
    if (!labels.empty() && labels.size() != points.size()) {
        throw std::invalid_argument("labels must be empty or one per point");
    }
    for (const Point2& p : points) {
        if (!point_is_finite(p)) {
            throw std::invalid_argument("point cloud contains non-finite point");
        }
    }

    std::vector<std::size_t> kept;
    PointCloud cloud;
    cloud.resolution = resolution;
    cloud.points = dedup_points(points, resolution / 10.0, &kept);
    if (!labels.empty()) {
        cloud.labels.reserve(kept.size());
        for (std::size_t idx : kept) cloud.labels.push_back(labels[idx]);
    }
    return cloud;
}

PointCloud PointCloud::create(std::vector<Point2> points, double resolution) {
    return create(std::move(points), {}, resolution);
}

PointCloud filter_by_label(const PointCloud& cloud, const std::string& label) {
    if (!cloud.has_labels()) {
        throw std::invalid_argument("cloud has no labels to filter by");
    }
    std::vector<Point2> pts;
    std::vector<std::string> labs;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        if (cloud.labels[i] == label) {
            pts.push_back(cloud.points[i]);
            labs.push_back(cloud.labels[i]);
        }
    }
    if (pts.empty()) {
        throw std::invalid_argument("no points labeled '" + label + "'");
    }
    return PointCloud::create(std::move(pts), std::move(labs), cloud.resolution);
}

double directed_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b,
                          HausdorffMethod method) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("empty set has no Hausdorff distance");
    }
    if (method == HausdorffMethod::naive ||
        std::min(a.size(), b.size()) < 512) {
        return directed_naive(a, b);
    }
    return directed_grid(a, b);
}

double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          HausdorffMethod method) {
    if (a.points.empty() || b.points.empty()) {
        throw std::invalid_argument("empty set has no Hausdorff distance");
    }
    return std::max(directed_hausdorff(a.points, b.points, method),
                    directed_hausdorff(b.points, a.points, method));
}

double diameter(const std::vector<Point2>& points) {
    if (points.empty()) {
        throw std::invalid_argument("empty set has no diameter");
    }
    const std::vector<Point2>* pts = &points;
    std::vector<Point2> hull;
    if (points.size() > 64) {
        hull = convex_hull(points);
        pts = &hull;
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pts->size(); ++i) {
        for (std::size_t j = i + 1; j < pts->size(); ++j) {
            best = std::max(best, dist((*pts)[i], (*pts)[j]));
        }
    }
    return best;
}

double diameter(const PointCloud& cloud) { return diameter(cloud.points); }

struct NearestPointIndex::Impl {
    std::vector<Point2> points;
    BucketGrid grid;

    Impl(std::vector<Point2> pts, double cell)
        : points(std::move(pts)), grid(points, cell) {}
};

NearestPointIndex::NearestPointIndex(std::vector<Point2> points, double cell_size) {
    if (points.empty()) {
        throw std::invalid_argument("nearest-point index needs points");
    }
    if (!(cell_size > 0.0)) {
        throw std::invalid_argument("nearest-point index needs a positive cell size");
    }
    impl_ = std::make_unique<Impl>(std::move(points), cell_size);
}

NearestPointIndex::~NearestPointIndex() = default;
NearestPointIndex::NearestPointIndex(NearestPointIndex&&) noexcept = default;
NearestPointIndex& NearestPointIndex::operator=(NearestPointIndex&&) noexcept = default;

std::size_t NearestPointIndex::nearest(const Point2& query) const {
    return impl_->grid.nearest_index(query);
}

double NearestPointIndex::nearest_distance(const Point2& query) const {
    return dist(impl_->points[nearest(query)], query);
}

const std::vector<Point2>& NearestPointIndex::points() const { return impl_->points; }

}  // namespace ifslab
