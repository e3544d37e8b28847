#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace ifslab {

/// Planar point. All coordinates are finite; constructions validate this.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

bool point_is_finite(const Point2& p);

/// Polar coordinates with r >= 0 and alpha canonicalized to [0, 2*pi).
/// A zero radius forces alpha = 0 so that equal points compare equal.
struct PolarPoint {
    double r = 0.0;
    double alpha = 0.0;

    PolarPoint() = default;
    PolarPoint(double radius, double angle);
};

Point2 polar_to_cartesian(const PolarPoint& p);
PolarPoint cartesian_to_polar(const Point2& p);

/// Euclidean distance.
double dist(const Point2& a, const Point2& b);

/// Distance via the cosine formula sqrt(r_x^2 + r_y^2 - 2 r_x r_y cos(a_x - a_y)).
/// Agrees with dist() after conversion; kept separate so both routes can be
/// checked against each other.
double polar_dist(const PolarPoint& a, const PolarPoint& b);

/// Ordered vertex chain with at least two vertices, consecutive vertices
/// distinct. Optional per-vertex labels (empty or one per vertex).
struct Polyline {
    std::vector<Point2> vertices;
    std::vector<std::string> labels;

    static Polyline create(std::vector<Point2> vertices,
                           std::vector<std::string> labels = {});
};

/// Sum of segment lengths. For a polyline this is exactly the supremum of
/// inscribed chord sums over parameter partitions.
double polyline_length(const Polyline& line);

/// Finite labeled sample of a compact planar set. `resolution` is the largest
/// gap between the ideal set and the sample; downstream tolerances are stated
/// as multiples of it. Construction deduplicates at resolution/10.
struct PointCloud {
    std::vector<Point2> points;
    std::vector<std::string> labels;   // empty, or one label per point
    double resolution = 0.0;

    static PointCloud create(std::vector<Point2> points,
                             std::vector<std::string> labels,
                             double resolution);
    static PointCloud create(std::vector<Point2> points, double resolution);

    bool has_labels() const { return !labels.empty(); }
    std::size_t size() const { return points.size(); }
};

/// Subset of the cloud whose label satisfies `pred`; keeps the resolution.
/// Throws if the selection is empty.
PointCloud filter_by_label(const PointCloud& cloud,
                           const std::string& label);

enum class HausdorffMethod { naive, grid };

/// max(sup_a inf_b d, sup_b inf_a d). The grid method buckets points into a
/// uniform spatial grid and searches rings outward with early abandoning; it
/// returns the identical value as the naive scan and falls back to the naive
/// scan below 512 points.
double hausdorff_distance(const PointCloud& a, const PointCloud& b,
                          HausdorffMethod method = HausdorffMethod::grid);

/// One-sided sup_a inf_b distance, exposed for diagnostics.
double directed_hausdorff(const std::vector<Point2>& a,
                          const std::vector<Point2>& b,
                          HausdorffMethod method = HausdorffMethod::grid);

/// Max pairwise distance; 0 for a singleton. Uses the convex hull above a
/// small size so large clouds stay cheap, which does not change the value.
double diameter(const PointCloud& cloud);
double diameter(const std::vector<Point2>& points);

/// Keeps the first representative of every cluster of points closer than
/// `tol`. When `kept` is given it receives the surviving input indices.
std::vector<Point2> dedup_points(const std::vector<Point2>& points, double tol,
                                 std::vector<std::size_t>* kept = nullptr);

/// Exact nearest-neighbor queries against a fixed point set, backed by a
/// uniform bucket grid.
class NearestPointIndex {
public:
    NearestPointIndex(std::vector<Point2> points, double cell_size);
    ~NearestPointIndex();
    NearestPointIndex(NearestPointIndex&&) noexcept;
    NearestPointIndex& operator=(NearestPointIndex&&) noexcept;

    std::size_t nearest(const Point2& query) const;
    double nearest_distance(const Point2& query) const;
    const std::vector<Point2>& points() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ifslab
