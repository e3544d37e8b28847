#include "ifslab/snake.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ifslab/ifs.hpp"

namespace ifslab {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kHalfPi = 0.5 * kPi;

// Arc-length layout of the free subarc K = O_1 I_1 O_2 I_2, traversed from
// the free end of O_1 at angle 2*pi down to the junction with O_3 at radius
// 1/3, angle 0.
constexpr double kLenO1 = 1.5 * kPi;
constexpr double kLenI1 = 0.5;
constexpr double kLenO2 = 0.75 * kPi;
constexpr double kLenI2 = 1.0 / 2.0 - 1.0 / 3.0;
constexpr double kS2 = kLenO1 + kLenI1;
constexpr double kS3 = kS2 + kLenO2;
constexpr double kLenK = kS3 + kLenI2;

constexpr std::uint64_t kCoverSamplingSeed = 0x5eedc0de;
constexpr std::size_t kCoverPairBudget = 20000;

/// Unit-speed parametrization of K.
Point2 cover_arc_point(double s) {
    s = std::clamp(s, 0.0, kLenK);
    if (s <= kLenO1) {
        const double alpha = kTwoPi - s;
        return {std::cos(alpha), std::sin(alpha)};
    }
    if (s <= kS2) {
        return {0.0, 1.0 - (s - kLenO1)};
    }
    if (s <= kS3) {
        const double alpha = kHalfPi + 2.0 * (s - kS2);
        return {0.5 * std::cos(alpha), 0.5 * std::sin(alpha)};
    }
    return {0.5 - (s - kS3), 0.0};
}

struct Projection {
    double distance;
    double s;
};

Projection project_onto_circle(const Point2& p, double radius, double s_begin,
                               bool reversed) {
    // Circle component covering angles [pi/2, 2*pi]; arc length runs from
    // s_begin over radius * (angle span). `reversed` means arc length grows
    // as the angle decreases (O_1); otherwise it grows with the angle (O_2).
    const PolarPoint q = cartesian_to_polar(p);
    if (q.alpha >= kHalfPi || q.r == 0.0) {
        const double alpha = (q.r == 0.0) ? kHalfPi : q.alpha;
        const double along = reversed ? (kTwoPi - alpha) : (alpha - kHalfPi);
        return {std::fabs(q.r - radius), s_begin + radius * along};
    }
    // Angles in (0, pi/2) are off the arc; snap to the closer endpoint.
    const Point2 end_high{0.0, radius};                  // angle pi/2
    const Point2 end_low{radius, 0.0};                   // angle 2*pi
    const double d_high = dist(p, end_high);
    const double d_low = dist(p, end_low);
    const double span = radius * (kTwoPi - kHalfPi);
    if (d_high <= d_low) {
        return {d_high, s_begin + (reversed ? span : 0.0)};
    }
    return {d_low, s_begin + (reversed ? 0.0 : span)};
}

Projection project_onto_vertical(const Point2& p, double y_lo, double y_hi,
                                 double s_begin) {
    // Segment {0} x [y_lo, y_hi]; arc length runs downward from y_hi.
    const double y = std::clamp(p.y, y_lo, y_hi);
    return {std::hypot(p.x, p.y - y), s_begin + (y_hi - y)};
}

Projection project_onto_horizontal(const Point2& p, double x_lo, double x_hi,
                                   double s_begin) {
    // Segment [x_lo, x_hi] x {0}; arc length runs downward from x_hi.
    const double x = std::clamp(p.x, x_lo, x_hi);
    return {std::hypot(p.x - x, p.y), s_begin + (x_hi - x)};
}

/// Arc-length position of the retraction of p onto K. Everything at radius
/// <= 1/3 (the rest of the snake and the origin) collapses to the junction
/// s = len(K); other points project onto the nearest component of K.
double cover_arc_position(const Point2& p) {
    const double r = std::hypot(p.x, p.y);
    if (r <= 1.0 / 3.0 + 1e-12) return kLenK;
    Projection best = project_onto_circle(p, 1.0, 0.0, true);
    const Projection candidates[] = {
        project_onto_vertical(p, 0.5, 1.0, kLenO1),
        project_onto_circle(p, 0.5, kS2, false),
        project_onto_horizontal(p, 1.0 / 3.0, 0.5, kS3),
    };
    for (const Projection& c : candidates) {
        if (c.distance < best.distance) best = c;
    }
    return best.s;
}

std::vector<MapSpec> make_cover_maps(std::size_t m) {
    std::vector<MapSpec> maps;
    maps.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        maps.push_back(MapSpec::make_named(
            "snake_cover", {static_cast<double>(i), static_cast<double>(m)}));
    }
    return maps;
}

bool cover_maps_admissible(const SnakeSpace& snake, std::size_t m,
                           double* worst = nullptr) {
    double sup = 0.0;
    for (const MapSpec& g : make_cover_maps(m)) {
        const LipschitzReport rep =
            estimate_lipschitz(g, snake.cloud, kCoverPairBudget, kCoverSamplingSeed);
        sup = std::max(sup, rep.sup_ratio);
    }
    if (worst) *worst = sup;
    return sup < 0.95;
}

}  // namespace

SnakeSpace build_snake(std::size_t depth, double angular_step, double radial_step) {
    if (depth < 1) {
        throw std::invalid_argument("snake depth must be at least 1");
    }
    if (!(angular_step > 0.0) || !(radial_step > 0.0)) {
        throw std::invalid_argument("snake sampling steps must be positive");
    }

    std::vector<Point2> points;
    std::vector<std::string> labels;
    for (std::size_t n = 1; n <= depth; ++n) {
        const double radius = 1.0 / static_cast<double>(n);
        const double span = kTwoPi - kHalfPi;
        const auto arc_count =
            static_cast<std::size_t>(std::ceil(span / angular_step)) + 1;
        const std::string o_label = "O_" + std::to_string(n);
        for (std::size_t k = 0; k < arc_count; ++k) {
            const double alpha =
                kHalfPi + span * static_cast<double>(k) / static_cast<double>(arc_count - 1);
            points.push_back({radius * std::cos(alpha), radius * std::sin(alpha)});
            labels.push_back(o_label);
        }

        const double r_lo = 1.0 / static_cast<double>(n + 1);
        const double r_span = radius - r_lo;
        const auto seg_count =
            static_cast<std::size_t>(std::ceil(r_span / radial_step)) + 1;
        const double angle = (n % 2 == 1) ? kHalfPi : 0.0;
        const double ca = std::cos(angle);
        const double sa = std::sin(angle);
        const std::string i_label = "I_" + std::to_string(n);
        for (std::size_t k = 0; k < seg_count; ++k) {
            const double r =
                r_lo + r_span * static_cast<double>(k) / static_cast<double>(seg_count - 1);
            points.push_back({r * ca, r * sa});
            labels.push_back(i_label);
        }
    }
    points.push_back({0.0, 0.0});
    labels.push_back("origin");

    SnakeSpace snake;
    snake.depth = depth;
    snake.angular_step = angular_step;
    snake.radial_step = radial_step;
    snake.cloud = PointCloud::create(std::move(points), std::move(labels),
                                     std::max(angular_step, radial_step));
    return snake;
}

double radial_profile(double r) {
    if (!std::isfinite(r) || r < 0.0 || r > 1.0 + 1e-9) {
        throw std::domain_error("radial profile is defined on [0, 1]");
    }
    r = std::min(r, 1.0);
    if (r == 0.0) return 0.0;
    // Branch selection: r in [1/(n+1), 1/n]. floor(1/r) lands on the higher-n
    // branch at shared endpoints, where both branches agree anyway.
    const double n = std::max(1.0, std::floor(1.0 / r));
    return (r * n * (n + 1.0) + 2.0) / ((n + 2.0) * (n + 3.0));
}

PolarPoint snake_weak_map(const PolarPoint& p) {
    return PolarPoint(radial_profile(p.r), p.alpha);
}

MapSpec snake_map() { return MapSpec::make_named("snake_f"); }

double snake_cover_arc_length() { return kLenK; }

Point2 snake_cover_eval(std::size_t i, std::size_t m, const Point2& p) {
    const double s = cover_arc_position(p);
    const double target = kLenK * (static_cast<double>(i - 1) +
                                   s / kLenK) / static_cast<double>(m);
    return cover_arc_point(target);
}

std::size_t find_cover_map_count(const SnakeSpace& snake) {
    for (std::size_t m = 1; m <= 4096; m *= 2) {
        if (cover_maps_admissible(snake, m)) return m;
    }
    throw std::runtime_error("no admissible cover map count up to 4096");
}

std::vector<MapSpec> build_cover_maps(const SnakeSpace& snake, std::size_t m) {
    if (m < 1) {
        throw std::invalid_argument("cover map count must be at least 1");
    }
    double worst = 0.0;
    if (!cover_maps_admissible(snake, m, &worst)) {
        const std::size_t minimal = find_cover_map_count(snake);
        throw std::runtime_error(
            "m = " + std::to_string(m) + " is too small: sampled Lipschitz ratio " +
            std::to_string(worst) + " >= 0.95; smallest admissible m found by " +
            "doubling search is " + std::to_string(minimal));
    }
    return make_cover_maps(m);
}

SandersReport sanders_report(std::size_t N, double bound) {
    if (N < 2) {
        throw std::invalid_argument("sanders report needs N >= 2");
    }
    constexpr double kArcStep = 1e-4;
    SandersReport report;
    report.o_lengths.reserve(N);
    report.i_lengths.reserve(N);
    report.finite_part_lengths.reserve(N);
    double cumulative = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const double radius = 1.0 / static_cast<double>(n);
        const double span = kTwoPi - kHalfPi;
        const auto count = static_cast<std::size_t>(std::ceil(span / kArcStep));
        // Chord sum over a uniform angle grid; each chord is 2 r sin(h/2).
        const double h = span / static_cast<double>(count);
        report.o_lengths.push_back(2.0 * radius * std::sin(0.5 * h) *
                                   static_cast<double>(count));
        report.i_lengths.push_back(radius - 1.0 / static_cast<double>(n + 1));
        cumulative += report.o_lengths.back() + report.i_lengths.back();
        report.finite_part_lengths.push_back(cumulative);
        if (!report.diverged && cumulative > bound) {
            report.diverged = true;
            report.divergence_witness = {n, cumulative};
        }
    }
    report.tail_lower_bounds.reserve(N);
    for (std::size_t n = 1; n <= N; ++n) {
        double tail = 0.0;
        for (std::size_t k = n + 1; k <= N; ++k) tail += report.o_lengths[k - 1];
        report.tail_lower_bounds.push_back(tail);
    }
    return report;
}

}  // namespace ifslab
