#include "ifslab/dendrite.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ifslab {

namespace {

/// Zigzag vertex chain for L_n with outer leg radius b: origin, then K_n
/// vertices alternating between radius b (odd) and the small inner radius a
/// (even) at strictly increasing angles inside the sector, then the endpoint
/// rho_n = polar(2^{-n}, 2^{-n}).
std::vector<Point2> zigzag_vertices(std::size_t n, double b) {
    const double alpha = std::ldexp(1.0, -static_cast<int>(n));       // 2^-n
    const double w = std::ldexp(1.0, -static_cast<int>(n) - 2);       // 2^-n-2
    const double a = std::ldexp(1.0, -3 * static_cast<int>(n) - 2);   // 2^-3n-2
    const std::size_t legs = 2 * static_cast<std::size_t>(
        std::ceil(std::ldexp(1.0, 2 * static_cast<int>(n) - 1)));
    std::vector<Point2> v;
    v.reserve(legs + 2);
    v.push_back({0.0, 0.0});
    for (std::size_t j = 1; j <= legs; ++j) {
        const double theta = alpha - w +
            w * static_cast<double>(j) / static_cast<double>(legs + 1);
        const double r = (j % 2 == 1) ? b : a;
        v.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    v.push_back({alpha * std::cos(alpha), alpha * std::sin(alpha)});
    return v;
}

double chain_length(const std::vector<Point2>& v) {
    double len = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) len += dist(v[i - 1], v[i]);
    return len;
}

/// Solve the outer leg radius so the zigzag has length exactly 2^n.
std::vector<Point2> solve_arc(std::size_t n) {
    const double target = std::ldexp(1.0, static_cast<int>(n));
    const double a = std::ldexp(1.0, -3 * static_cast<int>(n) - 2);
    const double r_max = std::ldexp(1.0, -static_cast<int>(n)) *
                         (1.0 - std::ldexp(1.0, -2 * static_cast<int>(n) - 3));
    double lo = a * 1.000001;
    double hi = r_max;
    if (chain_length(zigzag_vertices(n, hi)) < target) {
        throw std::runtime_error("length budget 2^n infeasible within the sector "
                                 "at the chosen leg count (n = " + std::to_string(n) + ")");
    }
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (chain_length(zigzag_vertices(n, mid)) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return zigzag_vertices(n, hi);
}

Point2 chain_point_at(const std::vector<Point2>& v, const std::vector<double>& cum,
                      double s) {
    s = std::clamp(s, 0.0, cum.back());
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    if (it == cum.end()) return v.back();
    const std::size_t hi = static_cast<std::size_t>(it - cum.begin());
    if (hi == 0) return v.front();
    const double seg = cum[hi] - cum[hi - 1];
    const double t = (seg > 0.0) ? (s - cum[hi - 1]) / seg : 0.0;
    return {v[hi - 1].x + t * (v[hi].x - v[hi - 1].x),
            v[hi - 1].y + t * (v[hi].y - v[hi - 1].y)};
}

}  // namespace

DendriteSpace build_dendrite(std::size_t depth, std::size_t samples_per_arc) {
    if (depth < 1 || depth > 10) {
        throw std::invalid_argument(
            "dendrite depth must be in [1, 10]; the leg count grows as 4^n");
    }
    if (samples_per_arc < 2) {
        throw std::invalid_argument("dendrite needs at least 2 samples per arc");
    }

    DendriteSpace space;
    space.depth = depth;
    space.samples_per_arc = samples_per_arc;

    std::vector<Point2> points;
    std::vector<std::string> labels;
    points.push_back({0.0, 0.0});
    labels.push_back("origin");

    // Resolution is the covering radius of the samples over the represented
    // arcs; the 2^-depth tail allowance is added by consumers where needed.
    double worst_gap = 0.0;
    for (std::size_t n = 1; n <= depth; ++n) {
        std::vector<Point2> v = solve_arc(n);
        std::vector<double> cum(v.size(), 0.0);
        for (std::size_t i = 1; i < v.size(); ++i) {
            cum[i] = cum[i - 1] + dist(v[i - 1], v[i]);
        }
        const std::string label = "L_" + std::to_string(n);
        const double total = cum.back();
        for (std::size_t i = 0; i < samples_per_arc; ++i) {
            const double s = total * static_cast<double>(i) /
                             static_cast<double>(samples_per_arc - 1);
            points.push_back(chain_point_at(v, cum, s));
            labels.push_back(label);
        }
        // Covering radius along L_n: consecutive samples are arc-gap apart
        // along the chain but never farther than the sector diameter.
        const double arc_gap = total / static_cast<double>(samples_per_arc - 1);
        const double sector = 2.0 * std::ldexp(1.0, -static_cast<int>(n));
        worst_gap = std::max(worst_gap, std::min(arc_gap / 2.0, sector));
        space.arcs.push_back(Polyline::create(std::move(v)));
    }

    std::vector<std::size_t> kept;
    std::vector<Point2> deduped = dedup_points(points, worst_gap / 10.0, &kept);
    std::vector<std::string> dlabels;
    dlabels.reserve(kept.size());
    for (std::size_t k : kept) dlabels.push_back(labels[k]);

    // Map every (arc, fraction) sample to its surviving cloud index.
    std::vector<std::ptrdiff_t> where(points.size(), -1);
    for (std::size_t out = 0; out < kept.size(); ++out) {
        where[kept[out]] = static_cast<std::ptrdiff_t>(out);
    }
    space.sample_index.assign(depth, {});
    for (std::size_t n = 1; n <= depth; ++n) {
        auto& idx = space.sample_index[n - 1];
        idx.resize(samples_per_arc);
        const std::size_t offset = 1 + (n - 1) * samples_per_arc;
        for (std::size_t i = 0; i < samples_per_arc; ++i) {
            idx[i] = where[offset + i];
        }
        if (idx[0] < 0) idx[0] = 0;  // fraction 0 is the shared origin
    }

    space.cloud.points = std::move(deduped);
    space.cloud.labels = std::move(dlabels);
    space.cloud.resolution = worst_gap;
    return space;
}

StraightDendrite straighten_dendrite(std::size_t depth, std::size_t samples_per_arc) {
    if (depth < 1) {
        throw std::invalid_argument("straightened dendrite needs depth >= 1");
    }
    if (samples_per_arc < 2) {
        throw std::invalid_argument("straightened dendrite needs >= 2 samples per arc");
    }

    StraightDendrite space;
    space.depth = depth;
    space.samples_per_arc = samples_per_arc;

    std::vector<Point2> points;
    std::vector<std::string> labels;
    points.push_back({0.0, 0.0});
    labels.push_back("origin");
    for (std::size_t n = 1; n <= depth; ++n) {
        const double len = std::ldexp(1.0, -static_cast<int>(n));
        const double angle = len;  // alpha_n = 2^-n, matching the segment length
        space.segment_angles.push_back(angle);
        space.segment_lengths.push_back(len);
        const double ca = std::cos(angle);
        const double sa = std::sin(angle);
        const std::string label = "J_" + std::to_string(n);
        for (std::size_t i = 0; i < samples_per_arc; ++i) {
            const double r = len * static_cast<double>(i) /
                             static_cast<double>(samples_per_arc - 1);
            points.push_back({r * ca, r * sa});
            labels.push_back(label);
        }
    }

    const double resolution = 0.5 / static_cast<double>(samples_per_arc - 1);

    std::vector<std::size_t> kept;
    std::vector<Point2> deduped = dedup_points(points, resolution / 10.0, &kept);
    std::vector<std::string> dlabels;
    dlabels.reserve(kept.size());
    for (std::size_t k : kept) dlabels.push_back(labels[k]);

    std::vector<std::ptrdiff_t> where(points.size(), -1);
    for (std::size_t out = 0; out < kept.size(); ++out) {
        where[kept[out]] = static_cast<std::ptrdiff_t>(out);
    }
    space.sample_index.assign(depth, {});
    for (std::size_t n = 1; n <= depth; ++n) {
        auto& idx = space.sample_index[n - 1];
        idx.resize(samples_per_arc);
        const std::size_t offset = 1 + (n - 1) * samples_per_arc;
        for (std::size_t i = 0; i < samples_per_arc; ++i) {
            idx[i] = where[offset + i];
        }
        if (idx[0] < 0) idx[0] = 0;
    }

    space.cloud.points = std::move(deduped);
    space.cloud.labels = std::move(dlabels);
    space.cloud.resolution = resolution;
    return space;
}

std::vector<std::pair<std::size_t, std::size_t>> straightening_correspondence(
    const DendriteSpace& dendrite, const StraightDendrite& straight,
    std::size_t arc) {
    if (arc < 1 || arc > dendrite.depth || arc > straight.depth) {
        throw std::invalid_argument("arc index out of range");
    }
    if (dendrite.samples_per_arc != straight.samples_per_arc) {
        throw std::invalid_argument(
            "correspondence requires equal per-arc sample counts");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const auto& from = dendrite.sample_index[arc - 1];
    const auto& to = straight.sample_index[arc - 1];
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (from[i] >= 0 && to[i] >= 0) {
            pairs.emplace_back(static_cast<std::size_t>(from[i]),
                               static_cast<std::size_t>(to[i]));
        }
    }
    return pairs;
}

Point2 dendrite_h(const Point2& p) {
    const PolarPoint q = cartesian_to_polar(p);
    return polar_to_cartesian(PolarPoint(q.r / 2.0, q.alpha / 2.0));
}

Point2 dendrite_g1(const Point2& p) {
    const PolarPoint q = cartesian_to_polar(p);
    return polar_to_cartesian(PolarPoint(q.r / 2.0, 0.5));
}

Point2 dendrite_g2(const Point2& p) {
    const PolarPoint q = cartesian_to_polar(p);
    if (q.r > 1.0 + 1e-9) {
        throw std::domain_error("dendrite_g2 expects radius <= 1");
    }
    return polar_to_cartesian(PolarPoint(std::max(0.5 - q.r / 2.0, 0.0), 0.5));
}

IfsSystem dendrite_ifs() {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_named("dendrite_h", {}, 0.5));
    maps.push_back(MapSpec::make_named("dendrite_g1", {}, 0.5));
    maps.push_back(MapSpec::make_named("dendrite_g2", {}, 0.5));
    return IfsSystem::create(std::move(maps), IfsSystem::Mode::strict);
}

}  // namespace ifslab
