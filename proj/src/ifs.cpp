#include "ifslab/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace ifslab {

namespace {

constexpr std::size_t kFarthestSetSize = 64;
constexpr std::size_t kMaxStoredViolations = 32;
constexpr std::size_t kWordBudget = 10'000'000;

/// Greedy farthest-point traversal, seeded at the lexicographically smallest
/// point so the selection is deterministic.
std::vector<std::size_t> farthest_points(const std::vector<Point2>& pts,
                                         std::size_t count) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x < pts[start].x ||
            (pts[i].x == pts[start].x && pts[i].y < pts[start].y)) {
            start = i;
        }
    }
    std::vector<std::size_t> chosen{start};
    std::vector<double> min_dist(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        min_dist[i] = dist(pts[i], pts[start]);
    }
    while (chosen.size() < std::min(count, pts.size())) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (min_dist[i] > min_dist[best]) best = i;
        }
        if (min_dist[best] <= 0.0) break;
        chosen.push_back(best);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            min_dist[i] = std::min(min_dist[i], dist(pts[i], pts[best]));
        }
    }
    return chosen;
}

LipschitzReport sample_ratio_report(const MapSpec& map, const PointCloud& domain,
                                    std::size_t pair_budget, std::uint64_t rng_seed) {
    const auto& pts = domain.points;
    if (pts.size() < 2) {
        throw std::invalid_argument("pair sampling needs at least two points");
    }
    if (pair_budget < 1) {
        throw std::invalid_argument("pair budget must be at least 1");
    }
    if (diameter(pts) <= 0.0) {
        throw std::invalid_argument("all points identical");
    }

    LipschitzReport report;
    auto consider = [&](const Point2& a, const Point2& b) {
        const double d = dist(a, b);
        if (d <= 0.0) return;
        const double ratio = dist(apply_map(map, a), apply_map(map, b)) / d;
        ++report.pairs_sampled;
        if (ratio > report.sup_ratio || report.pairs_sampled == 1) {
            report.sup_ratio = ratio;
            report.argmax_pair = {a, b};
        }
        if (ratio >= 1.0) {
            ++report.violation_count;
            if (report.violations.size() < kMaxStoredViolations) {
                report.violations.emplace_back(a, b);
            }
        }
    };

    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (std::size_t k = 0; k < pair_budget; ++k) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        if (i == j) continue;
        consider(pts[i], pts[j]);
    }
    const auto extremes = farthest_points(pts, kFarthestSetSize);
    for (std::size_t a = 0; a < extremes.size(); ++a) {
        for (std::size_t b = a + 1; b < extremes.size(); ++b) {
            consider(pts[extremes[a]], pts[extremes[b]]);
        }
    }
    return report;
}

}  // namespace

IfsSystem IfsSystem::create(std::vector<MapSpec> maps, Mode mode) {
    if (maps.empty()) {
        throw std::invalid_argument("an IFS needs at least one map");
    }
    if (mode == Mode::strict) {
        for (const MapSpec& m : maps) {
            if (!m.claimed_lip.has_value() || !(*m.claimed_lip < 1.0)) {
                throw std::invalid_argument(
                    "strict mode requires every map to claim a Lipschitz bound < 1");
            }
        }
    }
    IfsSystem system;
    system.maps = std::move(maps);
    system.mode = mode;
    return system;
}

PointCloud hutchinson(const IfsSystem& system, const PointCloud& seed) {
    std::vector<Point2> images;
    std::vector<std::string> labels;
    images.reserve(seed.points.size() * system.maps.size());
    labels.reserve(seed.points.size() * system.maps.size());
    for (std::size_t mi = 0; mi < system.maps.size(); ++mi) {
        const std::string tag = std::to_string(mi);
        for (const Point2& p : seed.points) {
            images.push_back(apply_map(system.maps[mi], p));
            labels.push_back(tag);
        }
    }
    return PointCloud::create(std::move(images), std::move(labels), seed.resolution);
}

AttractorResult iterate_attractor(const IfsSystem& system, const PointCloud& seed,
                                  double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("attractor tolerance must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
    AttractorResult result;
    result.cloud = seed;
    result.residual = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < max_iter; ++k) {
        PointCloud next = hutchinson(system, result.cloud);
        result.residual = hausdorff_distance(result.cloud, next);
        result.cloud = std::move(next);
        result.iterations = k + 1;
        if (result.residual <= tol) {
            result.converged = true;
            break;
        }
    }
    return result;
}

PointCloud chaos_game(const IfsSystem& system, std::size_t n, std::size_t burn_in,
                      std::uint64_t rng_seed) {
    if (n <= burn_in) {
        throw std::invalid_argument("chaos game needs n > burn_in");
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, system.maps.size() - 1);

    Point2 state{0.0, 0.0};
    std::vector<Point2> orbit;
    orbit.reserve(n - burn_in);
    for (std::size_t k = 0; k < n; ++k) {
        state = apply_map(system.maps[pick(rng)], state);
        if (k >= burn_in) orbit.push_back(state);
    }

    // Sampled contractivity check over orbit pairs, per map.
    std::uniform_int_distribution<std::size_t> opick(0, orbit.size() - 1);
    for (std::size_t mi = 0; mi < system.maps.size(); ++mi) {
        double sup = 0.0;
        for (std::size_t k = 0; k < 256; ++k) {
            const Point2& a = orbit[opick(rng)];
            const Point2& b = orbit[opick(rng)];
            const double d = dist(a, b);
            if (d <= 0.0) continue;
            sup = std::max(sup, dist(apply_map(system.maps[mi], a),
                                     apply_map(system.maps[mi], b)) / d);
        }
        if (sup >= 1.0) {
            throw std::domain_error("map " + std::to_string(mi) +
                                    " is not contractive in sampled estimate");
        }
    }

    double min_x = orbit[0].x, max_x = orbit[0].x;
    double min_y = orbit[0].y, max_y = orbit[0].y;
    for (const Point2& p : orbit) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double diag = std::hypot(max_x - min_x, max_y - min_y);
    const double resolution =
        std::max(2.0 * diag / std::sqrt(static_cast<double>(orbit.size())), 1e-12);
    return PointCloud::create(std::move(orbit), resolution);
}

LipschitzReport estimate_lipschitz(const MapSpec& map, const PointCloud& domain,
                                   std::size_t pair_budget, std::uint64_t rng_seed) {
    return sample_ratio_report(map, domain, pair_budget, rng_seed);
}

LipschitzReport check_weak_contraction(const MapSpec& map, const PointCloud& domain,
                                       std::size_t pair_budget, std::uint64_t rng_seed) {
    // d(f(x), f(y)) < d(x, y) fails exactly when the sampled ratio is >= 1,
    // so the weak-contraction check shares the estimator's sampling.
    return sample_ratio_report(map, domain, pair_budget, rng_seed);
}

CoverCertificate certify_composition_diameter(
    const IfsSystem& system, const PointCloud& space, std::size_t word_length,
    double threshold, const std::vector<std::size_t>& collapsing) {
    if (!(threshold > 0.0)) {
        throw std::invalid_argument("certificate threshold must be positive");
    }
    const std::size_t family = system.maps.size();
    double nominal = 1.0;
    for (std::size_t k = 0; k < word_length; ++k) {
        nominal *= static_cast<double>(family);
        if (nominal > static_cast<double>(kWordBudget)) {
            throw std::runtime_error(
                "word budget |F|^m exceeds 10^7; reduce m or the family size");
        }
    }

    CoverCertificate cert;
    cert.word_length = word_length;
    cert.threshold = threshold;

    if (word_length == 0) {
        cert.max_diameter = diameter(space);
        cert.words_total = 1;
        cert.passes = cert.max_diameter < threshold;
        return cert;
    }

    std::vector<bool> is_collapsing(family, false);
    std::size_t collapsing_count = 0;
    for (std::size_t idx : collapsing) {
        if (idx >= family) {
            throw std::invalid_argument("collapsing map index out of range");
        }
        if (!is_collapsing[idx]) ++collapsing_count;
        is_collapsing[idx] = true;
    }

    const double dedup_tol = space.resolution / 10.0;
    const std::size_t m = word_length;

    auto pow_of = [](std::size_t base, std::size_t k) {
        std::size_t r = 1;
        for (std::size_t i = 0; i < k; ++i) r *= base;
        return r;
    };

    // Depth-first enumeration over words, innermost map first; each node
    // carries its image cloud so siblings reuse the parent image. A subtree
    // rooted at a one-point image is skipped wholesale: every completion
    // stays a single point with diameter exactly 0, which can raise neither
    // maximum, so only the word counting below is needed.
    struct Frame {
        std::vector<Point2> image;
        std::size_t next_child = 0;
        bool inner_collapse = false;  // collapsing map among non-outermost so far
    };
    std::vector<Frame> stack;
    stack.reserve(m + 1);
    stack.push_back({space.points, 0, false});
    std::vector<std::size_t> word;  // innermost first
    word.reserve(m);

    while (!stack.empty()) {
        Frame& frame = stack.back();
        const std::size_t depth = stack.size() - 1;
        if (depth == m || frame.next_child >= family) {
            if (depth == m) {
                const double d = diameter(frame.image);
                ++cert.words_total;
                const bool collapsed_class = stack[m - 1].inner_collapse;
                if (collapsed_class) {
                    ++cert.words_collapsed;
                    cert.collapsed_max_diameter =
                        std::max(cert.collapsed_max_diameter, d);
                }
                if (d > cert.max_diameter || cert.argmax_word.empty()) {
                    cert.max_diameter = std::max(cert.max_diameter, d);
                    cert.argmax_word.assign(word.rbegin(), word.rend());
                }
            }
            stack.pop_back();
            if (!word.empty()) word.pop_back();
            continue;
        }
        const std::size_t mi = frame.next_child++;
        std::vector<Point2> image;
        image.reserve(frame.image.size());
        for (const Point2& p : frame.image) {
            image.push_back(apply_map(system.maps[mi], p));
        }
        image = dedup_points(image, dedup_tol);
        const std::size_t child_depth = depth + 1;
        // The word index of `mi` is `depth`; it counts as non-initial
        // unless it is the outermost map (word index m-1).
        const bool child_flag =
            frame.inner_collapse || (is_collapsing[mi] && depth < m - 1);
        if (image.size() == 1 && child_depth < m) {
            const std::size_t rest = m - child_depth;  // maps still to choose
            cert.words_total += pow_of(family, rest);
            if (child_flag) {
                cert.words_collapsed += pow_of(family, rest);
            } else if (rest >= 2) {
                // Completions whose extra maps place a collapsing map in a
                // non-outermost slot (word indices child_depth .. m-2).
                cert.words_collapsed +=
                    pow_of(family, rest) -
                    pow_of(family - collapsing_count, rest - 1) * family;
            }
            continue;
        }
        word.push_back(mi);
        stack.push_back({std::move(image), 0, child_flag});
    }

    cert.passes = cert.max_diameter < threshold;
    return cert;
}

}  // namespace ifslab
