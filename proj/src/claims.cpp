#include "ifslab/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "ifslab/dendrite.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/io.hpp"
#include "ifslab/maps.hpp"
#include "ifslab/ordinals.hpp"
#include "ifslab/shark_teeth.hpp"
#include "ifslab/snake.hpp"

namespace ifslab {

namespace {

using nlohmann::json;

constexpr double kPi = 3.1415926535897932384626433832795;

json point_json(const Point2& p) {
    return json::array({format_double(p.x), format_double(p.y)});
}

json pair_json(const std::pair<Point2, Point2>& pr) {
    return json::array({point_json(pr.first), point_json(pr.second)});
}

std::vector<Point2> points_with_labels(const PointCloud& cloud,
                                       const std::vector<std::string>& wanted) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        for (const std::string& w : wanted) {
            if (cloud.labels[i] == w) {
                out.push_back(cloud.points[i]);
                break;
            }
        }
    }
    return out;
}

/// Lazily built shared fixtures so suites reuse expensive constructions.
struct Ctx {
    explicit Ctx(const RunConfig& config) : cfg(config) {}

    const RunConfig& cfg;

    std::map<std::size_t, SnakeSpace> snakes;
    std::optional<std::size_t> cover_m;
    std::optional<SharkTeethSpace> shark;
    std::optional<FreeArcSpace> prop1_space;
    std::optional<FractalSystem> prop1_system;
    std::optional<CoverCertificate> prop1_cert;
    std::optional<SharkTeethSpace> attached_shark;
    std::optional<FreeArcSpace> attached_space;
    std::optional<FractalSystem> attached_system;
    std::optional<DendriteSpace> dendrite;
    std::optional<StraightDendrite> straight;

    const SnakeSpace& snake(std::size_t depth) {
        auto it = snakes.find(depth);
        if (it == snakes.end()) {
            it = snakes.emplace(depth, build_snake(depth, cfg.snake_angular_step,
                                                   cfg.snake_radial_step)).first;
        }
        return it->second;
    }

    std::size_t snake_cover_count() {
        if (!cover_m) cover_m = find_cover_map_count(snake(cfg.snake_depth));
        return *cover_m;
    }

    const SharkTeethSpace& shark_space() {
        if (!shark) shark = build_shark_teeth(cfg.shark_rows, cfg.shark_samples_per_row);
        return *shark;
    }

    const FreeArcSpace& prop1() {
        if (!prop1_space) prop1_space = default_prop1_space(cfg.prop1_sample_step);
        return *prop1_space;
    }

    const FractalSystem& prop1_sys() {
        if (!prop1_system) prop1_system = build_free_arc_system(prop1());
        return *prop1_system;
    }

    const CoverCertificate& prop1_certificate() {
        if (!prop1_cert) {
            const FreeArcSpace& space = prop1();
            const double threshold = std::pow(2.0 / 3.0, 10) +
                                     2.0 * space.cloud.resolution * cfg.tolerance_scale;
            prop1_cert = certify_composition_diameter(prop1_sys().system, space.cloud,
                                                      10, threshold, {3, 4});
        }
        return *prop1_cert;
    }

    const SharkTeethSpace& attached_shark_src() {
        if (!attached_shark) attached_shark = build_shark_teeth(10, 300);
        return *attached_shark;
    }

    const FreeArcSpace& attached() {
        if (!attached_space) attached_space = attached_shark_space(attached_shark_src());
        return *attached_space;
    }

    const FractalSystem& attached_sys() {
        if (!attached_system) attached_system = build_free_arc_system(attached());
        return *attached_system;
    }

    const DendriteSpace& dendrite_space() {
        if (!dendrite) {
            dendrite = build_dendrite(cfg.dendrite_depth, cfg.dendrite_samples_per_arc);
        }
        return *dendrite;
    }

    const StraightDendrite& straight_space() {
        if (!straight) {
            straight = straighten_dendrite(cfg.straight_depth,
                                           cfg.straight_samples_per_arc);
        }
        return *straight;
    }
};

using ClaimFn = std::function<ClaimReport(Ctx&)>;

struct Claim {
    const char* suite;
    const char* id;
    ClaimFn fn;
};

ClaimReport pass_fail(bool ok) {
    ClaimReport r;
    r.status = ok ? ClaimReport::Status::pass : ClaimReport::Status::fail;
    return r;
}

// ---------------------------------------------------------------- snake ----

ClaimReport claim_snake_below_identity(Ctx&) {
    constexpr std::size_t kGrid = 10000;
    double worst_margin = 1e300;
    double worst_r = 0.0;
    bool ok = true;
    for (std::size_t i = 1; i <= kGrid; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(kGrid);
        const double v = radial_profile(r);
        ok = ok && (v < r);
        if (r - v < worst_margin) {
            worst_margin = r - v;
            worst_r = r;
        }
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;  // strict float inequality
    rep.budget = {{"grid", kGrid}};
    rep.worst_witness = {{"r", format_double(worst_r)},
                         {"margin", format_double(worst_margin)}};
    return rep;
}

ClaimReport claim_snake_monotone(Ctx&) {
    constexpr std::size_t kGrid = 10000;
    double worst_delta = 1e300;
    double worst_r = 0.0;
    bool ok = true;
    double prev = radial_profile(1.0 / static_cast<double>(kGrid));
    for (std::size_t i = 2; i <= kGrid; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(kGrid);
        const double v = radial_profile(r);
        ok = ok && (v > prev);
        if (v - prev < worst_delta) {
            worst_delta = v - prev;
            worst_r = r;
        }
        prev = v;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"grid", kGrid}};
    rep.worst_witness = {{"r", format_double(worst_r)},
                         {"delta", format_double(worst_delta)}};
    return rep;
}

ClaimReport claim_snake_weak_contraction(Ctx& ctx) {
    const std::size_t depths[] = {10, 25, 50};
    const MapSpec f = snake_map();
    double sup = 0.0;
    std::size_t violations = 0;
    json witness_pair;
    std::size_t pairs = 0;
    for (std::size_t depth : depths) {
        const SnakeSpace& s = ctx.snake(depth);
        for (std::uint64_t k = 0; k < 3; ++k) {
            const LipschitzReport rep =
                check_weak_contraction(f, s.cloud, ctx.cfg.weak_pair_budget,
                                       ctx.cfg.seed + k);
            pairs += rep.pairs_sampled;
            violations += rep.violation_count;
            if (rep.sup_ratio > sup) {
                sup = rep.sup_ratio;
                witness_pair = pair_json(rep.argmax_pair);
            }
        }
    }
    ClaimReport rep = pass_fail(violations == 0);
    rep.tolerance = 1.0;  // strict ratio bound
    rep.budget = {{"pairs_per_run", ctx.cfg.weak_pair_budget},
                  {"seeds", 3},
                  {"depths", {10, 25, 50}},
                  {"pairs_total", pairs}};
    rep.worst_witness = {{"sup_ratio", format_double(sup)},
                         {"violations", violations},
                         {"pair", witness_pair}};
    return rep;
}

ClaimReport claim_snake_shift_law(Ctx& ctx) {
    const SnakeSpace& s = ctx.snake(22);
    const double tol = 2.0 * s.cloud.resolution * ctx.cfg.tolerance_scale;
    double worst = 0.0;
    std::size_t worst_n = 0;
    for (std::size_t n = 1; n <= 20; ++n) {
        std::vector<Point2> source = points_with_labels(
            s.cloud, {"O_" + std::to_string(n), "I_" + std::to_string(n)});
        for (Point2& p : source) {
            p = polar_to_cartesian(snake_weak_map(cartesian_to_polar(p)));
        }
        const std::vector<Point2> target = points_with_labels(
            s.cloud, {"O_" + std::to_string(n + 2), "I_" + std::to_string(n + 2)});
        const double h = std::max(directed_hausdorff(source, target),
                                  directed_hausdorff(target, source));
        if (h > worst) {
            worst = h;
            worst_n = n;
        }
    }
    ClaimReport rep = pass_fail(worst <= tol);
    rep.tolerance = tol;
    rep.budget = {{"components", 20}};
    rep.worst_witness = {{"n", worst_n}, {"hausdorff", format_double(worst)}};
    return rep;
}

ClaimReport claim_snake_cover_maps(Ctx& ctx) {
    const SnakeSpace& s = ctx.snake(ctx.cfg.snake_depth);
    const std::size_t m = ctx.snake_cover_count();
    const std::vector<MapSpec> gs = build_cover_maps(s, m);
    std::vector<Point2> images;
    images.reserve(gs.size() * s.cloud.points.size());
    for (const MapSpec& g : gs) {
        for (const Point2& p : s.cloud.points) {
            images.push_back(apply_map(g, p));
        }
    }
    const std::vector<Point2> k_target =
        points_with_labels(s.cloud, {"O_1", "I_1", "O_2", "I_2"});
    const double h = std::max(directed_hausdorff(images, k_target),
                              directed_hausdorff(k_target, images));
    const double tol = 2.0 * s.cloud.resolution * ctx.cfg.tolerance_scale;
    ClaimReport rep = pass_fail(h <= tol);
    rep.tolerance = tol;
    rep.budget = {{"m", m}};
    rep.worst_witness = {{"hausdorff", format_double(h)},
                         {"arc_length", format_double(snake_cover_arc_length())}};
    return rep;
}

ClaimReport claim_snake_invariance(Ctx& ctx) {
    const SnakeSpace& s = ctx.snake(ctx.cfg.snake_depth);
    const std::size_t m = ctx.snake_cover_count();
    std::vector<MapSpec> maps = build_cover_maps(s, m);
    maps.insert(maps.begin(), snake_map());
    const IfsSystem system = IfsSystem::create(std::move(maps), IfsSystem::Mode::weak);
    const PointCloud image = hutchinson(system, s.cloud);
    const double h = hausdorff_distance(s.cloud, image);
    const double tol = (2.0 / static_cast<double>(s.depth) +
                        2.0 * s.cloud.resolution) * ctx.cfg.tolerance_scale;
    ClaimReport rep = pass_fail(h <= tol);
    rep.tolerance = tol;
    rep.budget = {{"maps", m + 1}, {"points", s.cloud.points.size()}};
    rep.worst_witness = {{"hausdorff", format_double(h)}};
    return rep;
}

ClaimReport claim_snake_sanders(Ctx&) {
    const std::size_t N = 100;
    const SandersReport report = sanders_report(N, 24.0);
    bool ok = true;
    double worst_o = 0.0, worst_i = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
        const double dn = static_cast<double>(n);
        const double o_err = std::fabs(report.o_lengths[n - 1] - 1.5 * kPi / dn);
        const double i_err =
            std::fabs(report.i_lengths[n - 1] - 1.0 / (dn * (dn + 1.0)));
        worst_o = std::max(worst_o, o_err);
        worst_i = std::max(worst_i, i_err);
        ok = ok && o_err <= 1e-3 && i_err <= 1e-6;
    }
    ok = ok && report.finite_part_lengths.back() >= 24.0 && report.diverged;
    for (std::size_t n = 1; n < N; ++n) {
        ok = ok && report.finite_part_lengths[n] > report.finite_part_lengths[n - 1];
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 1e-3;
    rep.budget = {{"N", N}};
    rep.worst_witness = {
        {"o_error", format_double(worst_o)},
        {"i_error", format_double(worst_i)},
        {"cumulative", format_double(report.finite_part_lengths.back())},
        {"divergence_at", report.divergence_witness.first}};
    return rep;
}

ClaimReport claim_snake_not_ifs(Ctx&) {
    const SandersReport report = sanders_report(100, 24.0);
    ClaimReport rep;
    rep.status = ClaimReport::Status::evidence_only;
    rep.tolerance = 0.0;
    rep.budget = {{"N", 100}};
    rep.worst_witness = {
        {"note", "arc-length toward the origin grows like the harmonic series; "
                 "finite subarcs away from it stay finite"},
        {"cumulative_at_100", format_double(report.finite_part_lengths.back())},
        {"bound", 24.0},
        {"first_exceeding_n", report.divergence_witness.first}};
    return rep;
}

// ----------------------------------------------------------- shark teeth ----

ClaimReport claim_wave_scaling(Ctx&) {
    bool ok = true;
    double worst = 0.0;
    // Dyadic grid: contains the peak abscissas (odd multiples of 2^-n-1).
    constexpr std::size_t kGrid = 1 << 17;
    for (std::size_t n = 0; n <= 6; ++n) {
        double max_v = 0.0;
        for (std::size_t i = 0; i <= kGrid; ++i) {
            max_v = std::max(max_v, scaled_wave(n, std::ldexp(
                static_cast<double>(i), -17)));
        }
        const double err =
            std::fabs(max_v - std::ldexp(1.0, -static_cast<int>(n) - 1));
        worst = std::max(worst, err);
        ok = ok && err <= 1e-6;
    }
    // Periodicity with period 2^-n.
    double worst_period = 0.0;
    for (std::size_t n = 0; n <= 6; ++n) {
        const double period = std::ldexp(1.0, -static_cast<int>(n));
        for (std::size_t i = 0; i < 1000; ++i) {
            const double t = static_cast<double>(i) / 1000.0;
            worst_period = std::max(
                worst_period, std::fabs(scaled_wave(n, t) - scaled_wave(n, t + period)));
        }
    }
    ok = ok && worst_period < 1e-12;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 1e-6;
    rep.budget = {{"grid", kGrid}, {"n_max", 6}};
    rep.worst_witness = {{"max_error", format_double(worst)},
                         {"period_error", format_double(worst_period)}};
    return rep;
}

ClaimReport claim_row_index(Ctx&) {
    bool ok = row_index(1) == 0 && row_index(3) == 1 && row_index(15) == 2 &&
              row_index(255) == 3;
    // Boundary pairs around 2^(2^m) - 1.
    ok = ok && row_index(2) == 0 && row_index(4) == 1 && row_index(16) == 2 &&
         row_index(256) == 3 && row_index(65536) == 4;
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= 10000; ++k) {
        const std::size_t v = row_index(k);
        ok = ok && v >= prev;
        prev = v;
    }
    bool threw = false;
    try {
        row_index(0);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    ok = ok && threw;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"k_max", 10000}};
    rep.worst_witness = {{"n_10000", row_index(10000)}};
    return rep;
}

ClaimReport claim_row_amplitudes(Ctx&) {
    bool ok = true;
    double prev = 1e300;
    std::size_t worst_k = 0;
    for (std::size_t k = 1; k <= 1000; ++k) {
        const double amp = std::ldexp(1.0, -static_cast<int>(row_index(k)) - 1) /
                           static_cast<double>(k);
        if (amp > prev) {
            ok = false;
            worst_k = k;
        }
        prev = amp;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"k_max", 1000}};
    rep.worst_witness = {{"first_increase_at", worst_k}};
    return rep;
}

ClaimReport claim_rows_on_curve(Ctx& ctx) {
    const SharkTeethSpace& space = ctx.shark_space();
    double worst = 0.0;
    bool endpoints_ok = true;
    for (std::size_t i = 0; i < space.cloud.points.size(); ++i) {
        const Point2& p = space.cloud.points[i];
        const std::string& label = space.cloud.labels[i];
        if (label == "bone") {
            worst = std::max(worst, std::fabs(p.y));
            continue;
        }
        const std::size_t k = std::stoul(label.substr(2));
        const double expect = scaled_wave(row_index(k), p.x) / static_cast<double>(k);
        worst = std::max(worst, std::fabs(p.y - expect));
    }
    // (0,0) and (1,0) belong to every row: the wave vanishes at integers, so
    // both bone endpoints are row points as well (they dedup onto the bone).
    for (std::size_t k = 1; k <= space.rows; ++k) {
        endpoints_ok = endpoints_ok &&
                       scaled_wave(row_index(k), 0.0) == 0.0 &&
                       scaled_wave(row_index(k), 1.0) == 0.0;
    }
    ClaimReport rep = pass_fail(worst <= 1e-12 && endpoints_ok);
    rep.tolerance = 1e-12;
    rep.budget = {{"points", space.cloud.points.size()}};
    rep.worst_witness = {{"max_deviation", format_double(worst)}};
    return rep;
}

ClaimReport claim_tent_lipschitz(Ctx& ctx) {
    std::vector<Point2> grid;
    for (std::size_t i = 0; i <= 10000; ++i) {
        grid.push_back({static_cast<double>(i) / 10000.0, 0.0});
    }
    const PointCloud domain = PointCloud::create(std::move(grid), 1e-4);
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i <= 2; ++i) {
        const MapSpec f = MapSpec::make_named("tent_f", {static_cast<double>(i)});
        const LipschitzReport rep = estimate_lipschitz(
            f, domain, ctx.cfg.lip_pair_budget, ctx.cfg.seed + i);
        const double err = std::fabs(rep.sup_ratio - 2.0 / 3.0);
        worst = std::max(worst, err);
        ok = ok && err <= 1e-6;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 1e-6;
    rep.budget = {{"pairs", ctx.cfg.lip_pair_budget}, {"grid", 10001}};
    rep.worst_witness = {{"max_error", format_double(worst)}};
    return rep;
}

ClaimReport claim_tent_cover(Ctx&) {
    // Union of the three contraction images over a fine grid must cover the
    // 10^4 target grid within 1e-3.
    std::vector<double> image;
    for (std::size_t i = 0; i <= 2; ++i) {
        for (std::size_t g = 0; g <= 10000; ++g) {
            image.push_back(tent_contraction(i, static_cast<double>(g) / 10000.0));
        }
    }
    std::sort(image.begin(), image.end());
    double worst = 0.0;
    for (std::size_t g = 0; g <= 10000; ++g) {
        const double x = static_cast<double>(g) / 10000.0;
        auto it = std::lower_bound(image.begin(), image.end(), x);
        double best = 1e300;
        if (it != image.end()) best = std::min(best, *it - x);
        if (it != image.begin()) best = std::min(best, x - *(it - 1));
        worst = std::max(worst, best);
    }
    ClaimReport rep = pass_fail(worst <= 1e-3);
    rep.tolerance = 1e-3;
    rep.budget = {{"grid", 10001}};
    rep.worst_witness = {{"max_gap", format_double(worst)}};
    return rep;
}

ClaimReport claim_prop1_free_arc(Ctx& ctx) {
    const FreeArcSpace& space = ctx.prop1();  // construction validates
    ClaimReport rep = pass_fail(true);
    rep.tolerance = space.cloud.resolution;
    rep.budget = {{"points", space.cloud.points.size()}};
    rep.worst_witness = {{"arc_length", format_double(space.arc_cumlen.back())},
                         {"sides", space.sides.size()}};
    return rep;
}

double covers_distance(const std::vector<Point2>& image,
                       const std::vector<Point2>& target) {
    return std::max(directed_hausdorff(image, target),
                    directed_hausdorff(target, image));
}

ClaimReport claim_prop1_covers(Ctx& ctx) {
    const FreeArcSpace& space = ctx.prop1();
    const FractalSystem& fs = ctx.prop1_sys();
    const double tol = 2.0 * space.cloud.resolution * ctx.cfg.tolerance_scale;
    double worst = 0.0;
    // Union of the F images against L.
    std::vector<Point2> f_union;
    for (std::size_t i = 0; i < fs.f_count; ++i) {
        for (const Point2& p : space.cloud.points) {
            f_union.push_back(apply_map(fs.system.maps[i], p));
        }
    }
    worst = std::max(worst,
                     covers_distance(f_union, points_with_labels(space.cloud, {"L"})));
    // Each side image against its side.
    for (std::size_t j = 1; j + fs.f_count <= fs.system.maps.size(); ++j) {
        std::vector<Point2> g_image;
        for (const Point2& p : space.cloud.points) {
            g_image.push_back(apply_map(fs.system.maps[fs.f_count + j - 1], p));
        }
        worst = std::max(
            worst, covers_distance(
                       g_image, points_with_labels(space.cloud,
                                                   {"P_" + std::to_string(j)})));
    }
    ClaimReport rep = pass_fail(worst <= tol);
    rep.tolerance = tol;
    rep.budget = {{"maps", fs.system.maps.size()}};
    rep.worst_witness = {{"hausdorff", format_double(worst)}};
    return rep;
}

ClaimReport claim_prop1_f_lipschitz(Ctx& ctx) {
    const FreeArcSpace& space = ctx.prop1();
    const FractalSystem& fs = ctx.prop1_sys();
    bool ok = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < fs.f_count; ++i) {
        const LipschitzReport rep = estimate_lipschitz(
            fs.system.maps[i], space.cloud, ctx.cfg.lip_pair_budget, ctx.cfg.seed + i);
        worst = std::max(worst, rep.sup_ratio);
        ok = ok && rep.sup_ratio <= 2.0 / 3.0 + 1e-2;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 2.0 / 3.0 + 1e-2;
    rep.budget = {{"pairs", ctx.cfg.lip_pair_budget}};
    rep.worst_witness = {{"sup_ratio", format_double(worst)}};
    return rep;
}

ClaimReport claim_prop1_certificate(Ctx& ctx) {
    const CoverCertificate& cert = ctx.prop1_certificate();
    ClaimReport rep = pass_fail(cert.passes);
    rep.tolerance = cert.threshold;
    rep.budget = {{"word_length", cert.word_length}, {"words", cert.words_total}};
    rep.worst_witness = {{"max_diameter", format_double(cert.max_diameter)},
                         {"argmax_word", cert.argmax_word}};
    return rep;
}

ClaimReport claim_prop1_collapse(Ctx& ctx) {
    const FreeArcSpace& space = ctx.prop1();
    const CoverCertificate& cert = ctx.prop1_certificate();
    const double tol = 2.0 * space.cloud.resolution * ctx.cfg.tolerance_scale;
    // Exact count of length-10 words over {F0,F1,F2,G1,G2} with a
    // non-initial G: 5^10 - 5 * 3^9.
    const std::size_t expected = 9765625 - 5 * 19683;
    const bool ok = cert.collapsed_max_diameter <= tol &&
                    cert.words_collapsed == expected &&
                    cert.words_total == 9765625;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = tol;
    rep.budget = {{"collapsed_words", cert.words_collapsed}};
    rep.worst_witness = {
        {"collapsed_max_diameter", format_double(cert.collapsed_max_diameter)},
        {"expected_collapsed", expected}};
    return rep;
}

ClaimReport claim_attached_instance(Ctx& ctx) {
    const FreeArcSpace& space = ctx.attached();
    const FractalSystem& fs = ctx.attached_sys();
    const double tol = 2.0 * space.cloud.resolution * ctx.cfg.tolerance_scale;
    double worst = 0.0;
    std::vector<Point2> f_union;
    for (std::size_t i = 0; i < fs.f_count; ++i) {
        for (const Point2& p : space.cloud.points) {
            f_union.push_back(apply_map(fs.system.maps[i], p));
        }
    }
    worst = std::max(worst,
                     covers_distance(f_union, points_with_labels(space.cloud, {"L"})));
    for (std::size_t j = 1; j + fs.f_count <= fs.system.maps.size(); ++j) {
        std::vector<Point2> g_image;
        for (const Point2& p : space.cloud.points) {
            g_image.push_back(apply_map(fs.system.maps[fs.f_count + j - 1], p));
        }
        worst = std::max(
            worst, covers_distance(
                       g_image, points_with_labels(space.cloud,
                                                   {"P_" + std::to_string(j)})));
    }
    ClaimReport rep = pass_fail(worst <= tol);
    rep.tolerance = tol;
    rep.budget = {{"points", space.cloud.points.size()}};
    rep.worst_witness = {{"hausdorff", format_double(worst)}};
    return rep;
}

ClaimReport claim_attached_certificate(Ctx& ctx) {
    const FreeArcSpace& space = ctx.attached();
    const FractalSystem& fs = ctx.attached_sys();
    // The side tours bound the modulus of continuity of the retractions, so
    // words ending in a side retraction shrink like (tour length) * t-window.
    double loop_max = 0.0;
    for (const auto& cum : space.side_cumlen) {
        loop_max = std::max(loop_max, cum.back());
    }
    const std::size_t m = 6;
    const double arc_len = space.arc_cumlen.back();
    const double window = std::pow(2.0 / 3.0, m - 2) / 3.0;
    const double threshold = loop_max * window + std::pow(2.0 / 3.0, m) * arc_len +
                             4.0 * space.cloud.resolution;
    std::vector<std::size_t> collapsing;
    for (std::size_t j = fs.f_count; j < fs.system.maps.size(); ++j) {
        collapsing.push_back(j);
    }
    const CoverCertificate cert = certify_composition_diameter(
        fs.system, space.cloud, m, threshold, collapsing);
    const bool ok = cert.passes &&
                    cert.collapsed_max_diameter <= 2.0 * space.cloud.resolution;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = threshold;
    rep.budget = {{"word_length", m}, {"words", cert.words_total}};
    rep.worst_witness = {
        {"max_diameter", format_double(cert.max_diameter)},
        {"collapsed_max_diameter", format_double(cert.collapsed_max_diameter)},
        {"loop_length", format_double(loop_max)}};
    return rep;
}

ClaimReport claim_shark_not_banach(Ctx&) {
    ClaimReport rep;
    rep.status = ClaimReport::Status::evidence_only;
    rep.tolerance = 0.0;
    rep.budget = {{"k_max", 10000}};
    rep.worst_witness = {
        {"note", "row frequencies n_k grow without bound while amplitudes decay; "
                 "the homeomorphism obstruction is a theorem, not a computation"},
        {"n_k_at_10000", row_index(10000)},
        {"amplitude_at_1000",
         format_double(std::ldexp(1.0, -static_cast<int>(row_index(1000)) - 1) / 1000.0)}};
    return rep;
}

// -------------------------------------------------------------- dendrite ----

ClaimReport claim_dendrite_lengths(Ctx& ctx) {
    const DendriteSpace& space = ctx.dendrite_space();
    double worst = 0.0;
    bool ok = true;
    for (std::size_t n = 1; n <= space.depth; ++n) {
        const double len = polyline_length(space.arcs[n - 1]);
        const double err = std::fabs(len - std::ldexp(1.0, static_cast<int>(n)));
        worst = std::max(worst, err);
        ok = ok && err <= 1e-6;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 1e-6;
    rep.budget = {{"depth", space.depth}};
    rep.worst_witness = {{"max_error", format_double(worst)}};
    return rep;
}

ClaimReport claim_dendrite_containment(Ctx& ctx) {
    const DendriteSpace& space = ctx.dendrite_space();
    bool ok = true;
    json worst;
    for (std::size_t n = 1; n <= space.depth; ++n) {
        const double radius_cap = std::ldexp(1.0, -static_cast<int>(n));
        const double w = std::ldexp(1.0, -static_cast<int>(n) - 2);
        const Point2 endpoint{radius_cap * std::cos(radius_cap),
                              radius_cap * std::sin(radius_cap)};
        const auto& idx = space.sample_index[n - 1];
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] < 0) continue;
            const Point2& p = space.cloud.points[static_cast<std::size_t>(idx[i])];
            if (i == 0 || dist(p, endpoint) <= 1e-12) continue;  // arc endpoints
            const PolarPoint q = cartesian_to_polar(p);
            const bool inside = q.r < radius_cap && q.alpha > radius_cap - w &&
                                q.alpha < radius_cap + w;
            if (!inside && ok) {
                ok = false;
                worst = {{"arc", n}, {"r", format_double(q.r)},
                         {"alpha", format_double(q.alpha)}};
            }
        }
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"depth", space.depth}};
    rep.worst_witness = ok ? json{{"all_inside", true}} : worst;
    return rep;
}

ClaimReport claim_dendrite_sector_gaps(Ctx& ctx) {
    const DendriteSpace& space = ctx.dendrite_space();
    double min_gap = 1e300;
    for (std::size_t n = 1; n < space.depth; ++n) {
        // Sector n spans 2^-n * (3/4, 5/4); sector n+1 tops out at
        // 2^-n * 5/8, leaving an exact gap of 2^-n / 8.
        const double bottom_n = 0.75 * std::ldexp(1.0, -static_cast<int>(n));
        const double top_next = 1.25 * std::ldexp(1.0, -static_cast<int>(n) - 1);
        min_gap = std::min(min_gap, bottom_n - top_next);
    }
    ClaimReport rep = pass_fail(min_gap > 0.0);
    rep.tolerance = 0.0;
    rep.budget = {{"depth", space.depth}};
    rep.worst_witness = {{"min_angular_gap", format_double(min_gap)}};
    return rep;
}

bool segments_properly_intersect(const Point2& a, const Point2& b, const Point2& c,
                                 const Point2& d) {
    auto orient = [](const Point2& p, const Point2& q, const Point2& r) {
        const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        return (v > 0.0) - (v < 0.0);
    };
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

ClaimReport claim_dendrite_zigzag(Ctx& ctx) {
    const DendriteSpace& space = ctx.dendrite_space();
    bool ok = true;
    const std::size_t max_arc = std::min<std::size_t>(space.depth, 5);
    for (std::size_t n = 1; n <= max_arc && ok; ++n) {
        const auto& v = space.arcs[n - 1].vertices;
        for (std::size_t i = 1; i < v.size() && ok; ++i) {
            ok = dist(v[i - 1], v[i]) > 0.0;
        }
        for (std::size_t i = 0; i + 1 < v.size() && ok; ++i) {
            for (std::size_t j = i + 2; j + 1 < v.size() && ok; ++j) {
                if (segments_properly_intersect(v[i], v[i + 1], v[j], v[j + 1])) {
                    ok = false;
                }
            }
        }
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"arcs_tested", max_arc}};
    rep.worst_witness = {{"simple", ok}};
    return rep;
}

ClaimReport claim_straight_geometry(Ctx& ctx) {
    const StraightDendrite& space = ctx.straight_space();
    const Point2 j1_end{0.5 * std::cos(0.5), 0.5 * std::sin(0.5)};
    bool ok = false;
    for (const Point2& p : space.cloud.points) {
        if (dist(p, j1_end) <= 1e-12) {
            ok = true;
            break;
        }
    }
    const double diam = diameter(space.cloud);
    ok = ok && diam <= 0.5 + 1e-6;
    // Distinct segments meet only at the origin.
    double min_cross = 1e300;
    for (std::size_t a = 1; a <= space.depth && ok; ++a) {
        for (std::size_t b = a + 1; b <= space.depth; ++b) {
            for (std::ptrdiff_t ia : space.sample_index[a - 1]) {
                if (ia <= 0) continue;
                const Point2& p = space.cloud.points[static_cast<std::size_t>(ia)];
                if (p.x == 0.0 && p.y == 0.0) continue;
                for (std::ptrdiff_t ib : space.sample_index[b - 1]) {
                    if (ib <= 0) continue;
                    const Point2& q = space.cloud.points[static_cast<std::size_t>(ib)];
                    if (q.x == 0.0 && q.y == 0.0) continue;
                    min_cross = std::min(min_cross, dist(p, q));
                }
            }
        }
    }
    ok = ok && min_cross > 0.0;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 1e-6;
    rep.budget = {{"depth", space.depth}};
    rep.worst_witness = {{"diameter", format_double(diam)},
                         {"min_cross_distance", format_double(min_cross)}};
    return rep;
}

ClaimReport claim_dendrite_lipschitz(Ctx& ctx) {
    const StraightDendrite& space = ctx.straight_space();
    const LipschitzReport h = estimate_lipschitz(
        MapSpec::make_named("dendrite_h"), space.cloud, ctx.cfg.lip_pair_budget,
        ctx.cfg.seed);
    const LipschitzReport g1 = estimate_lipschitz(
        MapSpec::make_named("dendrite_g1"), space.cloud, ctx.cfg.lip_pair_budget,
        ctx.cfg.seed + 1);
    const LipschitzReport g2 = estimate_lipschitz(
        MapSpec::make_named("dendrite_g2"), space.cloud, ctx.cfg.lip_pair_budget,
        ctx.cfg.seed + 2);
    const bool ok = h.sup_ratio <= 0.51 && g1.sup_ratio <= 0.501 &&
                    g2.sup_ratio <= 0.501;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.51;
    rep.budget = {{"pairs", ctx.cfg.lip_pair_budget}};
    rep.worst_witness = {{"h", format_double(h.sup_ratio)},
                         {"g1", format_double(g1.sup_ratio)},
                         {"g2", format_double(g2.sup_ratio)}};
    return rep;
}

ClaimReport claim_dendrite_invariance(Ctx& ctx) {
    const StraightDendrite& space = ctx.straight_space();
    const PointCloud image = hutchinson(dendrite_ifs(), space.cloud);
    const double h = hausdorff_distance(space.cloud, image);
    const double tol = (std::ldexp(1.0, -static_cast<int>(space.depth)) +
                        2.0 * space.cloud.resolution) * ctx.cfg.tolerance_scale;
    ClaimReport rep = pass_fail(h <= tol);
    rep.tolerance = tol;
    rep.budget = {{"points", space.cloud.points.size()}};
    rep.worst_witness = {{"hausdorff", format_double(h)}};
    return rep;
}

ClaimReport claim_dendrite_iteration(Ctx&) {
    const PointCloud seed = PointCloud::create({{0.0, 0.0}}, std::ldexp(1.0, -10));
    const AttractorResult result =
        iterate_attractor(dendrite_ifs(), seed, std::ldexp(1.0, -10), 64);
    ClaimReport rep = pass_fail(result.converged &&
                                result.residual <= std::ldexp(1.0, -10));
    rep.tolerance = std::ldexp(1.0, -10);
    rep.budget = {{"max_iter", 64}, {"iterations", result.iterations}};
    rep.worst_witness = {{"residual", format_double(result.residual)},
                         {"points", result.cloud.points.size()}};
    return rep;
}

ClaimReport claim_dendrite_correspondence(Ctx&) {
    const std::size_t depth = 5;
    const std::size_t samples = 256;
    const DendriteSpace dend = build_dendrite(depth, samples);
    const StraightDendrite straight = straighten_dendrite(depth, samples);
    bool ok = true;
    std::size_t total_pairs = 0;
    for (std::size_t n = 1; n <= depth && ok; ++n) {
        const auto pairs = straightening_correspondence(dend, straight, n);
        total_pairs += pairs.size();
        // Deduplication drops zigzag samples that fold onto each other in the
        // tight sectors; the surviving index map must stay monotone, and the
        // first two arcs are coarse enough to keep interior matches.
        ok = ok && pairs.size() >= (n <= 2 ? std::size_t{2} : std::size_t{1}) &&
             samples >= 2;
        for (std::size_t i = 1; i < pairs.size() && ok; ++i) {
            ok = pairs[i].first > pairs[i - 1].first &&
                 pairs[i].second > pairs[i - 1].second;
        }
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"depth", depth}, {"samples", samples}};
    rep.worst_witness = {{"pairs", total_pairs}};
    return rep;
}

ClaimReport claim_dendrite_not_weak_ifs(Ctx& ctx) {
    const DendriteSpace& space = ctx.dendrite_space();
    ClaimReport rep;
    rep.status = ClaimReport::Status::evidence_only;
    rep.tolerance = 0.0;
    rep.budget = {{"depth", space.depth}};
    rep.worst_witness = {
        {"note", "arc lengths double while the arcs shrink into sectors of "
                 "radius 2^-n; the weak-IFS obstruction is a theorem"},
        {"length_ratio_last",
         format_double(polyline_length(space.arcs.back()) /
                       std::ldexp(1.0, -static_cast<int>(space.depth)))}};
    return rep;
}

// -------------------------------------------------------------- scattered ----

ClaimReport claim_heights_powers(Ctx&) {
    bool ok = true;
    for (std::uint32_t n = 1; n <= 9 && ok; ++n) {
        const CnfOrdinal beta = CnfOrdinal::omega_power(n);
        const CnfOrdinal h = height(beta);
        ok = cnf_compare(h, CnfOrdinal::natural(n)) == 0;
        // Cross-check: count derivative steps until discrete.
        OrdinalSpace space = OrdinalSpace::interval(beta);
        std::size_t steps = 0;
        while (!ordinal_space_is_discrete(space) && steps <= 12) {
            space = cb_derivative(space);
            ++steps;
        }
        ok = ok && steps == n;
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"n_max", 9}};
    rep.worst_witness = {{"checked", 9}};
    return rep;
}

ClaimReport claim_height_limit(Ctx&) {
    const CnfOrdinal marker = CnfOrdinal::omega_omega_marker();
    const CnfOrdinal h = height(marker);
    const bool ok = format_cnf(h) == "w" && h.is_limit() &&
                    classify_topological_fractal(marker) ==
                        FractalClassification::obstructed_limit_height;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"cases", 1}};
    rep.worst_witness = {{"height", format_cnf(h)}};
    return rep;
}

ClaimReport claim_derivative_divisibility(Ctx&) {
    const std::vector<CnfOrdinal> betas = {
        parse_cnf("w"), parse_cnf("w*3"), parse_cnf("w^2"),
        parse_cnf("w^2*2 + w*5"), parse_cnf("w^3")};
    // Deterministic sample of CNF ordinals with exponents <= 3, coeffs <= 5.
    std::vector<CnfOrdinal> gammas;
    gammas.push_back(CnfOrdinal::zero());
    for (std::uint64_t c3 = 0; c3 <= 3; ++c3) {
        for (std::uint64_t c2 = 0; c2 <= 4; ++c2) {
            for (std::uint64_t c1 = 0; c1 <= 5; ++c1) {
                for (std::uint64_t c0 = 0; c0 <= 3; ++c0) {
                    CnfOrdinal g;
                    if (c3) g.terms.push_back({3, c3});
                    if (c2) g.terms.push_back({2, c2});
                    if (c1) g.terms.push_back({1, c1});
                    if (c0) g.terms.push_back({0, c0});
                    gammas.push_back(g);
                }
            }
        }
    }
    bool ok = true;
    std::size_t checked = 0;
    for (const CnfOrdinal& beta : betas) {
        for (std::uint32_t k = 0; k <= 3 && ok; ++k) {
            OrdinalSpace space = OrdinalSpace::interval(beta);
            for (std::uint32_t j = 0; j < k; ++j) space = cb_derivative(space);
            for (const CnfOrdinal& g : gammas) {
                if (cnf_compare(g, beta) > 0) continue;
                ++checked;
                const bool via_derivative = ordinal_space_contains(space, g);
                const bool via_formula =
                    cnf_divisible(g, k) && (k == 0 || !g.is_zero());
                // Base case of the induction: the first derivative is the set
                // of limit ordinals.
                if (k == 1) {
                    const bool limit = g.is_limit();
                    if (limit != via_formula) {
                        ok = false;
                        break;
                    }
                }
                if (via_derivative != via_formula) {
                    ok = false;
                    break;
                }
            }
        }
    }
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"memberships_checked", checked}};
    rep.worst_witness = {{"betas", betas.size()}, {"gammas", gammas.size()}};
    return rep;
}

ClaimReport claim_classification(Ctx&) {
    bool ok = true;
    for (std::uint32_t n = 1; n <= 9; ++n) {
        ok = ok && classify_topological_fractal(CnfOrdinal::omega_power(n)) ==
                       FractalClassification::unobstructed;
    }
    ok = ok && classify_topological_fractal(CnfOrdinal::natural(7)) ==
                   FractalClassification::unobstructed;
    ok = ok && classify_topological_fractal(CnfOrdinal::omega_omega_marker()) ==
                   FractalClassification::obstructed_limit_height;
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"cases", 11}};
    rep.worst_witness = {{"checked", 11}};
    return rep;
}

ClaimReport claim_embedding(Ctx& ctx) {
    bool ok = true;
    json witness;
    {
        const PointCloud omega = embed_in_unit_interval(CnfOrdinal::omega(), 10);
        ok = omega.points.size() == 11;
        witness["omega_points"] = omega.points.size();
    }
    const PointCloud k = embed_in_unit_interval(CnfOrdinal::omega_omega_marker(),
                                                ctx.cfg.omega_depth);
    // Strict antitone order: x ascending means CNF descending.
    std::vector<std::size_t> order(k.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return k.points[a].x < k.points[b].x;
    });
    for (std::size_t i = 1; i < order.size() && ok; ++i) {
        ok = cnf_compare(parse_cnf(k.labels[order[i - 1]]),
                         parse_cnf(k.labels[order[i]])) > 0;
    }
    // Block geometry: everything lives in {0} u [1/(depth+1), 1], and
    // consecutive blocks keep a gap of at least half the smaller span.
    const double lo_cap = 1.0 / static_cast<double>(ctx.cfg.omega_depth + 1);
    std::vector<double> block_min(ctx.cfg.omega_depth, 1e300);
    std::vector<double> block_max(ctx.cfg.omega_depth, -1e300);
    for (std::size_t i = 0; i < k.points.size() && ok; ++i) {
        const double x = k.points[i].x;
        if (x == 0.0) continue;
        ok = x >= lo_cap - 1e-12 && x <= 1.0;
        const auto n = static_cast<std::size_t>(std::floor(1.0 / x));
        if (n >= 1 && n <= ctx.cfg.omega_depth) {
            block_min[n - 1] = std::min(block_min[n - 1], x);
            block_max[n - 1] = std::max(block_max[n - 1], x);
        }
    }
    double min_gap_ratio = 1e300;
    for (std::size_t n = 1; n + 1 <= ctx.cfg.omega_depth && ok; ++n) {
        const double gap = block_min[n - 1] - block_max[n];
        const double smaller = block_max[n] - block_min[n];
        ok = gap > 0.0 && gap >= 0.5 * smaller;
        min_gap_ratio = std::min(min_gap_ratio, gap / std::max(smaller, 1e-300));
    }
    witness["min_gap_ratio"] = format_double(min_gap_ratio);
    ClaimReport rep = pass_fail(ok);
    rep.tolerance = 0.0;
    rep.budget = {{"depth", ctx.cfg.omega_depth}, {"points", k.points.size()}};
    rep.worst_witness = witness;
    return rep;
}

ClaimReport claim_k_not_topological(Ctx& ctx) {
    ClaimReport rep;
    rep.status = ClaimReport::Status::evidence_only;
    rep.tolerance = 0.0;
    rep.budget = {{"depth", ctx.cfg.omega_depth}};
    json heights = json::array();
    for (std::size_t n = 1; n <= ctx.cfg.omega_depth; ++n) heights.push_back(n);
    rep.worst_witness = {
        {"note", "the block space realizes height w, a limit ordinal; spaces "
                 "with limit height carry no finite self-map cover system"},
        {"height", "w"},
        {"block_heights", heights}};
    return rep;
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = {
        {"snake", "snake.f-below-identity", claim_snake_below_identity},
        {"snake", "snake.f-strictly-monotone", claim_snake_monotone},
        {"snake", "snake.weak-contraction", claim_snake_weak_contraction},
        {"snake", "snake.shift-law", claim_snake_shift_law},
        {"snake", "snake.cover-maps", claim_snake_cover_maps},
        {"snake", "snake.invariance", claim_snake_invariance},
        {"snake", "snake.sanders-lengths", claim_snake_sanders},
        {"snake", "snake.not-ifs-attractor", claim_snake_not_ifs},
        {"sharkteeth", "sharkteeth.wave-scaling", claim_wave_scaling},
        {"sharkteeth", "sharkteeth.row-index", claim_row_index},
        {"sharkteeth", "sharkteeth.row-amplitudes", claim_row_amplitudes},
        {"sharkteeth", "sharkteeth.rows-on-curve", claim_rows_on_curve},
        {"sharkteeth", "sharkteeth.tent-lipschitz", claim_tent_lipschitz},
        {"sharkteeth", "sharkteeth.tent-cover", claim_tent_cover},
        {"sharkteeth", "prop1.free-arc", claim_prop1_free_arc},
        {"sharkteeth", "prop1.covers", claim_prop1_covers},
        {"sharkteeth", "prop1.f-lipschitz", claim_prop1_f_lipschitz},
        {"sharkteeth", "prop1.diam-2-3-m", claim_prop1_certificate},
        {"sharkteeth", "prop1.collapse", claim_prop1_collapse},
        {"sharkteeth", "sharkteeth.attached-covers", claim_attached_instance},
        {"sharkteeth", "sharkteeth.attached-certificate", claim_attached_certificate},
        {"sharkteeth", "sharkteeth.not-banach", claim_shark_not_banach},
        {"dendrite", "dendrite.arc-lengths", claim_dendrite_lengths},
        {"dendrite", "dendrite.containment", claim_dendrite_containment},
        {"dendrite", "dendrite.sector-gaps", claim_dendrite_sector_gaps},
        {"dendrite", "dendrite.zigzag-simple", claim_dendrite_zigzag},
        {"dendrite", "dendrite.straight-geometry", claim_straight_geometry},
        {"dendrite", "dendrite.ifs-lipschitz", claim_dendrite_lipschitz},
        {"dendrite", "dendrite.invariance", claim_dendrite_invariance},
        {"dendrite", "dendrite.attractor-iteration", claim_dendrite_iteration},
        {"dendrite", "dendrite.correspondence", claim_dendrite_correspondence},
        {"dendrite", "dendrite.not-weak-ifs", claim_dendrite_not_weak_ifs},
        {"scattered", "scattered.heights-powers", claim_heights_powers},
        {"scattered", "scattered.height-limit", claim_height_limit},
        {"scattered", "scattered.derivative-divisibility", claim_derivative_divisibility},
        {"scattered", "scattered.classification", claim_classification},
        {"scattered", "scattered.embedding-order", claim_embedding},
        {"scattered", "scattered.k-not-topological-fractal", claim_k_not_topological},
    };
    return claims;
}

}  // namespace

std::string to_string(ClaimReport::Status status) {
    switch (status) {
        case ClaimReport::Status::pass: return "pass";
        case ClaimReport::Status::fail: return "fail";
        case ClaimReport::Status::evidence_only: return "evidence-only";
    }
    return "unknown";
}

json claim_report_to_json(const ClaimReport& report) {
    return json{{"claim_id", report.claim_id},
                {"status", to_string(report.status)},
                {"worst_witness", report.worst_witness},
                {"tolerance", report.tolerance},
                {"budget", report.budget},
                {"runtime_ms", report.runtime_ms}};
}

std::vector<std::string> verify_suites() {
    return {"snake", "sharkteeth", "dendrite", "scattered", "all"};
}

bool is_verify_suite(const std::string& name) {
    const auto suites = verify_suites();
    return std::find(suites.begin(), suites.end(), name) != suites.end();
}

std::vector<ClaimReport> run_suite(const std::string& suite, const RunConfig& cfg) {
    if (!is_verify_suite(suite)) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (!cfg.has_seed) {
        throw std::invalid_argument("sampled checks need --seed");
    }
    Ctx ctx(cfg);
    std::vector<ClaimReport> reports;
    for (const Claim& claim : registry()) {
        if (suite != "all" && suite != claim.suite) continue;
        const auto start = std::chrono::steady_clock::now();
        ClaimReport rep = claim.fn(ctx);
        rep.claim_id = claim.id;
        rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start).count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

json reports_to_json(const std::vector<ClaimReport>& reports) {
    json claims = json::array();
    for (const ClaimReport& r : reports) claims.push_back(claim_report_to_json(r));
    return json{{"schema_version", 1}, {"claims", std::move(claims)}};
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config " + path.string());
    }
    json doc = json::parse(in);
    RunConfig cfg;
    if (doc.contains("seed")) {
        cfg.seed = doc["seed"].get<std::uint64_t>();
        cfg.has_seed = true;
    }
    if (doc.contains("tolerance")) cfg.tolerance_scale = doc["tolerance"].get<double>();
    if (doc.contains("snake")) {
        const json& j = doc["snake"];
        if (j.contains("depth")) cfg.snake_depth = j["depth"].get<std::size_t>();
        if (j.contains("angular_step")) cfg.snake_angular_step = j["angular_step"].get<double>();
        if (j.contains("radial_step")) cfg.snake_radial_step = j["radial_step"].get<double>();
    }
    if (doc.contains("sharkteeth")) {
        const json& j = doc["sharkteeth"];
        if (j.contains("rows")) cfg.shark_rows = j["rows"].get<std::size_t>();
        if (j.contains("samples_per_row")) {
            cfg.shark_samples_per_row = j["samples_per_row"].get<std::size_t>();
        }
    }
    if (doc.contains("dendrite")) {
        const json& j = doc["dendrite"];
        if (j.contains("depth")) cfg.dendrite_depth = j["depth"].get<std::size_t>();
        if (j.contains("samples_per_arc")) {
            cfg.dendrite_samples_per_arc = j["samples_per_arc"].get<std::size_t>();
        }
    }
    if (doc.contains("dendrite_straight")) {
        const json& j = doc["dendrite_straight"];
        if (j.contains("depth")) cfg.straight_depth = j["depth"].get<std::size_t>();
        if (j.contains("samples_per_arc")) {
            cfg.straight_samples_per_arc = j["samples_per_arc"].get<std::size_t>();
        }
    }
    if (doc.contains("omega_omega")) {
        const json& j = doc["omega_omega"];
        if (j.contains("depth")) cfg.omega_depth = j["depth"].get<std::size_t>();
    }
    if (doc.contains("prop1")) {
        const json& j = doc["prop1"];
        if (j.contains("sample_step")) cfg.prop1_sample_step = j["sample_step"].get<double>();
    }
    if (doc.contains("budgets")) {
        const json& j = doc["budgets"];
        if (j.contains("weak_pairs")) cfg.weak_pair_budget = j["weak_pairs"].get<std::size_t>();
        if (j.contains("lip_pairs")) cfg.lip_pair_budget = j["lip_pairs"].get<std::size_t>();
    }
    return cfg;
}

const std::vector<std::string> kBuildSpaces = {
    "snake", "sharkteeth", "dendrite", "dendrite-straight", "omega-omega"};

BuildOutput cmd_build(const std::string& space, const RunConfig& cfg,
                      const std::filesystem::path& out_csv) {
    PointCloud cloud;
    json params;
    if (space == "snake") {
        const SnakeSpace s = build_snake(cfg.snake_depth, cfg.snake_angular_step,
                                         cfg.snake_radial_step);
        cloud = s.cloud;
        params = {{"depth", cfg.snake_depth},
                  {"angular_step", format_double(cfg.snake_angular_step)},
                  {"radial_step", format_double(cfg.snake_radial_step)}};
    } else if (space == "sharkteeth") {
        const SharkTeethSpace s =
            build_shark_teeth(cfg.shark_rows, cfg.shark_samples_per_row);
        cloud = s.cloud;
        params = {{"rows", cfg.shark_rows},
                  {"samples_per_row", cfg.shark_samples_per_row}};
    } else if (space == "dendrite") {
        const DendriteSpace s =
            build_dendrite(cfg.dendrite_depth, cfg.dendrite_samples_per_arc);
        cloud = s.cloud;
        params = {{"depth", cfg.dendrite_depth},
                  {"samples_per_arc", cfg.dendrite_samples_per_arc}};
    } else if (space == "dendrite-straight") {
        const StraightDendrite s =
            straighten_dendrite(cfg.straight_depth, cfg.straight_samples_per_arc);
        cloud = s.cloud;
        params = {{"depth", cfg.straight_depth},
                  {"samples_per_arc", cfg.straight_samples_per_arc}};
    } else if (space == "omega-omega") {
        cloud = embed_in_unit_interval(CnfOrdinal::omega_omega_marker(),
                                       cfg.omega_depth);
        params = {{"depth", cfg.omega_depth}};
    } else {
        throw std::invalid_argument("unknown space '" + space + "'");
    }
    write_point_cloud_csv(out_csv, cloud);
    write_cloud_metadata(out_csv, space, cloud, params);
    return {out_csv, metadata_path_for(out_csv), cloud.points.size()};
}

bool cmd_verify(const std::string& suite, const RunConfig& cfg,
                const std::filesystem::path& report_path,
                std::vector<ClaimReport>* out_reports) {
    std::vector<ClaimReport> reports = run_suite(suite, cfg);
    atomic_write_file(report_path, reports_to_json(reports).dump(2) + "\n");
    bool all_pass = true;
    for (const ClaimReport& r : reports) {
        if (r.status == ClaimReport::Status::fail) all_pass = false;
    }
    if (out_reports) *out_reports = std::move(reports);
    return all_pass;
}

void cmd_render(const std::filesystem::path& input_csv,
                const std::filesystem::path& out_svg, const SvgStyle& style) {
    // Rendering needs no resolution semantics; a denormal keeps dedup inert.
    const PointCloud cloud = read_point_cloud_csv(input_csv, 1e-300);
    atomic_write_file(out_svg, render_svg(cloud, style));
}

std::optional<std::size_t> cmd_min_word_length(
    const std::filesystem::path& system_json, const std::filesystem::path& cloud_csv,
    double threshold, std::size_t m_max, const RunConfig& cfg,
    const std::optional<std::filesystem::path>& free_arc_json,
    double resolution_override) {
    if (!(threshold > 0.0)) {
        throw std::invalid_argument("threshold must be positive");
    }
    IfsSystem system = read_ifs_json(system_json);
    const bool needs_instance = std::any_of(
        system.maps.begin(), system.maps.end(), [](const MapSpec& m) {
            return m.kind == MapSpec::Kind::named &&
                   (m.name == "sharkteeth_F" || m.name == "sharkteeth_G");
        });
    if (needs_instance) {
        FreeArcSpace space = free_arc_json
                                 ? read_free_arc_config(*free_arc_json)
                                 : default_prop1_space(cfg.prop1_sample_step);
        const FractalSystem fs = build_free_arc_system(space);
        for (MapSpec& m : system.maps) {
            if (m.kind == MapSpec::Kind::named &&
                (m.name == "sharkteeth_F" || m.name == "sharkteeth_G")) {
                if (m.params.size() != 2) {
                    throw std::runtime_error("free-arc map needs (index, slot) params");
                }
                m.params[1] = static_cast<double>(fs.instance_slot);
            }
        }
    }
    const PointCloud cloud = read_point_cloud_auto(cloud_csv, resolution_override);
    for (std::size_t m = 0; m <= m_max; ++m) {
        const CoverCertificate cert =
            certify_composition_diameter(system, cloud, m, threshold);
        if (cert.passes) return m;
    }
    return std::nullopt;
}

}  // namespace ifslab
