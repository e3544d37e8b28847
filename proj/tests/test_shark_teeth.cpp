#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/shark_teeth.hpp"

using namespace ifslab;

namespace {

std::vector<Point2> labeled(const PointCloud& cloud, const std::string& label) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        if (cloud.labels[i] == label) out.push_back(cloud.points[i]);
    }
    return out;
}

}  // namespace

TEST_CASE("wave basics and periodicity") {
    CHECK(wave(0.25) == 0.25);
    CHECK(wave(0.75) == doctest::Approx(0.25));
    CHECK(wave(-0.25) == doctest::Approx(0.25));  // periodicity across 0
    CHECK(wave(0.0) == 0.0);
    CHECK(wave(0.5) == 0.5);
    for (int i = 0; i < 1000; ++i) {
        const double t = -3.0 + i * 0.007;
        CHECK(std::fabs(wave(t) - wave(t + 1.0)) < 1e-12);
        CHECK(wave(t) >= 0.0);
        CHECK(wave(t) <= 0.5);
    }
}

TEST_CASE("scaled wave") {
    for (int i = 0; i <= 100; ++i) {
        const double t = i / 100.0;
        CHECK(scaled_wave(0, t) == wave(t));
    }
    CHECK(scaled_wave(2, 0.1) == doctest::Approx(0.1));  // 4*0.1 below the fold

    // Grid-max oracle: peak value 2^-n-1 on a dyadic grid that hits peaks.
    for (std::size_t n = 0; n <= 6; ++n) {
        double max_v = 0.0;
        for (int i = 0; i <= (1 << 12); ++i) {
            max_v = std::max(max_v, scaled_wave(n, std::ldexp(double(i), -12)));
        }
        CHECK(std::fabs(max_v - std::ldexp(1.0, -int(n) - 1)) <= 1e-6);
    }

    // 2^-n periodicity.
    for (std::size_t n = 0; n <= 6; ++n) {
        const double period = std::ldexp(1.0, -int(n));
        for (int i = 0; i < 1000; ++i) {
            const double t = i / 1000.0;
            CHECK(std::fabs(scaled_wave(n, t) - scaled_wave(n, t + period)) < 1e-12);
        }
    }
}

TEST_CASE("row index boundaries and monotonicity") {
    CHECK(row_index(1) == 0);
    CHECK(row_index(3) == 1);
    CHECK(row_index(15) == 2);
    CHECK(row_index(255) == 3);
    // Oracle: n_k steps exactly at k = 2^(2^m) - 1 -> the next k bumps it.
    CHECK(row_index(2) == 0);
    CHECK(row_index(4) == 1);
    CHECK(row_index(14) == 1);
    CHECK(row_index(16) == 2);
    CHECK(row_index(254) == 2);
    CHECK(row_index(256) == 3);
    CHECK(row_index(65534) == 3);
    CHECK(row_index(65535) == 4);  // k+1 = 2^16 hits the threshold exactly
    std::size_t prev = 0;
    for (std::size_t k = 1; k <= 10000; ++k) {
        CHECK(row_index(k) >= prev);
        prev = row_index(k);
    }
    CHECK_THROWS_AS(row_index(0), std::invalid_argument);
}

TEST_CASE("shark teeth construction") {
    const SharkTeethSpace space = build_shark_teeth(4, 401);
    // Row 1 peak height 1/2 (n_1 = 0); row 3 peak height 1/12 (n_3 = 1).
    const auto m1 = labeled(space.cloud, "M_1");
    double peak1 = 0.0;
    for (const Point2& p : m1) peak1 = std::max(peak1, p.y);
    CHECK(peak1 == doctest::Approx(0.5));

    const auto m3 = labeled(space.cloud, "M_3");
    double peak3 = 0.0;
    for (const Point2& p : m3) peak3 = std::max(peak3, p.y);
    CHECK(peak3 == doctest::Approx(1.0 / 12.0));

    // Rows sit exactly on their curves; both ends of every row are on the
    // bone (they dedup onto the bone samples, so check the formula instead).
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(scaled_wave(row_index(k), 0.0) == 0.0);
        CHECK(scaled_wave(row_index(k), 1.0) == 0.0);
        for (const Point2& p : labeled(space.cloud, "M_" + std::to_string(k))) {
            const double expect = scaled_wave(row_index(k), p.x) / double(k);
            CHECK(std::fabs(p.y - expect) < 1e-12);
        }
    }

    CHECK_THROWS_AS(build_shark_teeth(0, 100), std::invalid_argument);
}

TEST_CASE("tent map") {
    CHECK(tent(0.5) == 0.5);
    CHECK(tent(0.0) == 0.0);
    CHECK(tent(1.0) == 0.0);
    CHECK(tent(0.75) == doctest::Approx(0.25));
    CHECK_THROWS_AS(tent(1.5), std::domain_error);
    CHECK_THROWS_AS(tent(-0.2), std::domain_error);
}

TEST_CASE("tent contractions") {
    CHECK(tent_contraction(0, 0.5) == doctest::Approx(1.0 / 3.0));
    CHECK(tent_contraction(2, 1.0) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(tent_contraction(3, 0.5), std::invalid_argument);

    // Images tile [0,1]: every grid point is within 1e-3 of some image point.
    std::vector<double> image;
    for (std::size_t i = 0; i <= 2; ++i) {
        for (int g = 0; g <= 10000; ++g) {
            image.push_back(tent_contraction(i, g / 10000.0));
        }
        // Range check: f_i([0,1]) = [i/3, (i+1)/3].
        for (int g = 0; g <= 100; ++g) {
            const double v = tent_contraction(i, g / 100.0);
            CHECK(v >= i / 3.0 - 1e-12);
            CHECK(v <= (i + 1) / 3.0 + 1e-12);
        }
    }
    std::sort(image.begin(), image.end());
    for (int g = 0; g <= 10000; ++g) {
        const double x = g / 10000.0;
        auto it = std::lower_bound(image.begin(), image.end(), x);
        double best = 1e300;
        if (it != image.end()) best = std::min(best, *it - x);
        if (it != image.begin()) best = std::min(best, x - *(it - 1));
        CHECK(best <= 1e-3);
    }
}

TEST_CASE("free arc space construction and failure") {
    const FreeArcSpace space = default_prop1_space(1e-3);
    CHECK(space.sides.size() == 2);
    CHECK(space.arc_cumlen.back() == doctest::Approx(1.8));
    // Side loops close on themselves.
    for (const Polyline& side : space.sides) {
        CHECK(dist(side.vertices.front(), side.vertices.back()) < 1e-12);
    }

    // A side that loops back onto the middle of the arc adds a third touch
    // cluster, so the free-arc test must reject it.
    const Polyline arc = Polyline::create({{0.0, 0.0}, {1.0, 0.0}});
    const std::vector<Polyline> sides = {
        Polyline::create({{0.0, 0.0}, {-0.3, 0.0}}),
        Polyline::create({{1.0, 0.0}, {1.2, 0.5}, {0.5, 0.5}, {0.5, 0.0005}}),
    };
    CHECK_THROWS_WITH_AS(make_free_arc_space(arc, sides, 1e-3),
                         "L is not a free arc at this resolution",
                         std::runtime_error);

    // Sides must attach to an arc endpoint.
    const std::vector<Polyline> detached = {
        Polyline::create({{0.4, 0.1}, {0.4, 0.4}})};
    CHECK_THROWS_AS(make_free_arc_space(arc, detached, 1e-3),
                    std::invalid_argument);
}

TEST_CASE("free arc system covers and contracts") {
    const FreeArcSpace space = default_prop1_space(1e-3);
    const FractalSystem fs = build_free_arc_system(space);
    REQUIRE(fs.system.maps.size() == 5);
    REQUIRE(fs.f_count == 3);
    const double tol = 2.0 * space.cloud.resolution;

    std::vector<Point2> f_union;
    for (std::size_t i = 0; i < 3; ++i) {
        for (const Point2& p : space.cloud.points) {
            f_union.push_back(apply_map(fs.system.maps[i], p));
        }
    }
    const auto arc_pts = labeled(space.cloud, "L");
    CHECK(directed_hausdorff(f_union, arc_pts) <= tol);
    CHECK(directed_hausdorff(arc_pts, f_union) <= tol);

    for (std::size_t j = 1; j <= 2; ++j) {
        std::vector<Point2> g_image;
        for (const Point2& p : space.cloud.points) {
            g_image.push_back(apply_map(fs.system.maps[2 + j], p));
        }
        const auto side_pts = labeled(space.cloud, "P_" + std::to_string(j));
        CHECK(directed_hausdorff(g_image, side_pts) <= tol);
        CHECK(directed_hausdorff(side_pts, g_image) <= tol);
    }

    // Lipschitz 2/3 for the arc squeezes on the straight-arc instance.
    for (std::size_t i = 0; i < 3; ++i) {
        const LipschitzReport rep =
            estimate_lipschitz(fs.system.maps[i], space.cloud, 100000, 5 + i);
        CHECK(rep.sup_ratio <= 2.0 / 3.0 + 1e-2);
    }
}

TEST_CASE("length-2 words with an inner side retraction collapse") {
    const FreeArcSpace space = default_prop1_space(1e-3);
    const FractalSystem fs = build_free_arc_system(space);
    const double tol = 2.0 * space.cloud.resolution;
    // w1 . G_j for every outer w1: G_j applied first.
    for (std::size_t outer = 0; outer < 5; ++outer) {
        for (std::size_t g = 3; g < 5; ++g) {
            std::vector<Point2> image;
            for (const Point2& p : space.cloud.points) {
                image.push_back(apply_map(fs.system.maps[outer],
                                          apply_map(fs.system.maps[g], p)));
            }
            CHECK(diameter(image) <= tol);
        }
    }
}

TEST_CASE("composition certificates at several word lengths") {
    const FreeArcSpace space = default_prop1_space(1e-3);
    const FractalSystem fs = build_free_arc_system(space);
    const double res = space.cloud.resolution;
    for (std::size_t m : {std::size_t{4}, std::size_t{7}}) {
        const double threshold = std::pow(2.0 / 3.0, double(m)) + 2.0 * res;
        const CoverCertificate cert = certify_composition_diameter(
            fs.system, space.cloud, m, threshold, {3, 4});
        CHECK(cert.passes);
        CHECK(cert.collapsed_max_diameter <= 2.0 * res);
        std::size_t expected_words = 1;
        for (std::size_t k = 0; k < m; ++k) expected_words *= 5;
        CHECK(cert.words_total == expected_words);
    }
}

TEST_CASE("certificate maxima are monotone in word length") {
    const FreeArcSpace space = default_prop1_space(2e-3);
    const FractalSystem fs = build_free_arc_system(space);
    double prev = 1e300;
    for (std::size_t m = 3; m <= 6; ++m) {
        const CoverCertificate cert =
            certify_composition_diameter(fs.system, space.cloud, m, 10.0);
        CHECK(cert.max_diameter <= prev + 2.0 * space.cloud.resolution);
        prev = cert.max_diameter;
    }
}

TEST_CASE("attached shark instance") {
    const SharkTeethSpace shark = build_shark_teeth(8, 240);
    const FreeArcSpace space = attached_shark_space(shark);
    REQUIRE(space.sides.size() == 2);
    const FractalSystem fs = build_free_arc_system(space);
    const double tol = 2.0 * space.cloud.resolution;

    // The first side retraction covers the serpentine tour of the teeth.
    std::vector<Point2> g1_image;
    for (const Point2& p : space.cloud.points) {
        g1_image.push_back(apply_map(fs.system.maps[3], p));
    }
    const auto side1 = labeled(space.cloud, "P_1");
    CHECK(directed_hausdorff(g1_image, side1) <= tol);
    CHECK(directed_hausdorff(side1, g1_image) <= tol);

    // All shark cloud points appear on the tour side.
    double worst = 0.0;
    for (const Point2& p : shark.cloud.points) {
        double best = 1e300;
        for (const Point2& q : side1) best = std::min(best, dist(p, q));
        worst = std::max(worst, best);
    }
    CHECK(worst <= space.cloud.resolution);
}
