#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/maps.hpp"

using namespace ifslab;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// The dyadic line system {x/2, x/2 + 1/2} embedded at y = 0; attractor [0,1].
IfsSystem line_system() {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_affine({0.5, 0.0, 0.0, 0.5}, {0.0, 0.0}, 0.5));
    maps.push_back(MapSpec::make_affine({0.5, 0.0, 0.0, 0.5}, {0.5, 0.0}, 0.5));
    return IfsSystem::create(std::move(maps), IfsSystem::Mode::strict);
}

// Largest singular value of a 2x2 matrix, in closed form.
double sigma_max(double a, double b, double c, double d) {
    const double f = a * a + b * b + c * c + d * d;
    const double g = a * a + b * b - c * c - d * d;
    const double h = a * c + b * d;
    return std::sqrt((f + std::sqrt(g * g + 4.0 * h * h)) / 2.0);
}

bool contains_point(const std::vector<Point2>& pts, const Point2& p, double tol) {
    return std::any_of(pts.begin(), pts.end(),
                       [&](const Point2& q) { return dist(p, q) <= tol; });
}

}  // namespace

TEST_CASE("apply_map affine") {
    const MapSpec translate = MapSpec::make_affine({1, 0, 0, 1}, {1.0, 2.0});
    const Point2 t = apply_map(translate, {0.0, 0.0});
    CHECK(t.x == 1.0);
    CHECK(t.y == 2.0);

    const MapSpec half = MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.0, 0.0});
    const Point2 h = apply_map(half, {1.0, 0.0});
    CHECK(h.x == 0.5);
    CHECK(h.y == 0.0);
}

TEST_CASE("apply_map named dispatch") {
    const MapSpec f = MapSpec::make_named("snake_f");
    const Point2 image = apply_map(f, polar_to_cartesian(PolarPoint(1.0, kPi)));
    const PolarPoint q = cartesian_to_polar(image);
    CHECK(q.r == doctest::Approx(1.0 / 3.0));
    CHECK(q.alpha == doctest::Approx(kPi));

    CHECK_THROWS_AS(MapSpec::make_named("no_such_map"), std::invalid_argument);
    MapSpec bogus = f;
    bogus.name = "forged";
    CHECK_THROWS_AS(apply_map(bogus, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("strict mode requires claimed bounds") {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.0, 0.0}));
    CHECK_THROWS_AS(IfsSystem::create(std::move(maps), IfsSystem::Mode::strict),
                    std::invalid_argument);
    CHECK_THROWS_AS(IfsSystem::create({}, IfsSystem::Mode::weak),
                    std::invalid_argument);
}

TEST_CASE("hutchinson on the line system") {
    const IfsSystem F = line_system();
    const PointCloud seed = PointCloud::create({{0.0, 0.0}}, 1e-3);
    const PointCloud once = hutchinson(F, seed);
    REQUIRE(once.points.size() == 2);
    CHECK(contains_point(once.points, {0.0, 0.0}, 1e-12));
    CHECK(contains_point(once.points, {0.5, 0.0}, 1e-12));

    const PointCloud twice = hutchinson(F, once);
    REQUIRE(twice.points.size() == 4);
    for (double x : {0.0, 0.25, 0.5, 0.75}) {
        CHECK(contains_point(twice.points, {x, 0.0}, 1e-12));
    }
    // Labels record the applied map index.
    CHECK(std::count(twice.labels.begin(), twice.labels.end(), "0") == 2);
    CHECK(std::count(twice.labels.begin(), twice.labels.end(), "1") == 2);
}

TEST_CASE("hutchinson with an identity map yields a superset") {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_affine({1, 0, 0, 1}, {0.0, 0.0}));
    maps.push_back(MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.25, 0.1}));
    const IfsSystem F = IfsSystem::create(std::move(maps), IfsSystem::Mode::weak);
    const PointCloud seed =
        PointCloud::create({{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.4}}, 1e-3);
    const PointCloud image = hutchinson(F, seed);
    for (const Point2& p : seed.points) {
        CHECK(contains_point(image.points, p, 1e-12));
    }
}

TEST_CASE("hutchinson monotone in the seed") {
    const IfsSystem F = line_system();
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Point2> small;
    for (int i = 0; i < 40; ++i) small.push_back({u(rng), u(rng)});
    std::vector<Point2> big = small;  // A listed first keeps dedup stable
    for (int i = 0; i < 40; ++i) big.push_back({u(rng), u(rng)});
    const PointCloud ha = hutchinson(F, PointCloud::create(small, 1e-3));
    const PointCloud hb = hutchinson(F, PointCloud::create(big, 1e-3));
    for (const Point2& p : ha.points) {
        CHECK(contains_point(hb.points, p, 1e-13));
    }
}

TEST_CASE("iterate_attractor reaches the unit interval") {
    const IfsSystem F = line_system();
    const PointCloud seed = PointCloud::create({{0.0, 0.0}}, 1e-3);
    const AttractorResult result = iterate_attractor(F, seed, 1e-3, 64);
    CHECK(result.converged);
    CHECK(result.residual <= 1e-3);

    // Against the dyadic grid of [0,1].
    std::vector<Point2> grid;
    for (int k = 0; k <= 1024; ++k) grid.push_back({k / 1024.0, 0.0});
    const double h = hausdorff_distance(result.cloud,
                                        PointCloud::create(std::move(grid), 1e-3));
    CHECK(h <= 2e-3);
}

TEST_CASE("iterate_attractor single map converges to the fixed point") {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.0, 0.0}, 0.5));
    const IfsSystem F = IfsSystem::create(std::move(maps), IfsSystem::Mode::strict);
    const double tol = 1e-3;
    const AttractorResult result = iterate_attractor(
        F, PointCloud::create({{1.0, 0.0}}, tol), tol, 64);
    CHECK(result.converged);
    const auto bound = static_cast<std::size_t>(std::ceil(std::log2(1.0 / tol)));
    CHECK(result.iterations <= bound);
    REQUIRE(result.cloud.points.size() == 1);
    CHECK(dist(result.cloud.points[0], {0.0, 0.0}) <= 2.0 * tol);
}

TEST_CASE("iterate_attractor exhaustion is not an error") {
    const IfsSystem F = line_system();
    const AttractorResult result =
        iterate_attractor(F, PointCloud::create({{0.0, 0.0}}, 1e-3), 1e-12, 3);
    CHECK_FALSE(result.converged);
    CHECK(result.iterations == 3);
}

TEST_CASE("residual decay for strict systems") {
    const IfsSystem F = line_system();
    PointCloud cloud = PointCloud::create({{0.0, 0.0}}, 1e-3);
    double prev_residual = -1.0;
    for (int k = 0; k < 12; ++k) {
        PointCloud next = hutchinson(F, cloud);
        const double residual = hausdorff_distance(cloud, next);
        if (prev_residual >= 0.0) {
            CHECK(residual <= 0.5 * prev_residual + 2.0 * cloud.resolution);
        }
        prev_residual = residual;
        cloud = std::move(next);
    }
}

TEST_CASE("chaos game determinism and cross-method agreement") {
    const IfsSystem F = line_system();
    CHECK_THROWS_AS(chaos_game(F, 10, 10, 1), std::invalid_argument);

    const PointCloud a = chaos_game(F, 20000, 100, 42);
    const PointCloud b = chaos_game(F, 20000, 100, 42);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }

    const double tol = 1e-3;
    const AttractorResult det =
        iterate_attractor(F, PointCloud::create({{0.0, 0.0}}, tol), tol, 64);
    CHECK(hausdorff_distance(a, det.cloud) <= 10.0 * tol);
}

TEST_CASE("chaos game rejects expansive families") {
    std::vector<MapSpec> maps;
    maps.push_back(MapSpec::make_affine({1, 0, 0, 1}, {0.0, 0.0}));  // identity
    maps.push_back(MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.5, 0.1}));
    const IfsSystem F = IfsSystem::create(std::move(maps), IfsSystem::Mode::weak);
    CHECK_THROWS_AS(chaos_game(F, 3000, 10, 9), std::domain_error);
}

TEST_CASE("estimate_lipschitz exact scaling") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < 300; ++i) pts.push_back({u(rng), u(rng)});
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-6);
    const MapSpec half = MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.0, 0.0});
    const LipschitzReport rep = estimate_lipschitz(half, cloud, 20000, 7);
    CHECK(rep.sup_ratio == 0.5);  // exact: scaling by a power of two
    CHECK(rep.violation_count == 0);

    // A translation costs at most one rounding step per coordinate.
    const MapSpec shifted = MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.2, -0.1});
    const LipschitzReport rep2 = estimate_lipschitz(shifted, cloud, 20000, 7);
    CHECK(std::fabs(rep2.sup_ratio - 0.5) < 1e-12);
}

TEST_CASE("estimate_lipschitz flags isometries") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < 300; ++i) pts.push_back({u(rng), u(rng)});
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-6);
    const double c = std::cos(kPi / 4.0), s = std::sin(kPi / 4.0);
    const MapSpec rot = MapSpec::make_affine({c, -s, s, c}, {0.0, 0.0});
    const LipschitzReport rep = estimate_lipschitz(rot, cloud, 50000, 11);
    CHECK(std::fabs(rep.sup_ratio - 1.0) < 1e-12);
    CHECK_FALSE(rep.violations.empty());
    CHECK_FALSE(rep.passes_weak_contraction());
}

TEST_CASE("estimate_lipschitz matches the top singular value") {
    // Dense disk sample; oracle is the closed-form 2x2 singular value.
    std::vector<Point2> pts;
    for (int i = -60; i <= 60; ++i) {
        for (int j = -60; j <= 60; ++j) {
            const Point2 p{i / 60.0, j / 60.0};
            if (p.x * p.x + p.y * p.y <= 1.0) pts.push_back(p);
        }
    }
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-6);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int round = 0; round < 5; ++round) {
        const double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        const MapSpec m = MapSpec::make_affine({a, b, c, d}, {0.0, 0.0});
        const LipschitzReport rep = estimate_lipschitz(m, cloud, 200000, 23 + round);
        CHECK(std::fabs(rep.sup_ratio - sigma_max(a, b, c, d)) < 1e-3);
    }
}

TEST_CASE("check_weak_contraction verdicts") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point2> pts;
    for (int i = 0; i < 200; ++i) pts.push_back({u(rng), u(rng)});
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-6);

    const MapSpec identity = MapSpec::make_affine({1, 0, 0, 1}, {0.0, 0.0});
    const LipschitzReport id_rep = check_weak_contraction(identity, cloud, 5000, 3);
    CHECK(id_rep.violation_count == id_rep.pairs_sampled);  // every pair violates

    const MapSpec half = MapSpec::make_affine({0.5, 0, 0, 0.5}, {0.0, 0.0});
    CHECK(check_weak_contraction(half, cloud, 5000, 3).passes_weak_contraction());

    const PointCloud lonely = PointCloud::create({{0.0, 0.0}}, 1e-6);
    CHECK_THROWS_AS(check_weak_contraction(half, lonely, 10, 3),
                    std::invalid_argument);
}

TEST_CASE("certificate word length zero and budget") {
    const IfsSystem F = line_system();
    std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.25}};
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-4);
    const CoverCertificate cert =
        certify_composition_diameter(F, cloud, 0, 10.0);
    CHECK(cert.max_diameter == diameter(cloud));
    CHECK(cert.words_total == 1);
    CHECK(cert.passes);

    CHECK_THROWS_AS(certify_composition_diameter(F, cloud, 40, 1.0),
                    std::runtime_error);
    CHECK_THROWS_AS(certify_composition_diameter(F, cloud, 1, 0.0),
                    std::invalid_argument);
}

TEST_CASE("certificate shrinks with word length on the line system") {
    const IfsSystem F = line_system();
    std::vector<Point2> pts;
    for (int k = 0; k <= 200; ++k) pts.push_back({k / 200.0, 0.0});
    const PointCloud cloud = PointCloud::create(std::move(pts), 1e-2);
    double prev = 1e300;
    for (std::size_t m = 1; m <= 8; ++m) {
        const CoverCertificate cert =
            certify_composition_diameter(F, cloud, m, 10.0);
        CHECK(cert.words_total == (std::size_t{1} << m));
        // Image of any length-m word is a dyadic interval of length 2^-m.
        CHECK(cert.max_diameter <= std::ldexp(1.0, -static_cast<int>(m)) + 1e-12);
        CHECK(cert.max_diameter <= prev + 2.0 * cloud.resolution);
        prev = cert.max_diameter;
    }
}
