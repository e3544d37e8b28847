#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/maps.hpp"

namespace ifslab {

/// Sampled snake arc: circles O_n of radius 1/n over angles [pi/2, 2*pi]
/// joined by radial intervals I_n with r in [1/(n+1), 1/n] at angle
/// (n mod 2)*pi/2, for n = 1..N, plus the origin. The angular interval is
/// sampled closed so that consecutive components stay connected; the closure
/// adds nothing to the underlying compact set.
struct SnakeSpace {
    std::size_t depth = 0;
    PointCloud cloud;
    double angular_step = 0.0;
    double radial_step = 0.0;
};

/// Labels: "O_n", "I_n", "origin". resolution = max(angular_step, radial_step).
SnakeSpace build_snake(std::size_t depth, double angular_step, double radial_step);

/// Radial squeeze profile: 0 at 0 and (r*n*(n+1)+2)/((n+2)*(n+3)) on
/// [1/(n+1), 1/n]. Adjacent branches agree at shared endpoints; ties resolve
/// to the higher-n branch. Throws std::domain_error outside [0, 1].
double radial_profile(double r);

/// The weak contraction (r, alpha) -> (radial_profile(r), alpha). Sends
/// O_n u I_n onto O_{n+2} u I_{n+2} and fixes the origin.
PolarPoint snake_weak_map(const PolarPoint& p);

/// MapSpec wrapper for snake_weak_map.
MapSpec snake_map();

/// Length of the free subarc K = O_1 u I_1 u O_2 u I_2 (closed form).
double snake_cover_arc_length();

/// Evaluation kernel for the cover maps g_i: retract the snake onto K
/// (collapsing everything at radius <= 1/3 to the junction where I_2 meets
/// O_3), then squeeze K onto its i-th of m equal arc-length pieces.
Point2 snake_cover_eval(std::size_t i, std::size_t m, const Point2& p);

/// Builds g_1..g_m and verifies each has sampled Lipschitz ratio < 0.95 on the
/// given snake sample; otherwise throws naming the smallest admissible m found
/// by doubling search.
std::vector<MapSpec> build_cover_maps(const SnakeSpace& snake, std::size_t m);

/// Smallest power-of-two map count whose sampled Lipschitz ratios all fall
/// below 0.95 (the doubling search used by build_cover_maps diagnostics).
std::size_t find_cover_map_count(const SnakeSpace& snake);

/// Arc-length diagnostics for the hypotheses of the inherited no-IFS-attractor
/// criterion: every proper subarc away from the origin has finite length while
/// the length toward the origin diverges like the harmonic series.
struct SandersReport {
    std::vector<double> o_lengths;            // sampled length of each O_n
    std::vector<double> i_lengths;            // exact length of each I_n
    std::vector<double> finite_part_lengths;  // cumulative over O_1 I_1 ... O_n I_n
    std::vector<double> tail_lower_bounds;    // remaining O-length below index n
    std::pair<std::size_t, double> divergence_witness{0, 0.0};
    bool diverged = false;
};

/// Cumulative lengths for n <= N at fine sampling; flags the first n whose
/// cumulative length exceeds `bound`.
SandersReport sanders_report(std::size_t N, double bound = 24.0);

}  // namespace ifslab
