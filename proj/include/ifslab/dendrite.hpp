#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/maps.hpp"

namespace ifslab {

/// Piecewise-linear dendrite: arcs L_n from the origin to
/// rho_n = polar(2^{-n}, 2^{-n}), realized as radial zigzags of
/// K_n = 2*ceil(2^{2n-1}) alternating legs at strictly increasing angles
/// inside the polar sector radius [0, 2^{-n}) x angle
/// (2^{-n} - 2^{-n-2}, 2^{-n} + 2^{-n-2}), with the outer leg radius solved so
/// polyline_length(L_n) = 2^n exactly. The sector box is read in polar
/// coordinates; that reading keeps distinct arcs disjoint away from the
/// origin.
struct DendriteSpace {
    std::size_t depth = 0;
    std::size_t samples_per_arc = 0;
    std::vector<Polyline> arcs;  // exact zigzag vertex chains L_1..L_N
    PointCloud cloud;            // uniform arc-length resampling, labels "L_n"
    // sample_index[n-1][i] = cloud index of the sample at arc-length fraction
    // i/(samples_per_arc-1) along L_n, or -1 where deduplication merged it
    // into an earlier point (the shared origin, or a fold of the zigzag).
    std::vector<std::vector<std::ptrdiff_t>> sample_index;
};

DendriteSpace build_dendrite(std::size_t depth, std::size_t samples_per_arc);

/// Straightened copy: segments J_n at angle 2^{-n} with length 2^{-n},
/// meeting only at the origin. Sample i of J_n sits at arc-length fraction
/// i/(samples_per_arc-1), matching the fractions used for L_n, so the
/// straightening correspondence is the per-arc index map i -> i.
struct StraightDendrite {
    std::size_t depth = 0;
    std::size_t samples_per_arc = 0;
    PointCloud cloud;  // labels "J_n" plus "origin"
    std::vector<double> segment_angles;   // 2^{-n}
    std::vector<double> segment_lengths;  // 2^{-n}
    std::vector<std::vector<std::ptrdiff_t>> sample_index;  // as in DendriteSpace
};

StraightDendrite straighten_dendrite(std::size_t depth, std::size_t samples_per_arc);

/// Pairs (index in P.cloud, index in D.cloud) matching equal arc-length
/// fractions along L_n and J_n. Requires equal per-arc sample counts.
std::vector<std::pair<std::size_t, std::size_t>> straightening_correspondence(
    const DendriteSpace& dendrite, const StraightDendrite& straight,
    std::size_t arc);

/// Map kernels on the straightened dendrite, in polar coordinates:
///   h : (r, a) -> (r/2, a/2)      shifts every segment index by one,
///   g1: (r, a) -> (r/2, 1/2)      first half of J_1,
///   g2: (r, a) -> (1/2 - r/2, 1/2) second half of J_1.
Point2 dendrite_h(const Point2& p);
Point2 dendrite_g1(const Point2& p);
Point2 dendrite_g2(const Point2& p);

/// The strict-mode system {h, g1, g2} exhibiting the straightened dendrite as
/// an attractor.
IfsSystem dendrite_ifs();

}  // namespace ifslab
