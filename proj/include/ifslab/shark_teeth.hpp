#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/maps.hpp"

namespace ifslab {

/// 1-periodic triangular wave: t - n on [n, n + 1/2], n - t on [n - 1/2, n].
/// Range [0, 1/2].
double wave(double t);

/// Homothetic copy 2^{-n} * wave(2^n t); range [0, 2^{-n-1}].
double scaled_wave(std::size_t n, double t);

/// n_k = floor(log2 log2 (k+1)), computed with integer thresholds 2^(2^n) so
/// boundary values are exact. Throws for k = 0.
std::size_t row_index(std::size_t k);

/// Bone [0,1]x{0} plus rows M_k = {(t, (1/k) * scaled_wave(n_k, t))} for
/// k = 1..rows. Labels "bone" and "M_k".
struct SharkTeethSpace {
    std::size_t rows = 0;
    std::size_t samples_per_row = 0;
    PointCloud cloud;
};

SharkTeethSpace build_shark_teeth(std::size_t rows, std::size_t samples_per_row);

/// Tent map on [0,1]: x on [0, 1/2], 1 - x on [1/2, 1]. Throws outside [0,1].
double tent(double x);

/// f_i(x) = (i + 2 * tent(x)) / 3 for i in {0, 1, 2}; Lipschitz constant 2/3,
/// image [i/3, (i+1)/3]. Throws outside [0,1].
double tent_contraction(std::size_t i, double x);

/// A Peano continuum P with a distinguished free arc L: the closure of P \ L
/// meets L in at most two points. The arc carries its normalized arc-length
/// parametrization rho; each side P_j carries a based loop parametrization
/// rho_j with rho_j(0) = rho_j(1) = the attach point on L. Sides may be
/// absent (one-sided or bare-arc configurations).
struct FreeArcSpace {
    PointCloud cloud;
    Polyline arc;                    // L with vertices ordered along rho
    std::vector<Polyline> sides;     // loop polylines, each starting and ending
                                     // at its attach point (rho(0) resp. rho(1))
    std::vector<double> arc_cumlen;  // prefix arc lengths over arc.vertices
    std::vector<std::vector<double>> side_cumlen;
};

/// Samples arc and sides at `sample_step` spacing, validates the free-arc
/// condition at the sampled resolution, and closes open side polylines into
/// out-and-back loops. Sides must start within sample_step of the matching
/// arc endpoint. Throws "L is not a free arc at this resolution" on failure.
FreeArcSpace make_free_arc_space(const Polyline& arc,
                                 const std::vector<Polyline>& sides,
                                 double sample_step);

/// The free-arc self-map family: F_i = rho . f_i . rho^{-1} on L (constant
/// rho(i/3) off L) and, per nonempty side j, G_j = rho_j . rho^{-1} on L
/// (constant rho_j(0) off L). rho^{-1} is nearest-sample inversion.
struct FractalSystem {
    IfsSystem system;
    int instance_slot = -1;
    std::size_t f_count = 0;  // leading f_count maps are the F_i
};

FractalSystem build_free_arc_system(const FreeArcSpace& space);

/// Shipped Prop-style demo instance: a straight free arc through the bone
/// [0,1]x{0} with short out-and-back flank segments on both sides. Sides are
/// kept short so that every length-m composition, including those ending in a
/// side retraction, shrinks below (2/3)^m.
FreeArcSpace default_prop1_space(double sample_step = 1e-3);

/// Free arc attached to the shark teeth at (1,0): L = [(1,0),(2,0)], side 1 a
/// serpentine tour of the whole space M, side 2 a short tail segment.
FreeArcSpace attached_shark_space(const SharkTeethSpace& shark);

/// Internal evaluation hooks used by the map registry.
Point2 free_arc_apply_F(int slot, std::size_t i, const Point2& p);
Point2 free_arc_apply_G(int slot, std::size_t j, const Point2& p);

}  // namespace ifslab
