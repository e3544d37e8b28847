#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ifslab/geometry.hpp"

namespace ifslab {

/// A self-map of the plane: either an explicit affine map x -> M x + t, or a
/// named analytic map with numeric parameters resolved in the registry.
///
/// Registered names: snake_f, snake_cover(i,m), dendrite_h, dendrite_g1,
/// dendrite_g2, tent_f(i), sharkteeth_F(i,slot), sharkteeth_G(j,slot).
struct MapSpec {
    enum class Kind { affine, named };

    Kind kind = Kind::affine;
    std::array<double, 4> matrix = {1.0, 0.0, 0.0, 1.0};  // row-major 2x2
    Point2 translation;
    std::string name;
    std::vector<double> params;
    std::optional<double> claimed_lip;

    static MapSpec make_affine(const std::array<double, 4>& matrix,
                               const Point2& translation,
                               std::optional<double> claimed_lip = std::nullopt);
    static MapSpec make_named(std::string name, std::vector<double> params = {},
                              std::optional<double> claimed_lip = std::nullopt);
};

/// Evaluate the map at p. Throws std::invalid_argument for an unregistered
/// name and std::domain_error when p is outside the map's domain.
Point2 apply_map(const MapSpec& map, const Point2& p);

bool map_is_registered(const std::string& name);

/// Extension point used by modules that carry per-instance data (the free-arc
/// systems). Re-registering a name replaces the evaluator.
using NamedMapFn = std::function<Point2(const std::vector<double>& params, const Point2&)>;
void register_named_map(const std::string& name, NamedMapFn fn);

}  // namespace ifslab
