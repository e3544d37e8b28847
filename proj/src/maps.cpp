#include "ifslab/maps.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "ifslab/dendrite.hpp"
#include "ifslab/shark_teeth.hpp"
#include "ifslab/snake.hpp"

namespace ifslab {

namespace {

void expect_params(const std::vector<double>& params, std::size_t n,
                   const char* name) {
    if (params.size() != n) {
        throw std::invalid_argument(std::string("map '") + name + "' expects " +
                                    std::to_string(n) + " parameter(s)");
    }
}

std::unordered_map<std::string, NamedMapFn>& registry() {
    static std::unordered_map<std::string, NamedMapFn> table = [] {
        std::unordered_map<std::string, NamedMapFn> t;
        t["snake_f"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 0, "snake_f");
            return polar_to_cartesian(snake_weak_map(cartesian_to_polar(p)));
        };
        t["snake_cover"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 2, "snake_cover");
            const auto i = static_cast<std::size_t>(params[0]);
            const auto m = static_cast<std::size_t>(params[1]);
            if (i < 1 || i > m) {
                throw std::domain_error("snake_cover piece index out of range");
            }
            return snake_cover_eval(i, m, p);
        };
        t["dendrite_h"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 0, "dendrite_h");
            return dendrite_h(p);
        };
        t["dendrite_g1"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 0, "dendrite_g1");
            return dendrite_g1(p);
        };
        t["dendrite_g2"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 0, "dendrite_g2");
            return dendrite_g2(p);
        };
        t["tent_f"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 1, "tent_f");
            const auto i = static_cast<std::size_t>(params[0]);
            return Point2{tent_contraction(i, p.x), 2.0 * p.y / 3.0};
        };
        t["sharkteeth_F"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 2, "sharkteeth_F");
            return free_arc_apply_F(static_cast<int>(params[1]),
                                    static_cast<std::size_t>(params[0]), p);
        };
        t["sharkteeth_G"] = [](const std::vector<double>& params, const Point2& p) {
            expect_params(params, 2, "sharkteeth_G");
            return free_arc_apply_G(static_cast<int>(params[1]),
                                    static_cast<std::size_t>(params[0]), p);
        };
        return t;
    }();
    return table;
}

}  // namespace

MapSpec MapSpec::make_affine(const std::array<double, 4>& matrix,
                             const Point2& translation,
                             std::optional<double> claimed_lip) {
    for (double v : matrix) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("affine matrix must be finite");
        }
    }
    if (!point_is_finite(translation)) {
        throw std::invalid_argument("affine translation must be finite");
    }
    MapSpec spec;
    spec.kind = Kind::affine;
    spec.matrix = matrix;
    spec.translation = translation;
    spec.claimed_lip = claimed_lip;
    return spec;
}

MapSpec MapSpec::make_named(std::string name, std::vector<double> params,
                            std::optional<double> claimed_lip) {
    if (!map_is_registered(name)) {
        throw std::invalid_argument("unknown map identifier '" + name + "'");
    }
    MapSpec spec;
    spec.kind = Kind::named;
    spec.name = std::move(name);
    spec.params = std::move(params);
    spec.claimed_lip = claimed_lip;
    return spec;
}

Point2 apply_map(const MapSpec& map, const Point2& p) {
    if (!point_is_finite(p)) {
        throw std::domain_error("cannot apply map to non-finite point");
    }
    if (map.kind == MapSpec::Kind::affine) {
        return {map.matrix[0] * p.x + map.matrix[1] * p.y + map.translation.x,
                map.matrix[2] * p.x + map.matrix[3] * p.y + map.translation.y};
    }
    const auto& table = registry();
    auto it = table.find(map.name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown map identifier '" + map.name + "'");
    }
    return it->second(map.params, p);
}

bool map_is_registered(const std::string& name) {
    return registry().count(name) > 0;
}

void register_named_map(const std::string& name, NamedMapFn fn) {
    registry()[name] = std::move(fn);
}

}  // namespace ifslab
