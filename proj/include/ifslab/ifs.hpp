#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ifslab/geometry.hpp"
#include "ifslab/maps.hpp"

namespace ifslab {

/// Finite ordered family of self-maps. `strict` mode requires every map to
/// carry a claimed Lipschitz bound < 1; `weak` and `topological` modes make
/// no such promise and rely on sampled checks.
struct IfsSystem {
    enum class Mode { strict, weak, topological };

    std::vector<MapSpec> maps;
    Mode mode = Mode::weak;

    static IfsSystem create(std::vector<MapSpec> maps, Mode mode);
};

struct AttractorResult {
    PointCloud cloud;
    std::size_t iterations = 0;
    double residual = 0.0;  // Hausdorff step between the last two iterates
    bool converged = false;
};

/// Result of sampled Lipschitz / weak-contraction estimation over point pairs.
struct LipschitzReport {
    double sup_ratio = 0.0;
    std::pair<Point2, Point2> argmax_pair;
    std::size_t pairs_sampled = 0;
    // Pairs with d(f(x), f(y)) >= d(x, y); capped at 32 stored entries but
    // never empty when sup_ratio >= 1.
    std::vector<std::pair<Point2, Point2>> violations;
    std::size_t violation_count = 0;

    bool passes_weak_contraction() const { return violation_count == 0; }
};

/// Certificate that all length-m compositions shrink the space below a
/// threshold (the Lebesgue-number surrogate min(delta, epsilon)).
struct CoverCertificate {
    std::size_t word_length = 0;
    double max_diameter = 0.0;
    std::vector<std::size_t> argmax_word;  // outermost map first
    double threshold = 0.0;
    bool passes = false;

    // Extra diagnostics over words with a non-initial collapsing map.
    double collapsed_max_diameter = 0.0;
    std::size_t words_total = 0;
    std::size_t words_collapsed = 0;
};

/// Union of the images of A under every map, deduplicated at A.resolution/10.
/// Output labels record the applied map index.
PointCloud hutchinson(const IfsSystem& system, const PointCloud& seed);

/// Iterates the Hutchinson operator until the Hausdorff step between
/// successive iterates is <= tol or max_iter is reached. Exhausting max_iter
/// is reported via converged = false, not an error.
AttractorResult iterate_attractor(const IfsSystem& system, const PointCloud& seed,
                                  double tol, std::size_t max_iter);

/// Random orbit under uniformly chosen maps with the first burn_in points
/// discarded; deterministic for a fixed rng_seed.
PointCloud chaos_game(const IfsSystem& system, std::size_t n, std::size_t burn_in,
                      std::uint64_t rng_seed);

/// Samples pair_budget random distinct pairs plus all pairs among the 64
/// mutually farthest points (greedy farthest-point traversal) and reports the
/// sup of d(f(x), f(y)) / d(x, y).
LipschitzReport estimate_lipschitz(const MapSpec& map, const PointCloud& domain,
                                   std::size_t pair_budget, std::uint64_t rng_seed);

/// Same sampling; the check passes when every sampled pair satisfies the
/// strict inequality d(f(x), f(y)) < d(x, y). Sampled evidence, not proof.
LipschitzReport check_weak_contraction(const MapSpec& map, const PointCloud& domain,
                                       std::size_t pair_budget, std::uint64_t rng_seed);

/// Enumerates all |F|^m words of length m (depth-first, image clouds memoized
/// per prefix, subtrees pruned once an image collapses to a point) and reports
/// the maximal image diameter. Throws when |F|^m exceeds 10^7.
///
/// `collapsing` optionally names map indices whose appearance anywhere except
/// the outermost position puts the word into the collapsed class tracked by
/// collapsed_max_diameter / words_collapsed.
CoverCertificate certify_composition_diameter(
    const IfsSystem& system, const PointCloud& space, std::size_t word_length,
    double threshold, const std::vector<std::size_t>& collapsing = {});

}  // namespace ifslab
