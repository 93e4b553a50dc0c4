#pragma once

#include <vector>

#include "geometry.hpp"
#include "scene.hpp"

namespace longview {

// Dense labeled point sampling of the of-interest object surfaces; the
// denominator of the coverage metric.
struct GroundTruthSurface {
    struct Point {
        Vec3 position;
        Vec3 inward; // unit direction strictly into the solid (shell: -normal)
        int object_index;
    };

    std::vector<Point> points;
    std::vector<std::int64_t> per_object_count; // indexed by scene object index
};

// Deterministic stratified sampling at `density` points per square meter.
// Each object's count is exactly llround(surface_area * density).
GroundTruthSurface sample_ground_truth(const SceneDescription& scene, double density,
                                       std::uint64_t seed);

} // namespace longview
