#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"
#include "shapes.hpp"

namespace longview {

struct SceneObject {
    std::string id;
    ShapeSpec shape;
    Isometry pose{Isometry::Identity()};
    bool of_interest{true};

    Aabb world_aabb() const {
        Aabb local = shape_local_aabb(shape);
        return transformed_aabb(pose, local.min, local.max);
    }
};

struct SceneDescription {
    Aabb world_bounds;
    double voxel_size{0.05};
    std::vector<SceneObject> objects;

    std::vector<int> of_interest_indices() const;
    int object_index(const std::string& id) const; // -1 if unknown

    // Checks id uniqueness, containment in world bounds, the presence of at
    // least one object of interest, and that no two of-interest objects
    // occupy a common voxel. Throws Error(validation) naming the invariant.
    void validate() const;
};

SceneDescription load_scene(const std::string& path);
void save_scene(const SceneDescription& scene, const std::string& path);

// Shared with the voxelizer: does this object mark the given voxel?
// Solids mark voxels whose center lies inside; meshes mark every voxel a
// triangle touches.
bool object_marks_voxel(const SceneObject& obj, const Vec3& voxel_center, double voxel_size);

} // namespace longview
