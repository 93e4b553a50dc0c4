#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "scene.hpp"

namespace longview {

// Dense labeled occupancy grid over the scene's world bounds. Immutable
// after construction; safe for concurrent reads.
class VoxelGrid {
public:
    static constexpr std::int16_t kFree = -1;

    struct SurfaceVoxel {
        int object_index;
        std::int64_t cell;
    };

    // Voxelizes a validated scene. Solids mark voxels whose center lies
    // inside; a healing pass guarantees that the interior-side voxel of every
    // surface sample is occupied, so thin geometry cannot be tunneled
    // through. Meshes mark every voxel a triangle touches.
    VoxelGrid(const SceneDescription& scene, double voxel_size,
              std::int64_t cell_budget = 1'000'000'000);

    const Vec3& origin() const { return origin_; }
    double voxel_size() const { return voxel_size_; }
    const Eigen::Vector3i& dims() const { return dims_; }
    std::int64_t cell_count() const { return static_cast<std::int64_t>(labels_.size()); }

    bool in_bounds(const Eigen::Vector3i& v) const {
        return (v.array() >= 0).all() && (v.array() < dims_.array()).all();
    }
    bool position_in_bounds(const Vec3& p) const {
        return (p.array() >= origin_.array()).all() &&
               (p.array() <= (origin_ + voxel_size_ * dims_.cast<double>()).array()).all();
    }

    Eigen::Vector3i voxel_of(const Vec3& p) const {
        return ((p - origin_) / voxel_size_).array().floor().cast<int>();
    }
    std::int64_t linear(const Eigen::Vector3i& v) const {
        return (static_cast<std::int64_t>(v.z()) * dims_.y() + v.y()) * dims_.x() + v.x();
    }
    Eigen::Vector3i unlinear(std::int64_t i) const {
        int x = static_cast<int>(i % dims_.x());
        int y = static_cast<int>((i / dims_.x()) % dims_.y());
        int z = static_cast<int>(i / (static_cast<std::int64_t>(dims_.x()) * dims_.y()));
        return {x, y, z};
    }
    Vec3 center(const Eigen::Vector3i& v) const {
        return origin_ + voxel_size_ * (v.cast<double>() + Vec3::Constant(0.5));
    }

    std::int16_t label(std::int64_t cell) const { return labels_[static_cast<std::size_t>(cell)]; }
    std::int16_t label(const Eigen::Vector3i& v) const { return label(linear(v)); }
    bool is_free(const Eigen::Vector3i& v) const { return label(v) == kFree; }
    bool is_occupied(const Eigen::Vector3i& v) const { return label(v) != kFree; }

    // Dense ids over of-interest surface voxels; -1 elsewhere.
    std::int32_t surface_id(std::int64_t cell) const {
        return surface_ids_[static_cast<std::size_t>(cell)];
    }
    std::int32_t surface_count() const { return static_cast<std::int32_t>(surface_voxels_.size()); }
    const SurfaceVoxel& surface_voxel(std::int32_t id) const {
        return surface_voxels_[static_cast<std::size_t>(id)];
    }

    // Boundary voxels (occupied, with a free 6-neighbor) per object index.
    const std::vector<std::int64_t>& surface_set(int object_index) const {
        return surface_sets_[static_cast<std::size_t>(object_index)];
    }
    std::int64_t surface_set_total(bool of_interest_only) const;

    int object_count() const { return static_cast<int>(object_ids_.size()); }
    const std::string& object_id(int index) const {
        return object_ids_[static_cast<std::size_t>(index)];
    }
    bool object_of_interest(int index) const {
        return of_interest_[static_cast<std::size_t>(index)];
    }

    // Bounding sphere over an object's surface voxels, used by visibility
    // pruning. Objects without surface voxels report radius < 0.
    struct BoundingSphere {
        Vec3 center{Vec3::Zero()};
        double radius{-1.0};
    };
    const BoundingSphere& object_sphere(int index) const {
        return spheres_[static_cast<std::size_t>(index)];
    }

    // True if every voxel overlapping the sphere is inside the grid and free.
    bool sphere_is_free(const Vec3& center, double radius) const;

private:
    Vec3 origin_;
    double voxel_size_;
    Eigen::Vector3i dims_;
    std::vector<std::int16_t> labels_;
    std::vector<std::int32_t> surface_ids_;
    std::vector<SurfaceVoxel> surface_voxels_;
    std::vector<std::vector<std::int64_t>> surface_sets_;
    std::vector<std::string> object_ids_;
    std::vector<bool> of_interest_;
    std::vector<BoundingSphere> spheres_;
};

} // namespace longview
