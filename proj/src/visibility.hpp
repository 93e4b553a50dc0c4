#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "voxel_grid.hpp"

namespace longview {

// Pinhole frustum, optical axis = pose +x. In sampled mode visibility casts
// a cols x rows ray grid (the downsampled density); in exact mode it casts
// one ray at every candidate surface voxel center, which is what the
// brute-force oracle reproduces.
struct CameraModel {
    double h_fov_deg{70.0};
    double v_fov_deg{55.0};
    int ray_cols{64};
    int ray_rows{48};
    double min_range{0.1};
    double max_range{5.0};
    bool exact{false};

    void validate() const;
};

CameraModel camera_from_json_file(const std::string& path);

struct RayHit {
    Eigen::Vector3i cell;
    std::int64_t linear;
    int object_index;
    double distance; // ray parameter at which the voxel is entered
};

// First occupied voxel along the ray (Amanatides-Woo traversal). An origin
// inside an occupied voxel reports that voxel at distance 0; an origin
// outside the grid reports a miss.
std::optional<RayHit> cast_ray(const VoxelGrid& grid, const Vec3& origin, const Vec3& direction,
                               double max_range);

// Of-interest surface voxels observed from the pose, as sorted unique
// surface ids. Out-of-bounds camera positions yield an empty set.
std::vector<std::uint32_t> visible_surface_voxels(const VoxelGrid& grid, const Pose6& pose,
                                                  const CameraModel& cam);

// Accumulated observation state. Mutation is single-writer; reads are safe
// to share across scoring threads.
class ObservedSet {
public:
    explicit ObservedSet(std::int32_t surface_count);

    bool contains(std::uint32_t id) const {
        return (bits_[id >> 6] >> (id & 63)) & 1ULL;
    }
    std::int64_t count() const { return total_; }
    std::int64_t count_for_object(int object_index, const VoxelGrid& grid) const;

    // Number of ids not yet observed; the discrete derivative.
    std::int64_t count_new(std::span<const std::uint32_t> ids) const;

    // Records ids as observed by `view_index` (first observer wins).
    void commit(int view_index, std::span<const std::uint32_t> ids);

    std::int32_t first_observer(std::uint32_t id) const {
        return first_view_[id];
    }
    std::int32_t capacity() const { return static_cast<std::int32_t>(first_view_.size()); }

    // CSV dump: voxel linear index, object_id, first observing view index.
    void write_csv(const std::string& path, const VoxelGrid& grid) const;

private:
    std::vector<std::uint64_t> bits_;
    std::vector<std::int32_t> first_view_;
    std::int64_t total_{0};
};

// |visible_surface_voxels(candidate) \ observed|; pure in both arguments.
std::int64_t marginal_ig(const Pose6& candidate, const ObservedSet& observed,
                         const VoxelGrid& grid, const CameraModel& cam);

} // namespace longview
