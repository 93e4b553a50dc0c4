#include "visibility.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "error.hpp"
#include "json_util.hpp"

namespace longview {

void CameraModel::validate() const {
    if (!(h_fov_deg > 0 && h_fov_deg < 180) || !(v_fov_deg > 0 && v_fov_deg < 180))
        throw Error(ErrorCode::validation, "camera: fov must be in (0, 180) degrees");
    if (ray_cols < 2 || ray_rows < 2)
        throw Error(ErrorCode::validation, "camera: ray grid must be at least 2x2");
    if (min_range < 0 || min_range >= max_range)
        throw Error(ErrorCode::validation, "camera: require 0 <= min_range < max_range");
}

CameraModel camera_from_json_file(const std::string& path) {
    const Json j = load_json_file(path);
    CameraModel cam;
    cam.h_fov_deg = j.value("h_fov_deg", cam.h_fov_deg);
    cam.v_fov_deg = j.value("v_fov_deg", cam.v_fov_deg);
    cam.ray_cols = j.value("ray_cols", cam.ray_cols);
    cam.ray_rows = j.value("ray_rows", cam.ray_rows);
    cam.min_range = j.value("min_range", cam.min_range);
    cam.max_range = j.value("max_range", cam.max_range);
    cam.validate();
    return cam;
}

std::optional<RayHit> cast_ray(const VoxelGrid& grid, const Vec3& origin, const Vec3& direction,
                               double max_range) {
    Eigen::Vector3i v = grid.voxel_of(origin);
    if (!grid.in_bounds(v)) return std::nullopt;
    if (grid.is_occupied(v))
        return RayHit{v, grid.linear(v), grid.label(v), 0.0};

    const double h = grid.voxel_size();
    Eigen::Vector3i step;
    Vec3 t_max, t_delta;
    for (int i = 0; i < 3; ++i) {
        if (direction[i] > 0) {
            step[i] = 1;
            double boundary = grid.origin()[i] + (v[i] + 1) * h;
            t_max[i] = (boundary - origin[i]) / direction[i];
            t_delta[i] = h / direction[i];
        } else if (direction[i] < 0) {
            step[i] = -1;
            double boundary = grid.origin()[i] + v[i] * h;
            t_max[i] = (boundary - origin[i]) / direction[i];
            t_delta[i] = -h / direction[i];
        } else {
            step[i] = 0;
            t_max[i] = std::numeric_limits<double>::infinity();
            t_delta[i] = std::numeric_limits<double>::infinity();
        }
    }

    while (true) {
        int axis = 0;
        if (t_max[1] < t_max[axis]) axis = 1;
        if (t_max[2] < t_max[axis]) axis = 2;
        const double t = t_max[axis];
        if (t > max_range) return std::nullopt;
        v[axis] += step[axis];
        if (v[axis] < 0 || v[axis] >= grid.dims()[axis]) return std::nullopt;
        if (grid.is_occupied(v))
            return RayHit{v, grid.linear(v), grid.label(v), t};
        t_max[axis] += t_delta[axis];
    }
}

namespace {

// Conservative test: can any of-interest surface possibly fall inside the
// view cone and range? Used to skip ray casting for away-facing poses.
bool frustum_may_see_something(const VoxelGrid& grid, const Pose6& pose, const CameraModel& cam) {
    const double tan_h = std::tan(0.5 * deg_to_rad(cam.h_fov_deg));
    const double tan_v = std::tan(0.5 * deg_to_rad(cam.v_fov_deg));
    const double cone_half = std::atan(std::sqrt(tan_h * tan_h + tan_v * tan_v));
    const Vec3 axis = pose.optical_axis();
    for (int i = 0; i < grid.object_count(); ++i) {
        if (!grid.object_of_interest(i)) continue;
        const auto& s = grid.object_sphere(i);
        if (s.radius < 0) continue;
        const Vec3 d = s.center - pose.position;
        const double dist = d.norm();
        if (dist - s.radius > cam.max_range) continue;
        if (dist <= s.radius) return true;
        const double beta = std::acos(std::clamp(axis.dot(d) / dist, -1.0, 1.0));
        if (beta - cone_half <= std::asin(std::clamp(s.radius / dist, 0.0, 1.0)) + 1e-9)
            return true;
    }
    return false;
}

std::vector<std::uint32_t> visible_sampled(const VoxelGrid& grid, const Pose6& pose,
                                           const CameraModel& cam) {
    std::vector<std::uint32_t> ids;
    if (!frustum_may_see_something(grid, pose, cam)) return ids;

    const double tan_h = std::tan(0.5 * deg_to_rad(cam.h_fov_deg));
    const double tan_v = std::tan(0.5 * deg_to_rad(cam.v_fov_deg));
    const Eigen::Matrix3d rot = pose.orientation.toRotationMatrix();

    for (int r = 0; r < cam.ray_rows; ++r) {
        const double sv = (2.0 * (r + 0.5) / cam.ray_rows - 1.0) * tan_v;
        for (int c = 0; c < cam.ray_cols; ++c) {
            const double su = (2.0 * (c + 0.5) / cam.ray_cols - 1.0) * tan_h;
            const Vec3 dir = (rot * Vec3(1.0, -su, -sv)).normalized();
            auto hit = cast_ray(grid, pose.position, dir, cam.max_range);
            if (!hit || hit->distance < cam.min_range) continue;
            const std::int32_t id = grid.surface_id(hit->linear);
            if (id >= 0) ids.push_back(static_cast<std::uint32_t>(id));
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::vector<std::uint32_t> visible_exact(const VoxelGrid& grid, const Pose6& pose,
                                         const CameraModel& cam) {
    std::vector<std::uint32_t> ids;
    const double tan_h = std::tan(0.5 * deg_to_rad(cam.h_fov_deg));
    const double tan_v = std::tan(0.5 * deg_to_rad(cam.v_fov_deg));
    const Eigen::Matrix3d rot_t = pose.orientation.toRotationMatrix().transpose();

    for (std::int32_t id = 0; id < grid.surface_count(); ++id) {
        const auto& sv = grid.surface_voxel(id);
        const Vec3 c = grid.center(grid.unlinear(sv.cell));
        const Vec3 d = c - pose.position;
        const double dist = d.norm();
        if (dist < cam.min_range || dist > cam.max_range || dist < 1e-12) continue;
        const Vec3 q = rot_t * d;
        if (q.x() <= 0) continue;
        if (std::abs(q.y()) > tan_h * q.x() || std::abs(q.z()) > tan_v * q.x()) continue;
        auto hit = cast_ray(grid, pose.position, d / dist, dist + grid.voxel_size());
        if (hit && hit->linear == sv.cell) ids.push_back(static_cast<std::uint32_t>(id));
    }
    return ids; // already sorted: ids ascend with the loop
}

} // namespace

std::vector<std::uint32_t> visible_surface_voxels(const VoxelGrid& grid, const Pose6& pose,
                                                  const CameraModel& cam) {
    if (!grid.position_in_bounds(pose.position)) return {};
    return cam.exact ? visible_exact(grid, pose, cam) : visible_sampled(grid, pose, cam);
}

ObservedSet::ObservedSet(std::int32_t surface_count) {
    bits_.assign((static_cast<std::size_t>(surface_count) + 63) / 64, 0);
    first_view_.assign(static_cast<std::size_t>(surface_count), -1);
}

std::int64_t ObservedSet::count_new(std::span<const std::uint32_t> ids) const {
    std::int64_t n = 0;
    for (auto id : ids)
        if (!contains(id)) ++n;
    return n;
}

void ObservedSet::commit(int view_index, std::span<const std::uint32_t> ids) {
    for (auto id : ids) {
        if (contains(id)) continue;
        bits_[id >> 6] |= 1ULL << (id & 63);
        first_view_[id] = view_index;
        ++total_;
    }
}

std::int64_t ObservedSet::count_for_object(int object_index, const VoxelGrid& grid) const {
    std::int64_t n = 0;
    for (std::uint32_t id = 0; id < static_cast<std::uint32_t>(capacity()); ++id)
        if (contains(id) && grid.surface_voxel(static_cast<std::int32_t>(id)).object_index ==
                                object_index)
            ++n;
    return n;
}

void ObservedSet::write_csv(const std::string& path, const VoxelGrid& grid) const {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write file: " + path);
    out << "voxel_index,object_id,first_view\n";
    for (std::uint32_t id = 0; id < static_cast<std::uint32_t>(capacity()); ++id) {
        if (!contains(id)) continue;
        const auto& sv = grid.surface_voxel(static_cast<std::int32_t>(id));
        out << sv.cell << "," << grid.object_id(sv.object_index) << "," << first_view_[id] << "\n";
    }
}

std::int64_t marginal_ig(const Pose6& candidate, const ObservedSet& observed,
                         const VoxelGrid& grid, const CameraModel& cam) {
    const auto ids = visible_surface_voxels(grid, candidate, cam);
    return observed.count_new(ids);
}

} // namespace longview
