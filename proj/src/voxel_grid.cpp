#include "voxel_grid.hpp"

#include <cmath>

#include "error.hpp"
#include "rng.hpp"

namespace longview {

namespace {
constexpr double kNudge = 1e-6; // meters, pulls boundary samples into the solid
}

VoxelGrid::VoxelGrid(const SceneDescription& scene, double voxel_size, std::int64_t cell_budget) {
    if (voxel_size <= 0) throw Error(ErrorCode::invalid_argument, "voxel_size must be positive");
    scene.validate();

    origin_ = scene.world_bounds.min;
    voxel_size_ = voxel_size;
    const Vec3 extent = scene.world_bounds.extent();
    for (int i = 0; i < 3; ++i)
        dims_[i] = std::max(1, static_cast<int>(std::ceil(extent[i] / voxel_size - 1e-9)));

    const std::int64_t cells =
        static_cast<std::int64_t>(dims_.x()) * dims_.y() * static_cast<std::int64_t>(dims_.z());
    if (cells > cell_budget)
        throw Error(ErrorCode::capacity, "grid of " + std::to_string(cells) +
                                             " cells exceeds the budget of " +
                                             std::to_string(cell_budget));

    labels_.assign(static_cast<std::size_t>(cells), kFree);
    surface_ids_.assign(static_cast<std::size_t>(cells), -1);

    for (const auto& obj : scene.objects) {
        object_ids_.push_back(obj.id);
        of_interest_.push_back(obj.of_interest);
    }

    // Mark of-interest objects first so obstacles never overwrite them.
    std::vector<int> order;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < static_cast<int>(scene.objects.size()); ++i)
            if (scene.objects[static_cast<std::size_t>(i)].of_interest == (pass == 0))
                order.push_back(i);

    auto mark = [&](const Eigen::Vector3i& v, int object_index) {
        if (!in_bounds(v)) return;
        auto& cell = labels_[static_cast<std::size_t>(linear(v))];
        if (cell == kFree) cell = static_cast<std::int16_t>(object_index);
    };

    for (int oi : order) {
        const SceneObject& obj = scene.objects[static_cast<std::size_t>(oi)];
        const Aabb wb = obj.world_aabb();
        Eigen::Vector3i lo = voxel_of(wb.min - Vec3::Constant(voxel_size_));
        Eigen::Vector3i hi = voxel_of(wb.max + Vec3::Constant(voxel_size_));
        lo = lo.cwiseMax(Eigen::Vector3i::Zero());
        hi = hi.cwiseMin(dims_ - Eigen::Vector3i::Ones());

        if (shape_is_solid(obj.shape)) {
            const Isometry inv = obj.pose.inverse();
            for (int z = lo.z(); z <= hi.z(); ++z)
                for (int y = lo.y(); y <= hi.y(); ++y)
                    for (int x = lo.x(); x <= hi.x(); ++x) {
                        Eigen::Vector3i v(x, y, z);
                        if (shape_contains_local(obj.shape, inv * center(v))) mark(v, oi);
                    }
            // Healing pass: the voxel just inside every surface sample must be
            // occupied, or thin parts could be tunneled by rays.
            Rng rng(derive_seed(0x5eedULL, "voxelize_heal", static_cast<std::uint64_t>(oi)));
            const double heal_density = 4.0 / (voxel_size_ * voxel_size_);
            for (const auto& s : sample_shape_surface(obj.shape, heal_density, rng)) {
                Vec3 p = obj.pose * (s.point + kNudge * s.inward);
                mark(voxel_of(p), oi);
            }
        } else {
            const TriMesh& mesh = std::get<MeshShape>(obj.shape).mesh;
            const Vec3 half = Vec3::Constant(0.5 * voxel_size_);
            for (const auto& t : mesh.triangles) {
                Vec3 a = obj.pose * mesh.vertices[t[0]];
                Vec3 b = obj.pose * mesh.vertices[t[1]];
                Vec3 c = obj.pose * mesh.vertices[t[2]];
                Aabb tb;
                tb.min = a.cwiseMin(b).cwiseMin(c);
                tb.max = a.cwiseMax(b).cwiseMax(c);
                Eigen::Vector3i tlo = voxel_of(tb.min).cwiseMax(Eigen::Vector3i::Zero());
                Eigen::Vector3i thi =
                    voxel_of(tb.max).cwiseMin(dims_ - Eigen::Vector3i::Ones());
                for (int z = tlo.z(); z <= thi.z(); ++z)
                    for (int y = tlo.y(); y <= thi.y(); ++y)
                        for (int x = tlo.x(); x <= thi.x(); ++x) {
                            Eigen::Vector3i v(x, y, z);
                            if (triangle_box_overlap(center(v), half, a, b, c)) mark(v, oi);
                        }
            }
        }
    }

    // Surface extraction: occupied voxel with at least one free 6-neighbor
    // inside the grid. Of-interest surface voxels get dense ids in cell order.
    surface_sets_.resize(scene.objects.size());
    spheres_.resize(scene.objects.size());
    std::vector<Aabb> sphere_boxes(scene.objects.size());
    std::vector<bool> sphere_seen(scene.objects.size(), false);

    const Eigen::Vector3i neighbors[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                          {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    for (int z = 0; z < dims_.z(); ++z)
        for (int y = 0; y < dims_.y(); ++y)
            for (int x = 0; x < dims_.x(); ++x) {
                const Eigen::Vector3i v(x, y, z);
                const std::int64_t cell = linear(v);
                const std::int16_t lab = labels_[static_cast<std::size_t>(cell)];
                if (lab == kFree) continue;
                bool surface = false;
                for (const auto& n : neighbors) {
                    Eigen::Vector3i w = v + n;
                    if (in_bounds(w) && is_free(w)) {
                        surface = true;
                        break;
                    }
                }
                if (!surface) continue;
                const auto obj = static_cast<std::size_t>(lab);
                surface_sets_[obj].push_back(cell);
                if (of_interest_[obj]) {
                    surface_ids_[static_cast<std::size_t>(cell)] =
                        static_cast<std::int32_t>(surface_voxels_.size());
                    surface_voxels_.push_back({static_cast<int>(lab), cell});
                }
                Vec3 c = center(v);
                if (!sphere_seen[obj]) {
                    sphere_boxes[obj].min = sphere_boxes[obj].max = c;
                    sphere_seen[obj] = true;
                } else {
                    sphere_boxes[obj].expand(c);
                }
            }

    for (std::size_t i = 0; i < spheres_.size(); ++i) {
        if (!sphere_seen[i]) continue;
        spheres_[i].center = sphere_boxes[i].center();
        spheres_[i].radius =
            0.5 * sphere_boxes[i].extent().norm() + 0.87 * voxel_size_; // half voxel diagonal
    }
}

std::int64_t VoxelGrid::surface_set_total(bool of_interest_only) const {
    std::int64_t n = 0;
    for (std::size_t i = 0; i < surface_sets_.size(); ++i)
        if (!of_interest_only || of_interest_[i])
            n += static_cast<std::int64_t>(surface_sets_[i].size());
    return n;
}

bool VoxelGrid::sphere_is_free(const Vec3& c, double radius) const {
    const Eigen::Vector3i lo = voxel_of(c - Vec3::Constant(radius));
    const Eigen::Vector3i hi = voxel_of(c + Vec3::Constant(radius));
    const double r2 = radius * radius;
    for (int z = lo.z(); z <= hi.z(); ++z)
        for (int y = lo.y(); y <= hi.y(); ++y)
            for (int x = lo.x(); x <= hi.x(); ++x) {
                const Eigen::Vector3i v(x, y, z);
                // Closest point of the voxel cube to the sphere center.
                Vec3 vmin = origin_ + voxel_size_ * v.cast<double>();
                Vec3 vmax = vmin + Vec3::Constant(voxel_size_);
                Vec3 q = c.cwiseMax(vmin).cwiseMin(vmax);
                if ((q - c).squaredNorm() > r2) continue;
                if (!in_bounds(v) || is_occupied(v)) return false;
            }
    return true;
}

} // namespace longview
