#pragma once

#include <array>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace longview {

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> triangles;

    Aabb bounds() const;
    double area() const;
};

// Minimal ASCII OBJ reader: `v` and `f` records, polygons fan-triangulated.
TriMesh load_obj(const std::string& path);

// Conservative separating-axis overlap test between a triangle and an
// axis-aligned box (Akenine-Moller). Touching counts as overlap.
bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half, const Vec3& a,
                          const Vec3& b, const Vec3& c);

} // namespace longview
