#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "geometry.hpp"
#include "mesh.hpp"
#include "rng.hpp"

namespace longview {

struct BoxShape {
    Vec3 size{1.0, 1.0, 1.0}; // full extents, centered on the local origin
};

struct CylinderShape {
    double radius{0.5};
    double height{1.0}; // axis = local z, centered
};

// Row of vertical pipes along the local x axis, centered on the origin.
struct PipeAssemblyShape {
    double pipe_radius{0.1};
    double height{2.0};
    int count{3};
    double spacing{0.4};
};

struct MeshShape {
    std::string file;
    TriMesh mesh;
};

using ShapeSpec = std::variant<BoxShape, CylinderShape, PipeAssemblyShape, MeshShape>;

// One sample on the shape surface, local frame. `inward` is a unit direction
// that leads strictly into the solid (for meshes, opposite the face normal).
struct SurfaceSample {
    Vec3 point;
    Vec3 inward;
};

// Parametric surface piece used for stratified sampling. `at` maps
// (u, v) in [0,1)^2 onto the patch with uniform area density.
struct SurfacePatch {
    double area{0.0};
    double aspect{1.0}; // u extent / v extent, used to pick the grid shape
    std::function<SurfaceSample(double u, double v)> at;
};

const char* shape_type_name(const ShapeSpec& s);
bool shape_is_solid(const ShapeSpec& s); // meshes voxelize as shells
Aabb shape_local_aabb(const ShapeSpec& s);
double shape_area(const ShapeSpec& s);

// Solid containment in the local frame (closed boundary). Meshes return false.
bool shape_contains_local(const ShapeSpec& s, const Vec3& p);

std::vector<SurfacePatch> shape_patches(const ShapeSpec& s);

// Exactly llround(area * density) samples, allocated across patches by
// largest remainder and laid out on jittered per-patch grids.
std::vector<SurfaceSample> sample_shape_surface(const ShapeSpec& s, double density, Rng& rng);

} // namespace longview
