#include "shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace longview {

const char* shape_type_name(const ShapeSpec& s) {
    if (std::holds_alternative<BoxShape>(s)) return "box";
    if (std::holds_alternative<CylinderShape>(s)) return "cylinder";
    if (std::holds_alternative<PipeAssemblyShape>(s)) return "pipe_assembly";
    return "mesh";
}

bool shape_is_solid(const ShapeSpec& s) { return !std::holds_alternative<MeshShape>(s); }

Aabb shape_local_aabb(const ShapeSpec& s) {
    Aabb b;
    if (const auto* box = std::get_if<BoxShape>(&s)) {
        b.min = -0.5 * box->size;
        b.max = 0.5 * box->size;
    } else if (const auto* cyl = std::get_if<CylinderShape>(&s)) {
        b.min = {-cyl->radius, -cyl->radius, -0.5 * cyl->height};
        b.max = {cyl->radius, cyl->radius, 0.5 * cyl->height};
    } else if (const auto* pa = std::get_if<PipeAssemblyShape>(&s)) {
        double half_row = 0.5 * (pa->count - 1) * pa->spacing + pa->pipe_radius;
        b.min = {-half_row, -pa->pipe_radius, -0.5 * pa->height};
        b.max = {half_row, pa->pipe_radius, 0.5 * pa->height};
    } else {
        b = std::get<MeshShape>(s).mesh.bounds();
    }
    return b;
}

namespace {

double pipe_center_x(const PipeAssemblyShape& pa, int i) {
    return (i - 0.5 * (pa.count - 1)) * pa.spacing;
}

bool cylinder_contains(double radius, double height, const Vec3& p) {
    return std::abs(p.z()) <= 0.5 * height && p.head<2>().squaredNorm() <= radius * radius;
}

// Patch builders. The interior anchor keeps the inward direction strictly
// inside the solid even for samples on patch edges.

SurfacePatch rect_patch(const Vec3& corner, const Vec3& u_edge, const Vec3& v_edge,
                        const Vec3& anchor) {
    SurfacePatch p;
    double lu = u_edge.norm(), lv = v_edge.norm();
    p.area = lu * lv;
    p.aspect = lv > 0 ? lu / lv : 1.0;
    p.at = [=](double u, double v) {
        Vec3 pt = corner + u * u_edge + v * v_edge;
        return SurfaceSample{pt, (anchor - pt).normalized()};
    };
    return p;
}

SurfacePatch cylinder_side_patch(double radius, double height, const Vec3& offset) {
    SurfacePatch p;
    p.area = 2.0 * M_PI * radius * height;
    p.aspect = height > 0 ? (2.0 * M_PI * radius) / height : 1.0;
    double zeps = 1e-6 * std::max(radius, height);
    p.at = [=](double u, double v) {
        double theta = 2.0 * M_PI * u;
        double z = (v - 0.5) * height;
        Vec3 pt = offset + Vec3(radius * std::cos(theta), radius * std::sin(theta), z);
        Vec3 anchor = offset + Vec3(0, 0, std::clamp(z, -0.5 * height + zeps, 0.5 * height - zeps));
        return SurfaceSample{pt, (anchor - pt).normalized()};
    };
    return p;
}

SurfacePatch disc_patch(double radius, double z, double interior_z, const Vec3& offset) {
    SurfacePatch p;
    p.area = M_PI * radius * radius;
    p.aspect = 2.0 * M_PI; // angular extent dominates the radial one
    p.at = [=](double u, double v) {
        double theta = 2.0 * M_PI * u;
        double r = radius * std::sqrt(v); // equal-area in v
        Vec3 pt = offset + Vec3(r * std::cos(theta), r * std::sin(theta), z);
        Vec3 anchor = offset + Vec3(0, 0, interior_z);
        return SurfaceSample{pt, (anchor - pt).normalized()};
    };
    return p;
}

SurfacePatch triangle_patch(const Vec3& a, const Vec3& b, const Vec3& c) {
    SurfacePatch p;
    Vec3 n = (b - a).cross(c - a);
    p.area = 0.5 * n.norm();
    p.aspect = 1.0;
    Vec3 inward = p.area > 0 ? Vec3(-n.normalized()) : Vec3::UnitZ();
    p.at = [=](double u, double v) {
        double su = std::sqrt(u);
        Vec3 pt = (1.0 - su) * a + su * (1.0 - v) * b + su * v * c;
        return SurfaceSample{pt, inward};
    };
    return p;
}

void append_cylinder_patches(std::vector<SurfacePatch>& out, double radius, double height,
                             const Vec3& offset) {
    double zeps = 1e-6 * std::max(radius, height);
    out.push_back(cylinder_side_patch(radius, height, offset));
    out.push_back(disc_patch(radius, 0.5 * height, 0.5 * height - zeps, offset));
    out.push_back(disc_patch(radius, -0.5 * height, -0.5 * height + zeps, offset));
}

} // namespace

double shape_area(const ShapeSpec& s) {
    if (const auto* box = std::get_if<BoxShape>(&s)) {
        const Vec3& e = box->size;
        return 2.0 * (e.x() * e.y() + e.y() * e.z() + e.z() * e.x());
    }
    if (const auto* cyl = std::get_if<CylinderShape>(&s))
        return 2.0 * M_PI * cyl->radius * cyl->height + 2.0 * M_PI * cyl->radius * cyl->radius;
    if (const auto* pa = std::get_if<PipeAssemblyShape>(&s))
        return pa->count * (2.0 * M_PI * pa->pipe_radius * pa->height +
                            2.0 * M_PI * pa->pipe_radius * pa->pipe_radius);
    return std::get<MeshShape>(s).mesh.area();
}

bool shape_contains_local(const ShapeSpec& s, const Vec3& p) {
    if (const auto* box = std::get_if<BoxShape>(&s)) {
        return (p.array().abs() <= (0.5 * box->size).array()).all();
    }
    if (const auto* cyl = std::get_if<CylinderShape>(&s))
        return cylinder_contains(cyl->radius, cyl->height, p);
    if (const auto* pa = std::get_if<PipeAssemblyShape>(&s)) {
        for (int i = 0; i < pa->count; ++i) {
            Vec3 q = p - Vec3(pipe_center_x(*pa, i), 0, 0);
            if (cylinder_contains(pa->pipe_radius, pa->height, q)) return true;
        }
        return false;
    }
    return false; // meshes are shells
}

std::vector<SurfacePatch> shape_patches(const ShapeSpec& s) {
    std::vector<SurfacePatch> out;
    if (const auto* box = std::get_if<BoxShape>(&s)) {
        const Vec3 h = 0.5 * box->size;
        const Vec3 anchor = Vec3::Zero();
        // +x, -x, +y, -y, +z, -z faces.
        out.push_back(rect_patch({h.x(), -h.y(), -h.z()}, {0, 2 * h.y(), 0}, {0, 0, 2 * h.z()}, anchor));
        out.push_back(rect_patch({-h.x(), -h.y(), -h.z()}, {0, 2 * h.y(), 0}, {0, 0, 2 * h.z()}, anchor));
        out.push_back(rect_patch({-h.x(), h.y(), -h.z()}, {2 * h.x(), 0, 0}, {0, 0, 2 * h.z()}, anchor));
        out.push_back(rect_patch({-h.x(), -h.y(), -h.z()}, {2 * h.x(), 0, 0}, {0, 0, 2 * h.z()}, anchor));
        out.push_back(rect_patch({-h.x(), -h.y(), h.z()}, {2 * h.x(), 0, 0}, {0, 2 * h.y(), 0}, anchor));
        out.push_back(rect_patch({-h.x(), -h.y(), -h.z()}, {2 * h.x(), 0, 0}, {0, 2 * h.y(), 0}, anchor));
    } else if (const auto* cyl = std::get_if<CylinderShape>(&s)) {
        append_cylinder_patches(out, cyl->radius, cyl->height, Vec3::Zero());
    } else if (const auto* pa = std::get_if<PipeAssemblyShape>(&s)) {
        for (int i = 0; i < pa->count; ++i)
            append_cylinder_patches(out, pa->pipe_radius, pa->height,
                                    Vec3(pipe_center_x(*pa, i), 0, 0));
    } else {
        const TriMesh& m = std::get<MeshShape>(s).mesh;
        out.reserve(m.triangles.size());
        for (const auto& t : m.triangles)
            out.push_back(triangle_patch(m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]));
    }
    return out;
}

std::vector<SurfaceSample> sample_shape_surface(const ShapeSpec& s, double density, Rng& rng) {
    std::vector<SurfacePatch> patches = shape_patches(s);
    double total_area = 0.0;
    for (const auto& p : patches) total_area += p.area;
    const long long n_total = std::llround(total_area * density);

    // Largest-remainder allocation so the total count is exact.
    std::vector<long long> counts(patches.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    long long assigned = 0;
    for (std::size_t i = 0; i < patches.size(); ++i) {
        double share = total_area > 0 ? n_total * (patches[i].area / total_area) : 0.0;
        counts[i] = static_cast<long long>(std::floor(share));
        assigned += counts[i];
        remainders.push_back({share - std::floor(share), i});
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (long long k = 0; k < n_total - assigned && k < static_cast<long long>(remainders.size());
         ++k)
        ++counts[remainders[static_cast<std::size_t>(k)].second];

    std::vector<SurfaceSample> samples;
    samples.reserve(static_cast<std::size_t>(n_total));
    for (std::size_t i = 0; i < patches.size(); ++i) {
        const long long n = counts[i];
        if (n <= 0) continue;
        const SurfacePatch& p = patches[i];
        auto gu = static_cast<long long>(
            std::max(1.0, std::round(std::sqrt(static_cast<double>(n) * p.aspect))));
        long long gv = (n + gu - 1) / gu;
        long long emitted = 0;
        for (long long j = 0; j < gv && emitted < n; ++j)
            for (long long k = 0; k < gu && emitted < n; ++k) {
                double u = (static_cast<double>(k) + rng.uniform()) / static_cast<double>(gu);
                double v = (static_cast<double>(j) + rng.uniform()) / static_cast<double>(gv);
                samples.push_back(p.at(u, v));
                ++emitted;
            }
    }
    return samples;
}

} // namespace longview
