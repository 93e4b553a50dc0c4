#include "scene.hpp"

#include <cmath>
#include <filesystem>
#include <set>

#include "json_util.hpp"

namespace longview {

std::vector<int> SceneDescription::of_interest_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i].of_interest) out.push_back(static_cast<int>(i));
    return out;
}

int SceneDescription::object_index(const std::string& id) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
        if (objects[i].id == id) return static_cast<int>(i);
    return -1;
}

bool object_marks_voxel(const SceneObject& obj, const Vec3& voxel_center, double voxel_size) {
    if (shape_is_solid(obj.shape))
        return shape_contains_local(obj.shape, obj.pose.inverse() * voxel_center);
    const TriMesh& mesh = std::get<MeshShape>(obj.shape).mesh;
    const Vec3 half = Vec3::Constant(0.5 * voxel_size);
    for (const auto& t : mesh.triangles) {
        Vec3 a = obj.pose * mesh.vertices[t[0]];
        Vec3 b = obj.pose * mesh.vertices[t[1]];
        Vec3 c = obj.pose * mesh.vertices[t[2]];
        if (triangle_box_overlap(voxel_center, half, a, b, c)) return true;
    }
    return false;
}

namespace {

// Scans the intersection of the two objects' AABBs on a voxel lattice and
// reports whether both mark a common voxel.
bool objects_share_voxel(const SceneObject& a, const SceneObject& b, const Aabb& world,
                         double voxel_size) {
    Aabb region = a.world_aabb().intersection(b.world_aabb());
    region.min -= Vec3::Constant(voxel_size);
    region.max += Vec3::Constant(voxel_size);
    region = region.intersection(world);
    if (region.empty()) return false;
    const Vec3 origin = world.min;
    auto lo = ((region.min - origin) / voxel_size).array().floor().cast<int>();
    auto hi = ((region.max - origin) / voxel_size).array().ceil().cast<int>();
    for (int z = lo.z(); z < hi.z(); ++z)
        for (int y = lo.y(); y < hi.y(); ++y)
            for (int x = lo.x(); x < hi.x(); ++x) {
                Vec3 c = origin + voxel_size * Vec3(x + 0.5, y + 0.5, z + 0.5);
                if (object_marks_voxel(a, c, voxel_size) && object_marks_voxel(b, c, voxel_size))
                    return true;
            }
    return false;
}

ShapeSpec parse_shape(const Json& j, const std::string& ctx, const std::string& scene_dir) {
    const std::string type = require_string(j, "type", ctx);
    if (type == "box") {
        BoxShape s;
        s.size = require_vec3(j, "size", ctx);
        if ((s.size.array() <= 0).any())
            throw Error(ErrorCode::validation, ctx + ": box size must be positive");
        return s;
    }
    if (type == "cylinder") {
        CylinderShape s;
        s.radius = require_number(j, "radius", ctx);
        s.height = require_number(j, "height", ctx);
        if (s.radius <= 0 || s.height <= 0)
            throw Error(ErrorCode::validation, ctx + ": cylinder dimensions must be positive");
        return s;
    }
    if (type == "pipe_assembly") {
        PipeAssemblyShape s;
        s.pipe_radius = require_number(j, "pipe_radius", ctx);
        s.height = require_number(j, "height", ctx);
        s.count = static_cast<int>(require_number(j, "count", ctx));
        s.spacing = require_number(j, "spacing", ctx);
        if (s.pipe_radius <= 0 || s.height <= 0 || s.count < 1 || s.spacing <= 0)
            throw Error(ErrorCode::validation, ctx + ": pipe assembly parameters must be positive");
        if (s.count > 1 && s.spacing < 2 * s.pipe_radius)
            throw Error(ErrorCode::validation, ctx + ": pipes overlap (spacing < 2*pipe_radius)");
        return s;
    }
    if (type == "mesh") {
        MeshShape s;
        s.file = require_string(j, "file", ctx);
        std::filesystem::path p(s.file);
        if (p.is_relative()) p = std::filesystem::path(scene_dir) / p;
        s.mesh = load_obj(p.string());
        return s;
    }
    throw Error(ErrorCode::parse, ctx + ".type: unknown shape '" + type + "'");
}

Isometry parse_pose(const Json& j, const std::string& ctx) {
    Vec3 xyz = require_vec3(j, "xyz", ctx);
    Vec3 ypr = j.contains("ypr_deg") ? require_vec3(j, "ypr_deg", ctx) : Vec3::Zero();
    Isometry t = Isometry::Identity();
    t.translate(xyz);
    t.rotate(ypr_deg_to_rotation(ypr.x(), ypr.y(), ypr.z()));
    return t;
}

Json pose_to_json(const Isometry& t) {
    // Recover yaw-pitch-roll (ZYX) from the rotation.
    Eigen::Matrix3d r = t.rotation();
    double pitch = std::asin(std::clamp(-r(2, 0), -1.0, 1.0));
    double yaw, roll;
    if (std::abs(std::cos(pitch)) > 1e-9) {
        yaw = std::atan2(r(1, 0), r(0, 0));
        roll = std::atan2(r(2, 1), r(2, 2));
    } else {
        yaw = std::atan2(-r(0, 1), r(1, 1));
        roll = 0.0;
    }
    Json j;
    j["xyz"] = {t.translation().x(), t.translation().y(), t.translation().z()};
    j["ypr_deg"] = {rad_to_deg(yaw), rad_to_deg(pitch), rad_to_deg(roll)};
    return j;
}

Json shape_to_json(const ShapeSpec& s) {
    Json j;
    j["type"] = shape_type_name(s);
    if (const auto* box = std::get_if<BoxShape>(&s)) {
        j["size"] = {box->size.x(), box->size.y(), box->size.z()};
    } else if (const auto* cyl = std::get_if<CylinderShape>(&s)) {
        j["radius"] = cyl->radius;
        j["height"] = cyl->height;
    } else if (const auto* pa = std::get_if<PipeAssemblyShape>(&s)) {
        j["pipe_radius"] = pa->pipe_radius;
        j["height"] = pa->height;
        j["count"] = pa->count;
        j["spacing"] = pa->spacing;
    } else {
        j["file"] = std::get<MeshShape>(s).file;
    }
    return j;
}

} // namespace

void SceneDescription::validate() const {
    if ((world_bounds.extent().array() <= 0).any())
        throw Error(ErrorCode::validation, "world_bounds: degenerate extent");
    if (voxel_size <= 0) throw Error(ErrorCode::validation, "voxel_size must be positive");

    std::set<std::string> ids;
    for (const auto& obj : objects) {
        if (obj.id.empty()) throw Error(ErrorCode::validation, "object with empty id");
        if (!ids.insert(obj.id).second)
            throw Error(ErrorCode::validation, "duplicate object_id '" + obj.id + "'");
        if (!world_bounds.contains(obj.world_aabb()))
            throw Error(ErrorCode::validation,
                        "object '" + obj.id + "' does not fit inside world_bounds");
    }

    auto interest = of_interest_indices();
    if (interest.empty())
        throw Error(ErrorCode::validation, "scene has no object with of_interest = true");

    for (std::size_t i = 0; i < interest.size(); ++i)
        for (std::size_t j = i + 1; j < interest.size(); ++j) {
            const SceneObject& a = objects[static_cast<std::size_t>(interest[i])];
            const SceneObject& b = objects[static_cast<std::size_t>(interest[j])];
            if (objects_share_voxel(a, b, world_bounds, voxel_size))
                throw Error(ErrorCode::validation, "of-interest objects '" + a.id + "' and '" +
                                                       b.id + "' occupy the same voxel");
        }
}

SceneDescription load_scene(const std::string& path) {
    const Json j = load_json_file(path);
    const std::string dir = std::filesystem::path(path).parent_path().string();
    SceneDescription scene;

    const Json& wb = require_field(j, "world_bounds", "scene");
    scene.world_bounds.min = require_vec3(wb, "min", "scene.world_bounds");
    scene.world_bounds.max = require_vec3(wb, "max", "scene.world_bounds");
    scene.voxel_size = require_number(j, "voxel_size", "scene");

    const Json& objs = require_field(j, "objects", "scene");
    if (!objs.is_array()) throw Error(ErrorCode::parse, "scene.objects: expected an array");
    int k = 0;
    for (const auto& oj : objs) {
        const std::string ctx = "scene.objects[" + std::to_string(k++) + "]";
        SceneObject obj;
        obj.id = require_string(oj, "id", ctx);
        obj.shape = parse_shape(require_field(oj, "shape", ctx), ctx + ".shape", dir);
        obj.pose = parse_pose(require_field(oj, "pose", ctx), ctx + ".pose");
        obj.of_interest = oj.value("of_interest", true);
        scene.objects.push_back(std::move(obj));
    }

    scene.validate();
    return scene;
}

void save_scene(const SceneDescription& scene, const std::string& path) {
    Json j;
    j["world_bounds"]["min"] = {scene.world_bounds.min.x(), scene.world_bounds.min.y(),
                                scene.world_bounds.min.z()};
    j["world_bounds"]["max"] = {scene.world_bounds.max.x(), scene.world_bounds.max.y(),
                                scene.world_bounds.max.z()};
    j["voxel_size"] = scene.voxel_size;
    j["objects"] = Json::array();
    for (const auto& obj : scene.objects) {
        Json oj;
        oj["id"] = obj.id;
        oj["shape"] = shape_to_json(obj.shape);
        oj["pose"] = pose_to_json(obj.pose);
        oj["of_interest"] = obj.of_interest;
        j["objects"].push_back(oj);
    }
    save_json_file(path, j);
}

} // namespace longview
