#include "mesh.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"

namespace longview {

Aabb TriMesh::bounds() const {
    Aabb b;
    if (vertices.empty()) return b;
    b.min = b.max = vertices[0];
    for (const auto& v : vertices) b.expand(v);
    return b;
}

double TriMesh::area() const {
    double a = 0.0;
    for (const auto& t : triangles) {
        const Vec3& p0 = vertices[t[0]];
        a += 0.5 * (vertices[t[1]] - p0).cross(vertices[t[2]] - p0).norm();
    }
    return a;
}

TriMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open mesh file: " + path);
    TriMesh mesh;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "v") {
            double x, y, z;
            if (!(ss >> x >> y >> z))
                throw Error(ErrorCode::parse,
                            path + ":" + std::to_string(lineno) + ": malformed vertex");
            mesh.vertices.emplace_back(x, y, z);
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string tok;
            while (ss >> tok) {
                // Accept v, v/vt, v/vt/vn, v//vn forms.
                int v = std::stoi(tok.substr(0, tok.find('/')));
                if (v < 0) v = static_cast<int>(mesh.vertices.size()) + v + 1;
                if (v < 1 || v > static_cast<int>(mesh.vertices.size()))
                    throw Error(ErrorCode::parse, path + ":" + std::to_string(lineno) +
                                                      ": face index out of range");
                idx.push_back(v - 1);
            }
            if (idx.size() < 3)
                throw Error(ErrorCode::parse,
                            path + ":" + std::to_string(lineno) + ": face needs >= 3 vertices");
            for (std::size_t k = 2; k < idx.size(); ++k)
                mesh.triangles.push_back({idx[0], idx[static_cast<int>(k) - 1], idx[k]});
        }
    }
    if (mesh.triangles.empty())
        throw Error(ErrorCode::validation, path + ": mesh has no triangles");
    return mesh;
}

namespace {

bool axis_separates(const Vec3& axis, const Vec3& v0, const Vec3& v1, const Vec3& v2,
                    const Vec3& half) {
    double p0 = axis.dot(v0), p1 = axis.dot(v1), p2 = axis.dot(v2);
    double r = half.x() * std::abs(axis.x()) + half.y() * std::abs(axis.y()) +
               half.z() * std::abs(axis.z());
    double lo = std::min({p0, p1, p2}), hi = std::max({p0, p1, p2});
    return lo > r || hi < -r;
}

} // namespace

bool triangle_box_overlap(const Vec3& box_center, const Vec3& box_half, const Vec3& a,
                          const Vec3& b, const Vec3& c) {
    const Vec3 v0 = a - box_center, v1 = b - box_center, v2 = c - box_center;

    // Box face normals.
    for (int i = 0; i < 3; ++i) {
        double lo = std::min({v0[i], v1[i], v2[i]});
        double hi = std::max({v0[i], v1[i], v2[i]});
        if (lo > box_half[i] || hi < -box_half[i]) return false;
    }

    // Triangle normal.
    const Vec3 e0 = v1 - v0, e1 = v2 - v1, e2 = v0 - v2;
    if (axis_separates(e0.cross(e1), v0, v1, v2, box_half)) return false;

    // Nine edge cross products.
    const Vec3 axes[3] = {Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
    const Vec3 edges[3] = {e0, e1, e2};
    for (const auto& u : axes)
        for (const auto& e : edges) {
            Vec3 axis = u.cross(e);
            if (axis.squaredNorm() < 1e-24) continue;
            if (axis_separates(axis, v0, v1, v2, box_half)) return false;
        }
    return true;
}

} // namespace longview
