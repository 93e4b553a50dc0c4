#pragma once

#include <cmath>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace longview {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;
using Isometry = Eigen::Isometry3d;

inline double deg_to_rad(double d) { return d * M_PI / 180.0; }
inline double rad_to_deg(double r) { return r * 180.0 / M_PI; }

// Planar base pose: position on the ground plane plus heading.
struct SE2 {
    double x{0.0};
    double y{0.0};
    double yaw{0.0};

    Isometry lift() const {
        Isometry t = Isometry::Identity();
        t.translate(Vec3(x, y, 0.0));
        t.rotate(Eigen::AngleAxisd(yaw, Vec3::UnitZ()));
        return t;
    }

    Eigen::Vector2d position() const { return {x, y}; }
};

// 6-DoF camera / end-effector pose. Optical axis is the local +x axis.
struct Pose6 {
    Vec3 position{Vec3::Zero()};
    Quat orientation{Quat::Identity()};

    Isometry to_isometry() const {
        Isometry t = Isometry::Identity();
        t.translate(position);
        t.rotate(orientation);
        return t;
    }

    static Pose6 from_isometry(const Isometry& t) {
        Pose6 p;
        p.position = t.translation();
        p.orientation = Quat(t.rotation()).normalized();
        return p;
    }

    Vec3 optical_axis() const { return orientation * Vec3::UnitX(); }
};

// Orientation whose +x axis points from `eye` toward `target`, with roll fixed
// so the camera "up" (+z) stays as close to world z as the geometry allows.
inline Quat look_at_orientation(const Vec3& eye, const Vec3& target,
                                const Vec3& up_hint = Vec3::UnitZ()) {
    Vec3 fwd = target - eye;
    double n = fwd.norm();
    if (n < 1e-12) return Quat::Identity();
    fwd /= n;
    Vec3 left = up_hint.cross(fwd);
    if (left.norm() < 1e-9) {
        // Looking straight up or down; pick an arbitrary but fixed roll.
        left = Vec3::UnitY().cross(fwd);
        if (left.norm() < 1e-9) left = Vec3::UnitX().cross(fwd);
    }
    left.normalize();
    Vec3 up = fwd.cross(left);
    Eigen::Matrix3d r;
    r.col(0) = fwd;
    r.col(1) = left;
    r.col(2) = up;
    return Quat(r).normalized();
}

// Rotation angle between two orientations, radians in [0, pi].
inline double quat_angle(const Quat& a, const Quat& b) {
    double d = std::abs(a.normalized().dot(b.normalized()));
    d = std::min(1.0, d);
    return 2.0 * std::acos(d);
}

// Euler yaw-pitch-roll (degrees, applied Z then Y then X) to rotation.
inline Eigen::Matrix3d ypr_deg_to_rotation(double yaw_deg, double pitch_deg, double roll_deg) {
    return (Eigen::AngleAxisd(deg_to_rad(yaw_deg), Vec3::UnitZ()) *
            Eigen::AngleAxisd(deg_to_rad(pitch_deg), Vec3::UnitY()) *
            Eigen::AngleAxisd(deg_to_rad(roll_deg), Vec3::UnitX()))
        .toRotationMatrix();
}

struct Aabb {
    Vec3 min{Vec3::Zero()};
    Vec3 max{Vec3::Zero()};

    Vec3 center() const { return 0.5 * (min + max); }
    Vec3 extent() const { return max - min; }
    bool contains(const Vec3& p) const {
        return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
    }
    bool contains(const Aabb& other) const {
        return (other.min.array() >= min.array()).all() &&
               (other.max.array() <= max.array()).all();
    }
    bool intersects(const Aabb& other) const {
        return (min.array() <= other.max.array()).all() &&
               (other.min.array() <= max.array()).all();
    }
    Aabb intersection(const Aabb& other) const {
        Aabb r;
        r.min = min.cwiseMax(other.min);
        r.max = max.cwiseMin(other.max);
        return r;
    }
    bool empty() const { return (max.array() <= min.array()).any(); }
    void expand(const Vec3& p) {
        min = min.cwiseMin(p);
        max = max.cwiseMax(p);
    }
};

// AABB of a local-frame box under a rigid transform.
inline Aabb transformed_aabb(const Isometry& pose, const Vec3& local_min, const Vec3& local_max) {
    Aabb out;
    bool first = true;
    for (int i = 0; i < 8; ++i) {
        Vec3 corner((i & 1) ? local_max.x() : local_min.x(),
                    (i & 2) ? local_max.y() : local_min.y(),
                    (i & 4) ? local_max.z() : local_min.z());
        Vec3 w = pose * corner;
        if (first) {
            out.min = out.max = w;
            first = false;
        } else {
            out.expand(w);
        }
    }
    return out;
}

} // namespace longview
