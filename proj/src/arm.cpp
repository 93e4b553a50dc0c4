#include "arm.hpp"

#include <cmath>

#include "error.hpp"
#include "json_util.hpp"
#include "rng.hpp"

namespace longview {

double tvp_bound(double omega_max, double alpha_max, double t) {
    if (t < 0) throw Error(ErrorCode::invalid_argument, "tvp_bound: t must be >= 0");
    if (omega_max <= 0 || alpha_max <= 0)
        throw Error(ErrorCode::invalid_argument, "tvp_bound: limits must be positive");
    const double t_q = omega_max / alpha_max;
    if (t > t_q) return 0.5 * alpha_max * t_q * t_q + omega_max * (t - t_q);
    return 0.5 * alpha_max * t * t;
}

void ArmModel::validate() const {
    if (joints.empty()) throw Error(ErrorCode::validation, "arm: no joints");
    for (std::size_t i = 0; i < joints.size(); ++i) {
        const auto& j = joints[i];
        const std::string ctx = "arm.joints[" + std::to_string(i) + "]";
        if (std::abs(j.axis.norm() - 1.0) > 1e-6)
            throw Error(ErrorCode::validation, ctx + ": axis must be unit length");
        if (!(j.min_q < j.max_q))
            throw Error(ErrorCode::validation, ctx + ": require min_q < max_q");
        if (j.omega_max <= 0 || j.alpha_max <= 0)
            throw Error(ErrorCode::validation, ctx + ": velocity/acceleration limits must be positive");
    }
}

bool ArmModel::within_limits(const JointConfig& q, double tol) const {
    if (q.q.size() != dof()) return false;
    for (int i = 0; i < dof(); ++i)
        if (q.q[i] < joints[static_cast<std::size_t>(i)].min_q - tol ||
            q.q[i] > joints[static_cast<std::size_t>(i)].max_q + tol)
            return false;
    return true;
}

JointConfig ArmModel::clamped(const JointConfig& q) const {
    JointConfig out = q;
    for (int i = 0; i < dof(); ++i)
        out.q[i] = std::clamp(q.q[i], joints[static_cast<std::size_t>(i)].min_q,
                              joints[static_cast<std::size_t>(i)].max_q);
    return out;
}

JointConfig ArmModel::home() const {
    JointConfig q{JointVector::Zero(dof())};
    return clamped(q);
}

void ArmModel::frames(const JointConfig& q, const SE2& base_pose,
                      std::vector<Isometry>& joint_frames, Isometry& camera_frame) const {
    joint_frames.resize(joints.size());
    Isometry t = base_pose.lift() * mount;
    for (std::size_t i = 0; i < joints.size(); ++i) {
        t = t * joints[i].origin;
        joint_frames[i] = t;
        t = t * Eigen::AngleAxisd(q.q[static_cast<Eigen::Index>(i)], joints[i].axis);
    }
    camera_frame = t * eef_to_camera;
}

Pose6 ArmModel::forward_kinematics(const JointConfig& q, const SE2& base_pose) const {
    if (q.q.size() != dof())
        throw Error(ErrorCode::invalid_argument, "forward_kinematics: joint vector size mismatch");
    if (!within_limits(q))
        throw Error(ErrorCode::validation, "forward_kinematics: joint limits violated");
    std::vector<Isometry> jf;
    Isometry cam;
    frames(q, base_pose, jf, cam);
    return Pose6::from_isometry(cam);
}

JointVector ArmModel::tvp_bounds(double t) const {
    JointVector b(dof());
    for (int i = 0; i < dof(); ++i)
        b[i] = tvp_bound(joints[static_cast<std::size_t>(i)].omega_max,
                         joints[static_cast<std::size_t>(i)].alpha_max, t);
    return b;
}

bool ArmModel::reachable_within_step(const JointConfig& q_from, const JointConfig& q_to,
                                     double t_step) const {
    const JointVector bounds = tvp_bounds(t_step);
    for (int i = 0; i < dof(); ++i)
        if (std::abs(q_to.q[i] - q_from.q[i]) > bounds[i]) return false;
    return true;
}

std::vector<double> ArmModel::joint_reach_radii() const {
    // Downstream link lengths, accumulated from the tip.
    std::vector<double> radii(joints.size(), 0.0);
    double acc = eef_to_camera.translation().norm();
    for (std::size_t i = joints.size(); i-- > 0;) {
        radii[i] = acc + (i + 1 < joints.size()
                              ? joints[i + 1].origin.translation().norm()
                              : 0.0);
        acc = radii[i];
    }
    return radii;
}

namespace {

Vec3 rotation_error(const Eigen::Matrix3d& target, const Eigen::Matrix3d& current) {
    Eigen::AngleAxisd aa(target * current.transpose());
    return aa.angle() * aa.axis();
}

} // namespace

std::optional<JointConfig> ArmModel::inverse_kinematics(const Pose6& target, const SE2& base_pose,
                                                        const JointConfig& seed,
                                                        const IkOptions& opts) const {
    if (seed.q.size() != dof())
        throw Error(ErrorCode::invalid_argument, "inverse_kinematics: seed size mismatch");
    const int n = dof();
    const Eigen::Matrix3d rot_target = target.orientation.toRotationMatrix();

    std::vector<Isometry> jf;
    Isometry cam;
    int iterations_left = opts.max_iterations;
    Rng jitter(derive_seed(0x1cULL, "ik_restart"));

    for (int attempt = 0; attempt < opts.max_attempts && iterations_left > 0; ++attempt) {
        JointConfig q = seed;
        if (attempt == 1) {
            for (int i = 0; i < n; ++i)
                q.q[i] = 0.5 * (joints[static_cast<std::size_t>(i)].min_q +
                                joints[static_cast<std::size_t>(i)].max_q);
        } else if (attempt >= 2) {
            for (int i = 0; i < n; ++i) q.q[i] = seed.q[i] + jitter.uniform(-0.8, 0.8);
        }
        q = clamped(q);

        while (iterations_left-- > 0) {
            frames(q, base_pose, jf, cam);
            const Vec3 e_pos = target.position - cam.translation();
            const Vec3 e_rot = rotation_error(rot_target, cam.rotation());
            if (e_pos.norm() <= opts.pos_tolerance && e_rot.norm() <= opts.rot_tolerance)
                return q;

            Eigen::Matrix<double, 6, Eigen::Dynamic> jac(6, n);
            const Vec3 p_cam = cam.translation();
            for (int i = 0; i < n; ++i) {
                const Isometry& f = jf[static_cast<std::size_t>(i)];
                const Vec3 axis_w = f.rotation() * joints[static_cast<std::size_t>(i)].axis;
                jac.block<3, 1>(0, i) = axis_w.cross(p_cam - f.translation());
                jac.block<3, 1>(3, i) = opts.rot_weight * axis_w;
            }

            Eigen::Matrix<double, 6, 1> err;
            err << e_pos, opts.rot_weight * e_rot;
            const Eigen::Matrix<double, 6, 6> jjt =
                jac * jac.transpose() +
                opts.damping * opts.damping * Eigen::Matrix<double, 6, 6>::Identity();
            JointVector dq = jac.transpose() * jjt.ldlt().solve(err);

            const double step = dq.lpNorm<Eigen::Infinity>();
            if (step > 0.5) dq *= 0.5 / step;
            if (step < 1e-12) break; // stalled; try the next start
            q.q += dq;
            q = clamped(q);
        }
    }
    return std::nullopt;
}

ArmModel ArmModel::default_arm() {
    // 6R chain with roughly body-mounted-manipulator proportions
    // (~0.98 m reach from the shoulder). Axes: yaw, pitch, pitch, roll,
    // pitch, roll; camera looks along the final roll axis.
    ArmModel arm;
    auto make = [](const Vec3& axis, const Vec3& offset, double lo, double hi) {
        RevoluteJoint j;
        j.axis = axis;
        j.origin = Isometry::Identity();
        j.origin.translate(offset);
        j.min_q = lo;
        j.max_q = hi;
        return j;
    };
    arm.joints.push_back(make(Vec3::UnitZ(), {0.0, 0.0, 0.0}, -2.6, 2.6));
    arm.joints.push_back(make(Vec3::UnitY(), {0.0, 0.0, 0.10}, -2.9, 0.9));
    arm.joints.push_back(make(Vec3::UnitY(), {0.34, 0.0, 0.0}, 0.0, 2.8));
    arm.joints.push_back(make(Vec3::UnitX(), {0.26, 0.0, 0.0}, -2.6, 2.6));
    arm.joints.push_back(make(Vec3::UnitY(), {0.14, 0.0, 0.0}, -1.8, 1.8));
    arm.joints.push_back(make(Vec3::UnitX(), {0.10, 0.0, 0.0}, -2.6, 2.6));
    arm.mount = Isometry::Identity();
    arm.mount.translate(Vec3(0.29, 0.0, 0.55)); // shoulder above the base body
    arm.eef_to_camera = Isometry::Identity();
    arm.eef_to_camera.translate(Vec3(0.08, 0.0, 0.03));
    return arm;
}

ArmModel arm_from_json_file(const std::string& path) {
    const Json j = load_json_file(path);
    ArmModel arm;
    const Json& joints = require_field(j, "joints", "arm");
    if (!joints.is_array() || joints.empty())
        throw Error(ErrorCode::parse, "arm.joints: expected a non-empty array");
    int k = 0;
    for (const auto& jj : joints) {
        const std::string ctx = "arm.joints[" + std::to_string(k++) + "]";
        RevoluteJoint joint;
        joint.axis = require_vec3(jj, "axis", ctx).normalized();
        joint.origin = Isometry::Identity();
        joint.origin.translate(require_vec3(jj, "offset", ctx));
        if (jj.contains("ypr_deg")) {
            Vec3 ypr = require_vec3(jj, "ypr_deg", ctx);
            joint.origin.rotate(ypr_deg_to_rotation(ypr.x(), ypr.y(), ypr.z()));
        }
        joint.min_q = require_number(jj, "min_q", ctx);
        joint.max_q = require_number(jj, "max_q", ctx);
        joint.omega_max = require_number(jj, "omega_max", ctx);
        joint.alpha_max = require_number(jj, "alpha_max", ctx);
        arm.joints.push_back(joint);
    }
    auto parse_offset = [&](const char* key, Isometry& out) {
        if (!j.contains(key)) return;
        const Json& t = j[key];
        out = Isometry::Identity();
        out.translate(require_vec3(t, "xyz", std::string("arm.") + key));
        if (t.contains("ypr_deg")) {
            Vec3 ypr = require_vec3(t, "ypr_deg", std::string("arm.") + key);
            out.rotate(ypr_deg_to_rotation(ypr.x(), ypr.y(), ypr.z()));
        }
    };
    parse_offset("mount", arm.mount);
    parse_offset("eef_to_camera", arm.eef_to_camera);
    arm.validate();
    return arm;
}

void arm_to_json_file(const ArmModel& arm, const std::string& path) {
    Json j;
    j["joints"] = Json::array();
    for (const auto& joint : arm.joints) {
        Json jj;
        jj["axis"] = {joint.axis.x(), joint.axis.y(), joint.axis.z()};
        Vec3 t = joint.origin.translation();
        jj["offset"] = {t.x(), t.y(), t.z()};
        jj["min_q"] = joint.min_q;
        jj["max_q"] = joint.max_q;
        jj["omega_max"] = joint.omega_max;
        jj["alpha_max"] = joint.alpha_max;
        j["joints"].push_back(jj);
    }
    Vec3 m = arm.mount.translation();
    j["mount"]["xyz"] = {m.x(), m.y(), m.z()};
    Vec3 e = arm.eef_to_camera.translation();
    j["eef_to_camera"]["xyz"] = {e.x(), e.y(), e.z()};
    save_json_file(path, j);
}

} // namespace longview
