#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "geometry.hpp"

namespace longview {

// Maximum joint displacement achievable in time t under a trapezoidal
// velocity profile with limits (omega_max, alpha_max). The ramp lasts
// T_q = omega_max / alpha_max; beyond it the joint cruises.
double tvp_bound(double omega_max, double alpha_max, double t);

using JointVector = Eigen::VectorXd;

struct JointConfig {
    JointVector q;
};

struct RevoluteJoint {
    Vec3 axis{Vec3::UnitZ()}; // in the joint's local frame
    Isometry origin{Isometry::Identity()}; // fixed transform from the parent frame
    double min_q{-M_PI};
    double max_q{M_PI};
    double omega_max{1.5}; // rad/s
    double alpha_max{4.0}; // rad/s^2
};

struct IkOptions {
    double pos_tolerance{1e-3};       // meters
    double rot_tolerance{deg_to_rad(0.5)};
    int max_iterations{200};          // total across restart attempts
    int max_attempts{4};
    double damping{0.05};
    double rot_weight{0.3};           // meters per radian of orientation error
};

class ArmModel {
public:
    std::vector<RevoluteJoint> joints;
    Isometry mount{Isometry::Identity()};         // base frame -> arm root
    Isometry eef_to_camera{Isometry::Identity()};

    int dof() const { return static_cast<int>(joints.size()); }
    void validate() const;
    bool within_limits(const JointConfig& q, double tol = 1e-9) const;
    JointConfig clamped(const JointConfig& q) const;
    JointConfig home() const; // all zeros, clamped into limits

    // Camera pose: lift(base) * mount * chain(q) * eef_to_camera.
    Pose6 forward_kinematics(const JointConfig& q, const SE2& base_pose) const;

    // World frames of every joint plus the camera, for the Jacobian.
    void frames(const JointConfig& q, const SE2& base_pose, std::vector<Isometry>& joint_frames,
                Isometry& camera_frame) const;

    // Damped least squares from `seed`, with deterministic restarts inside
    // the iteration budget. Failure is a legitimate filter outcome.
    std::optional<JointConfig> inverse_kinematics(const Pose6& target, const SE2& base_pose,
                                                  const JointConfig& seed,
                                                  const IkOptions& opts = {}) const;

    // Per-joint TVP displacement bounds for a step of `t` seconds.
    JointVector tvp_bounds(double t) const;

    // Componentwise |q_to - q_from| <= tvp_bound per joint.
    bool reachable_within_step(const JointConfig& q_from, const JointConfig& q_to,
                               double t_step) const;

    // Upper bound on camera displacement per radian of joint i: the summed
    // length of all downstream links. Used by the sampling prefilter.
    std::vector<double> joint_reach_radii() const;

    static ArmModel default_arm();
};

ArmModel arm_from_json_file(const std::string& path);
void arm_to_json_file(const ArmModel& arm, const std::string& path);

} // namespace longview
