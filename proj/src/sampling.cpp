#include "sampling.hpp"

#include <cmath>
#include <fstream>

#include "error.hpp"
#include "rng.hpp"

namespace longview {

namespace {

// Stratified point on the surface of an axis-aligned box, area weighted.
Vec3 sample_aabb_surface(const Aabb& box, Rng& rng) {
    const Vec3 e = box.extent().cwiseMax(1e-9);
    const double areas[3] = {e.y() * e.z(), e.x() * e.z(), e.x() * e.y()};
    const double total = 2.0 * (areas[0] + areas[1] + areas[2]);
    double pick = rng.uniform() * total;
    for (int axis = 0; axis < 3; ++axis) {
        for (int side = 0; side < 2; ++side) {
            if (pick > areas[axis]) {
                pick -= areas[axis];
                continue;
            }
            Vec3 p;
            p[axis] = side ? box.max[axis] : box.min[axis];
            const int u = (axis + 1) % 3, v = (axis + 2) % 3;
            p[u] = rng.uniform(box.min[u], box.max[u]);
            p[v] = rng.uniform(box.min[v], box.max[v]);
            return p;
        }
    }
    return box.center();
}

} // namespace

std::vector<Pose6> sample_candidates(const Pose6& tau_curr, double v_eef, double t_step,
                                     const std::vector<Aabb>& targets, int count,
                                     std::uint64_t seed, const SamplingParams& params) {
    if (count < 1) throw Error(ErrorCode::invalid_argument, "sample_candidates: count must be >= 1");
    if (v_eef < 0 || t_step < 0)
        throw Error(ErrorCode::invalid_argument, "sample_candidates: rates must be nonnegative");

    const double radius = v_eef * t_step;
    Rng rng(seed);
    std::vector<Pose6> out;
    out.reserve(static_cast<std::size_t>(count));

    for (int i = 0; i < count; ++i) {
        Pose6 pose;
        // Shell-stratified radius: u stratified over [0,1), r = R * u^(1/3).
        const double u = (i + rng.uniform()) / count;
        const double r = params.surface_only ? radius : radius * std::cbrt(u);
        pose.position = tau_curr.position + r * rng.unit_vector();

        const bool look_at = !targets.empty() && rng.uniform() < params.lookat_fraction;
        if (look_at) {
            const Aabb& box = targets[static_cast<std::size_t>(i) % targets.size()];
            const Vec3 aim = sample_aabb_surface(box, rng);
            pose.orientation = look_at_orientation(pose.position, aim);
        } else {
            pose.orientation = rng.uniform_quaternion();
        }
        out.push_back(pose);
    }
    return out;
}

CandidateSet filter_candidates(const std::vector<Pose6>& candidates, const JointConfig& q_curr,
                               const VoxelGrid& grid, const ArmModel& arm, const SE2& base_next,
                               double t_step, const FilterOptions& opts) {
    if (candidates.empty())
        throw Error(ErrorCode::invalid_argument, "filter_candidates: empty candidate list");

    CandidateSet result;
    result.stages.assign(candidates.size(), RejectStage::none);

    // Conservative displacement bound: if the candidate position is farther
    // from the carried pose than every joint's TVP sweep combined can move
    // the camera, the joint-distance test cannot pass.
    const JointVector bounds = arm.tvp_bounds(t_step);
    const std::vector<double> radii = arm.joint_reach_radii();
    double max_disp = 0.0;
    for (int i = 0; i < arm.dof(); ++i) max_disp += bounds[i] * radii[static_cast<std::size_t>(i)];
    max_disp += 5e-3; // IK residual slack
    const Vec3 carried = arm.forward_kinematics(q_curr, base_next).position;

    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const Pose6& pose = candidates[k];

        if (opts.joint_filter && (pose.position - carried).norm() > max_disp) {
            result.stages[k] = RejectStage::prefilter;
            ++result.counts.prefilter;
            continue;
        }
        if (!grid.position_in_bounds(pose.position) ||
            !grid.sphere_is_free(pose.position, opts.clearance_radius)) {
            result.stages[k] = RejectStage::collision;
            ++result.counts.collision;
            continue;
        }
        auto ik = arm.inverse_kinematics(pose, base_next, q_curr, opts.ik);
        if (!ik) {
            result.stages[k] = RejectStage::ik;
            ++result.counts.ik;
            continue;
        }
        if (opts.joint_filter && !arm.reachable_within_step(q_curr, *ik, t_step)) {
            result.stages[k] = RejectStage::joint_distance;
            ++result.counts.joint_distance;
            continue;
        }
        result.candidates.push_back({pose, std::move(*ik)});
        ++result.counts.survivors;
    }
    return result;
}

void append_candidates_csv(const std::string& path, int base_index,
                           const std::vector<Pose6>& candidates, const CandidateSet& result,
                           bool write_header) {
    std::ofstream out(path, write_header ? std::ios::trunc : std::ios::app);
    if (!out) throw Error(ErrorCode::io, "cannot write file: " + path);
    if (write_header) out << "base_index,x,y,z,qw,qx,qy,qz,outcome\n";
    static const char* names[] = {"survived", "rejected_prefilter", "rejected_collision",
                                  "rejected_ik", "rejected_joint_distance"};
    char line[256];
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const Pose6& p = candidates[k];
        std::snprintf(line, sizeof(line), "%d,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%s\n", base_index,
                      p.position.x(), p.position.y(), p.position.z(), p.orientation.w(),
                      p.orientation.x(), p.orientation.y(), p.orientation.z(),
                      names[static_cast<int>(result.stages[k])]);
        out << line;
    }
}

} // namespace longview
