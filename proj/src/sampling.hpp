#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arm.hpp"
#include "geometry.hpp"
#include "voxel_grid.hpp"

namespace longview {

struct SamplingParams {
    double lookat_fraction{0.7};   // remainder gets uniform random orientations
    bool surface_only{false};      // sample only the sphere surface, not the ball
    double clearance_radius{0.12}; // camera collision sphere, meters
};

// Candidate camera poses for the next base location: positions stratified
// by shell inside the ball of radius v_eef * t_step around the current
// end-effector position, orientations split between look-ats toward the
// of-interest bounding boxes and uniform rotations.
std::vector<Pose6> sample_candidates(const Pose6& tau_curr, double v_eef, double t_step,
                                     const std::vector<Aabb>& targets, int count,
                                     std::uint64_t seed, const SamplingParams& params = {});

enum class RejectStage : std::uint8_t {
    none = 0,       // survived
    prefilter,      // cartesian displacement bound (implies joint distance)
    collision,
    ik,
    joint_distance,
};

struct FilterCounts {
    int prefilter{0};
    int collision{0};
    int ik{0};
    int joint_distance{0};
    int survivors{0};
};

struct CandidateSet {
    int base_index{0};
    struct Entry {
        Pose6 pose;
        JointConfig ik;
    };
    std::vector<Entry> candidates; // survivors only
    FilterCounts counts;
    std::vector<RejectStage> stages; // parallel to the input candidate list
};

struct FilterOptions {
    bool joint_filter{true}; // the reachability ablation disables this stage
    double clearance_radius{0.12};
    IkOptions ik;
};

// Keeps exactly the candidates that are collision free, IK-solvable from
// q_curr, and within the per-joint TVP displacement bound for t_step. The
// cartesian prefilter is conservative: it only rejects poses that no
// in-bound joint motion could reach.
CandidateSet filter_candidates(const std::vector<Pose6>& candidates, const JointConfig& q_curr,
                               const VoxelGrid& grid, const ArmModel& arm, const SE2& base_next,
                               double t_step, const FilterOptions& opts = {});

// CSV dump of one sampled layer (pose, filter outcome) for reachability maps.
void append_candidates_csv(const std::string& path, int base_index,
                           const std::vector<Pose6>& candidates, const CandidateSet& result,
                           bool write_header);

} // namespace longview
