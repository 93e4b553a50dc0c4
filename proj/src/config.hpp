#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "sampling.hpp"
#include "visibility.hpp"

namespace longview {

enum class PlannerKind { greedy, see_nearest };
enum class SurveyMode { viewpoint_only, all_images };

// Every knob of the pipeline. Defaults follow the reference experimental
// parameters; file, environment and flag overrides layer on top in that
// order (flag strongest).
struct PlannerConfig {
    std::uint64_t seed{1};
    double v_base{0.35};   // m/s
    double v_eef{0.65};    // m/s
    double t_step{1.0};    // s
    int m_candidates{980}; // per base pose
    int n_base_samples{25};
    double voxel_size{0.05};          // m
    double registration_distance{0};  // m; 0 = follow voxel_size
    double gt_density{0};             // points/m^2; 0 = 4 per voxel face area

    CameraModel camera;
    std::string arm_file;    // empty = built-in default arm
    std::string camera_file; // empty = inline camera keys

    PlannerKind planner{PlannerKind::greedy};
    SurveyMode mode{SurveyMode::all_images};
    bool joint_filter{true};
    double dwell{0.0}; // s per base pose; rounded up to whole t_step chunks
    double frame_dt{0.2}; // all-images intermediate frame period, s

    double lookat_fraction{0.7};
    bool surface_only{false};
    double clearance_radius{0.12};
    double base_clearance{0.3};
    double layout_extent{4.0};  // triangle side / linear pitch scale
    double path_standoff{1.5};
    double path_amplitude{1.8};

    int jobs{0}; // <= 0: hardware concurrency
    std::int64_t cell_budget{1'000'000'000};
    std::int64_t path_budget{1'000'000};
    int ik_max_iterations{200};

    std::string dump_candidates; // CSV path, empty = off
    std::string dump_observed;   // CSV path, empty = off

    double effective_registration_distance() const {
        return registration_distance > 0 ? registration_distance : voxel_size;
    }
    double effective_gt_density() const {
        return gt_density > 0 ? gt_density : 4.0 / (voxel_size * voxel_size);
    }
    IkOptions ik_options() const {
        IkOptions o;
        o.max_iterations = ik_max_iterations;
        return o;
    }
    FilterOptions filter_options() const {
        FilterOptions o;
        o.joint_filter = joint_filter;
        o.clearance_radius = clearance_radius;
        o.ik = ik_options();
        return o;
    }
    SamplingParams sampling_params() const {
        SamplingParams p;
        p.lookat_fraction = lookat_fraction;
        p.surface_only = surface_only;
        p.clearance_radius = clearance_radius;
        return p;
    }

    void validate() const;
};

// Key-value access used by the config file, LONGVIEW_* environment
// variables and CLI --set flags. Keys are the snake_case field names;
// camera fields use the camera. prefix (camera.h_fov_deg, ...).
void config_set(PlannerConfig& cfg, const std::string& key, const std::string& value);
std::string config_get(const PlannerConfig& cfg, const std::string& key);
std::map<std::string, std::string> config_keys(const PlannerConfig& cfg);

PlannerConfig config_from_json_file(const std::string& path);
void apply_json_file(PlannerConfig& cfg, const std::string& path);
// LONGVIEW_<UPPER_SNAKE_KEY>, dots become double underscores.
void apply_environment(PlannerConfig& cfg);

} // namespace longview
