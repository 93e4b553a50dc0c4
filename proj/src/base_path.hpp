#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"

namespace longview {

// Pre-determined SE(2) trajectory of the mobile base, discretized at uniform
// time steps. Not controlled by the view planner.
struct BasePath {
    std::vector<SE2> poses;
    std::vector<double> timestamps;
    double v_base{0.35};
    double t_step{1.0};

    double spacing() const { return v_base * t_step; }
    int size() const { return static_cast<int>(poses.size()); }

    // N >= 2, timestamps uniform at t_step, consecutive positions within
    // spacing (plus rounding slack).
    void validate() const;

    // Repeats every pose `extra` times (stationary base) for the
    // stop-and-stare variant; timestamps stay uniform at t_step.
    BasePath with_dwell_steps(int extra) const;
};

BasePath base_path_from_json_file(const std::string& path);
void base_path_to_json_file(const BasePath& path, const std::string& file);

} // namespace longview
