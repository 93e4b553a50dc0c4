#include "base_path.hpp"

#include <cmath>

#include "error.hpp"
#include "json_util.hpp"

namespace longview {

void BasePath::validate() const {
    if (poses.size() < 2) throw Error(ErrorCode::validation, "base path needs at least 2 poses");
    if (poses.size() != timestamps.size())
        throw Error(ErrorCode::validation, "base path: pose/timestamp count mismatch");
    if (v_base <= 0 || t_step <= 0)
        throw Error(ErrorCode::validation, "base path: v_base and t_step must be positive");
    for (std::size_t i = 1; i < poses.size(); ++i) {
        if (std::abs((timestamps[i] - timestamps[i - 1]) - t_step) > 1e-9)
            throw Error(ErrorCode::validation,
                        "base path: timestamps must advance by exactly t_step (index " +
                            std::to_string(i) + ")");
        const double d = (poses[i].position() - poses[i - 1].position()).norm();
        if (d > spacing() + 1e-9)
            throw Error(ErrorCode::validation,
                        "base path: step " + std::to_string(i) + " moves " + std::to_string(d) +
                            " m, beyond v_base*t_step");
    }
}

BasePath BasePath::with_dwell_steps(int extra) const {
    if (extra <= 0) return *this;
    BasePath out;
    out.v_base = v_base;
    out.t_step = t_step;
    double t = timestamps.empty() ? 0.0 : timestamps.front();
    for (const auto& p : poses) {
        for (int k = 0; k <= extra; ++k) {
            out.poses.push_back(p);
            out.timestamps.push_back(t);
            t += t_step;
        }
    }
    return out;
}

BasePath base_path_from_json_file(const std::string& file) {
    const Json j = load_json_file(file);
    BasePath path;
    path.v_base = require_number(j, "v_base", "base_path");
    path.t_step = require_number(j, "t_step", "base_path");
    const Json& poses = require_field(j, "poses", "base_path");
    if (!poses.is_array()) throw Error(ErrorCode::parse, "base_path.poses: expected an array");
    int k = 0;
    for (const auto& pj : poses) {
        if (!pj.is_array() || pj.size() != 3)
            throw Error(ErrorCode::parse,
                        "base_path.poses[" + std::to_string(k) + "]: expected [x, y, yaw]");
        path.poses.push_back({pj[0].get<double>(), pj[1].get<double>(), pj[2].get<double>()});
        path.timestamps.push_back(k * path.t_step);
        ++k;
    }
    path.validate();
    return path;
}

void base_path_to_json_file(const BasePath& path, const std::string& file) {
    Json j;
    j["v_base"] = path.v_base;
    j["t_step"] = path.t_step;
    j["poses"] = Json::array();
    for (const auto& p : path.poses) j["poses"].push_back({p.x, p.y, p.yaw});
    save_json_file(file, j);
}

} // namespace longview
