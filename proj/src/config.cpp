#include "config.hpp"

#include <cstdlib>
#include <functional>

#include "error.hpp"
#include "json_util.hpp"

namespace longview {

void PlannerConfig::validate() const {
    if (v_base <= 0 || v_eef <= 0 || t_step <= 0)
        throw Error(ErrorCode::validation, "config: rates and t_step must be positive");
    if (m_candidates < 1) throw Error(ErrorCode::validation, "config: m_candidates must be >= 1");
    if (n_base_samples < 2)
        throw Error(ErrorCode::validation, "config: n_base_samples must be >= 2");
    if (voxel_size <= 0) throw Error(ErrorCode::validation, "config: voxel_size must be positive");
    if (registration_distance < 0)
        throw Error(ErrorCode::validation, "config: registration_distance must be >= 0");
    if (dwell < 0) throw Error(ErrorCode::validation, "config: dwell must be >= 0");
    camera.validate();
}

namespace {

struct KeyBinding {
    std::function<std::string(const PlannerConfig&)> get;
    std::function<void(PlannerConfig&, const std::string&)> set;
};

double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse, "config." + key + ": not a number: '" + v + "'");
    }
}

long long parse_int(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long long d = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse, "config." + key + ": not an integer: '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw Error(ErrorCode::parse, "config." + key + ": not a boolean: '" + v + "'");
}

std::string fmt_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", d);
    return buf;
}

const std::map<std::string, KeyBinding>& bindings() {
    static const std::map<std::string, KeyBinding> table = [] {
        std::map<std::string, KeyBinding> m;
        auto dbl = [&m](const std::string& key, double PlannerConfig::* field) {
            m[key] = {[field](const PlannerConfig& c) { return fmt_double(c.*field); },
                      [field, key](PlannerConfig& c, const std::string& v) {
                          c.*field = parse_double(key, v);
                      }};
        };
        auto integer = [&m](const std::string& key, int PlannerConfig::* field) {
            m[key] = {[field](const PlannerConfig& c) { return std::to_string(c.*field); },
                      [field, key](PlannerConfig& c, const std::string& v) {
                          c.*field = static_cast<int>(parse_int(key, v));
                      }};
        };
        auto boolean = [&m](const std::string& key, bool PlannerConfig::* field) {
            m[key] = {[field](const PlannerConfig& c) { return c.*field ? "true" : "false"; },
                      [field, key](PlannerConfig& c, const std::string& v) {
                          c.*field = parse_bool(key, v);
                      }};
        };
        auto str = [&m](const std::string& key, std::string PlannerConfig::* field) {
            m[key] = {[field](const PlannerConfig& c) { return c.*field; },
                      [field](PlannerConfig& c, const std::string& v) { c.*field = v; }};
        };

        m["seed"] = {[](const PlannerConfig& c) { return std::to_string(c.seed); },
                     [](PlannerConfig& c, const std::string& v) {
                         c.seed = static_cast<std::uint64_t>(parse_int("seed", v));
                     }};
        dbl("v_base", &PlannerConfig::v_base);
        dbl("v_eef", &PlannerConfig::v_eef);
        dbl("t_step", &PlannerConfig::t_step);
        integer("m_candidates", &PlannerConfig::m_candidates);
        integer("n_base_samples", &PlannerConfig::n_base_samples);
        dbl("voxel_size", &PlannerConfig::voxel_size);
        dbl("registration_distance", &PlannerConfig::registration_distance);
        dbl("gt_density", &PlannerConfig::gt_density);
        str("arm_file", &PlannerConfig::arm_file);
        str("camera_file", &PlannerConfig::camera_file);
        boolean("joint_filter", &PlannerConfig::joint_filter);
        dbl("dwell", &PlannerConfig::dwell);
        dbl("frame_dt", &PlannerConfig::frame_dt);
        dbl("lookat_fraction", &PlannerConfig::lookat_fraction);
        boolean("surface_only", &PlannerConfig::surface_only);
        dbl("clearance_radius", &PlannerConfig::clearance_radius);
        dbl("base_clearance", &PlannerConfig::base_clearance);
        dbl("layout_extent", &PlannerConfig::layout_extent);
        dbl("path_standoff", &PlannerConfig::path_standoff);
        dbl("path_amplitude", &PlannerConfig::path_amplitude);
        integer("jobs", &PlannerConfig::jobs);
        integer("ik_max_iterations", &PlannerConfig::ik_max_iterations);
        str("dump_candidates", &PlannerConfig::dump_candidates);
        str("dump_observed", &PlannerConfig::dump_observed);

        m["cell_budget"] = {
            [](const PlannerConfig& c) { return std::to_string(c.cell_budget); },
            [](PlannerConfig& c, const std::string& v) { c.cell_budget = parse_int("cell_budget", v); }};
        m["path_budget"] = {
            [](const PlannerConfig& c) { return std::to_string(c.path_budget); },
            [](PlannerConfig& c, const std::string& v) { c.path_budget = parse_int("path_budget", v); }};

        m["planner"] = {[](const PlannerConfig& c) {
                            return c.planner == PlannerKind::greedy ? "greedy" : "see-nearest";
                        },
                        [](PlannerConfig& c, const std::string& v) {
                            if (v == "greedy")
                                c.planner = PlannerKind::greedy;
                            else if (v == "see-nearest" || v == "see_nearest")
                                c.planner = PlannerKind::see_nearest;
                            else
                                throw Error(ErrorCode::parse,
                                            "config.planner: unknown planner '" + v + "'");
                        }};
        m["mode"] = {[](const PlannerConfig& c) {
                         return c.mode == SurveyMode::viewpoint_only ? "viewpoint-only"
                                                                     : "all-images";
                     },
                     [](PlannerConfig& c, const std::string& v) {
                         if (v == "viewpoint-only" || v == "viewpoint_only")
                             c.mode = SurveyMode::viewpoint_only;
                         else if (v == "all-images" || v == "all_images")
                             c.mode = SurveyMode::all_images;
                         else
                             throw Error(ErrorCode::parse, "config.mode: unknown mode '" + v + "'");
                     }};

        auto cam_dbl = [&m](const std::string& key, double CameraModel::* field) {
            m["camera." + key] = {
                [field](const PlannerConfig& c) { return fmt_double(c.camera.*field); },
                [field, key](PlannerConfig& c, const std::string& v) {
                    c.camera.*field = parse_double("camera." + key, v);
                }};
        };
        auto cam_int = [&m](const std::string& key, int CameraModel::* field) {
            m["camera." + key] = {
                [field](const PlannerConfig& c) { return std::to_string(c.camera.*field); },
                [field, key](PlannerConfig& c, const std::string& v) {
                    c.camera.*field = static_cast<int>(parse_int("camera." + key, v));
                }};
        };
        cam_dbl("h_fov_deg", &CameraModel::h_fov_deg);
        cam_dbl("v_fov_deg", &CameraModel::v_fov_deg);
        cam_int("ray_cols", &CameraModel::ray_cols);
        cam_int("ray_rows", &CameraModel::ray_rows);
        cam_dbl("min_range", &CameraModel::min_range);
        cam_dbl("max_range", &CameraModel::max_range);
        m["camera.exact"] = {
            [](const PlannerConfig& c) { return c.camera.exact ? "true" : "false"; },
            [](PlannerConfig& c, const std::string& v) {
                c.camera.exact = parse_bool("camera.exact", v);
            }};
        return m;
    }();
    return table;
}

} // namespace

void config_set(PlannerConfig& cfg, const std::string& key, const std::string& value) {
    auto it = bindings().find(key);
    if (it == bindings().end())
        throw Error(ErrorCode::parse, "config: unknown key '" + key + "'");
    it->second.set(cfg, value);
}

std::string config_get(const PlannerConfig& cfg, const std::string& key) {
    auto it = bindings().find(key);
    if (it == bindings().end())
        throw Error(ErrorCode::parse, "config: unknown key '" + key + "'");
    return it->second.get(cfg);
}

std::map<std::string, std::string> config_keys(const PlannerConfig& cfg) {
    std::map<std::string, std::string> out;
    for (const auto& [key, binding] : bindings()) out[key] = binding.get(cfg);
    return out;
}

void apply_json_file(PlannerConfig& cfg, const std::string& path) {
    const Json j = load_json_file(path);
    if (!j.is_object()) throw Error(ErrorCode::parse, path + ": config must be a JSON object");
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& node,
                                                                    const std::string& prefix) {
        for (auto it = node.begin(); it != node.end(); ++it) {
            const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            if (it->is_object()) {
                walk(*it, key);
            } else if (it->is_string()) {
                config_set(cfg, key, it->get<std::string>());
            } else {
                config_set(cfg, key, Json(*it).dump());
            }
        }
    };
    walk(j, "");
}

PlannerConfig config_from_json_file(const std::string& path) {
    PlannerConfig cfg;
    apply_json_file(cfg, path);
    return cfg;
}

void apply_environment(PlannerConfig& cfg) {
    for (const auto& [key, _] : bindings()) {
        std::string env = "LONGVIEW_";
        for (char c : key) {
            if (c == '.')
                env += "__";
            else
                env += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        if (const char* v = std::getenv(env.c_str())) config_set(cfg, key, v);
    }
}

} // namespace longview
