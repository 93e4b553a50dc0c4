#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "error.hpp"

namespace longview {

using Json = nlohmann::json;

// Parses a JSON file, converting byte offsets in parse errors into
// line:column diagnostics.
inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io, "cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::parse, path + ":" + std::to_string(line) + ":" +
                                          std::to_string(col) + ": " + e.what());
    }
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::io, "cannot write file: " + path);
    out << j.dump(2) << "\n";
}

// Field accessors that name the offending field in parse failures.
inline const Json& require_field(const Json& j, const std::string& key, const std::string& ctx) {
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorCode::parse, ctx + ": missing field '" + key + "'");
    return *it;
}

inline double require_number(const Json& j, const std::string& key, const std::string& ctx) {
    const Json& f = require_field(j, key, ctx);
    if (!f.is_number()) throw Error(ErrorCode::parse, ctx + "." + key + ": expected a number");
    return f.get<double>();
}

inline std::string require_string(const Json& j, const std::string& key, const std::string& ctx) {
    const Json& f = require_field(j, key, ctx);
    if (!f.is_string()) throw Error(ErrorCode::parse, ctx + "." + key + ": expected a string");
    return f.get<std::string>();
}

inline Eigen::Vector3d require_vec3(const Json& j, const std::string& key, const std::string& ctx) {
    const Json& f = require_field(j, key, ctx);
    if (!f.is_array() || f.size() != 3 || !f[0].is_number() || !f[1].is_number() ||
        !f[2].is_number())
        throw Error(ErrorCode::parse, ctx + "." + key + ": expected [x, y, z]");
    return {f[0].get<double>(), f[1].get<double>(), f[2].get<double>()};
}

} // namespace longview
