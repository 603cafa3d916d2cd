#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tvdlab/errors.hpp"
#include "tvdlab/experiments.hpp"

namespace tvd {

namespace {

using nlohmann::json;

void flatten(const json& node, const std::string& prefix, std::map<std::string, json>& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    if (prefix.empty()) {
        throw ConfigError("config must be a JSON object");
    }
    out[prefix] = node;
}

double number(const std::string& key, const json& value) {
    if (!value.is_number()) {
        throw ConfigError("config key '" + key + "' must be a number");
    }
    return value.get<double>();
}

std::size_t positive_integer(const std::string& key, const json& value) {
    if (!value.is_number_integer() || value.get<long long>() <= 0) {
        throw ConfigError("config key '" + key + "' must be a positive integer");
    }
    return value.get<std::size_t>();
}

std::string text(const std::string& key, const json& value) {
    if (!value.is_string()) {
        throw ConfigError("config key '" + key + "' must be a string");
    }
    return value.get<std::string>();
}

}  // namespace

ExperimentRequest parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    std::map<std::string, json> entries;
    flatten(doc, "", entries);

    ExperimentRequest request;
    bool has_experiment = false;
    ExperimentOverrides& ov = request.overrides;
    for (const auto& [key, value] : entries) {
        if (key == "experiment") {
            request.id = parse_experiment(text(key, value));
            has_experiment = true;
        } else if (key == "n") {
            ov.n = positive_integer(key, value);
        } else if (key == "cfl") {
            ov.cfl = number(key, value);
        } else if (key == "t_final") {
            ov.t_final = number(key, value);
        } else if (key == "limiter") {
            if (!value.is_boolean()) {
                throw ConfigError("config key 'limiter' must be true or false");
            }
            ov.limiter = value.get<bool>();
        } else if (key == "tv.mu") {
            ov.mu = number(key, value);
        } else if (key == "tv.gamma") {
            ov.gamma = number(key, value);
        } else if (key == "tv.epsilon") {
            ov.epsilon = number(key, value);
        } else if (key == "tv.max_iter") {
            ov.max_iter = positive_integer(key, value);
        } else if (key == "tv.stride") {
            ov.stride = positive_integer(key, value);
        } else if (key == "out_dir") {
            request.out_dir = text(key, value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    if (!has_experiment) {
        throw ConfigError("config needs an 'experiment' key");
    }
    if (ov.cfl && !(*ov.cfl > 0.0 && *ov.cfl < 1.0)) {
        throw ConfigError("cfl must lie in (0, 1)");
    }
    if (ov.t_final && !(*ov.t_final > 0.0)) {
        throw ConfigError("t_final must be positive");
    }
    for (const auto* p : {&ov.mu, &ov.gamma, &ov.epsilon}) {
        if (*p && !(**p > 0.0)) {
            throw ConfigError("tv.mu, tv.gamma and tv.epsilon must be positive");
        }
    }
    if (ov.n && *ov.n < 2) {
        throw ConfigError("n must be at least 2");
    }
    return request;
}

ExperimentRequest load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace tvd
