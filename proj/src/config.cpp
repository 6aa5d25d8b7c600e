#include "headmouse/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "headmouse/errors.hpp"

namespace headmouse {

namespace {

std::string strip(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& where) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(value, &consumed);
        if (consumed != value.size() || !std::isfinite(v)) {
            throw std::invalid_argument(value);
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError(where + ": not a number: '" + value + "'");
    }
}

std::int64_t parse_integer(const std::string& value, const std::string& where) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
        throw ConfigError(where + ": not an integer: '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& value, const std::string& where) {
    if (value == "1" || value == "true") return true;
    if (value == "0" || value == "false") return false;
    throw ConfigError(where + ": expected a boolean (0/1/true/false), got '" + value + "'");
}

int parse_sign(const std::string& value, const std::string& where) {
    if (value == "1" || value == "+1") return 1;
    if (value == "-1") return -1;
    throw ConfigError(where + ": expected 1 or -1, got '" + value + "'");
}

}  // namespace

SimSetup parse_config(std::istream& in, const std::string& name) {
    SimSetup setup;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = name + ":" + std::to_string(line_no);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(where + ": expected 'key = value'");
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(where + ": expected 'key = value'");
        }

        ControllerConfig& c = setup.controller;
        if (key == "tick_hz") {
            c.tick_hz = parse_number(value, where);
            if (c.tick_hz <= 0) throw ConfigError(where + ": tick_hz must be > 0");
        } else if (key == "mode") {
            if (value == "faithful") {
                c.mode = Mode::Faithful;
            } else if (value == "improved") {
                c.mode = Mode::Improved;
            } else {
                throw ConfigError(where + ": mode must be 'faithful' or 'improved'");
            }
        } else if (key == "fusion_enabled") {
            c.fusion_enabled = parse_bool(value, where);
        } else if (key == "alpha") {
            c.alpha = parse_number(value, where);
            if (c.alpha <= 0 || c.alpha > 1) throw ConfigError(where + ": alpha must be in (0, 1]");
        } else if (key == "k") {
            c.fusion_k = parse_number(value, where);
            if (c.fusion_k < 0 || c.fusion_k > 1) {
                throw ConfigError(where + ": k must be in [0, 1]");
            }
        } else if (key == "dead_zone_deg") {
            c.mapping.dead_zone_deg = parse_number(value, where);
            if (c.mapping.dead_zone_deg < 0) {
                throw ConfigError(where + ": dead_zone_deg must be >= 0");
            }
        } else if (key == "gain") {
            c.mapping.gain = parse_number(value, where);
            if (c.mapping.gain <= 0) throw ConfigError(where + ": gain must be > 0");
        } else if (key == "sign_x") {
            c.mount.sign_x = parse_sign(value, where);
        } else if (key == "sign_y") {
            c.mount.sign_y = parse_sign(value, where);
        } else if (key == "debounce_ms") {
            c.debounce_window_ms = parse_integer(value, where);
            if (c.debounce_window_ms <= 0) throw ConfigError(where + ": debounce_ms must be > 0");
        } else if (key == "screen_w") {
            setup.screen.width = static_cast<int>(parse_integer(value, where));
            if (setup.screen.width <= 0) throw ConfigError(where + ": screen_w must be > 0");
        } else if (key == "screen_h") {
            setup.screen.height = static_cast<int>(parse_integer(value, where));
            if (setup.screen.height <= 0) throw ConfigError(where + ": screen_h must be > 0");
        } else if (key == "accel_sens") {
            c.scale.accel_sensitivity = parse_number(value, where);
            if (c.scale.accel_sensitivity <= 0) {
                throw ConfigError(where + ": accel_sens must be > 0");
            }
        } else if (key == "gyro_sens") {
            c.scale.gyro_sensitivity = parse_number(value, where);
            if (c.scale.gyro_sensitivity <= 0) {
                throw ConfigError(where + ": gyro_sens must be > 0");
            }
        } else {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
    return setup;
}

SimSetup load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file: " + path.string());
    }
    return parse_config(in, path.string());
}

}  // namespace headmouse
