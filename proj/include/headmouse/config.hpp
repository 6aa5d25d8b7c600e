#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "headmouse/controller.hpp"
#include "headmouse/replay.hpp"

namespace headmouse {

struct SimSetup {
    ControllerConfig controller{};
    Screen screen{};
};

// Line-oriented "key = value" with '#' comments. Unknown keys are rejected
// and every value is validated against its range before anything runs.
// Keys: tick_hz, mode, fusion_enabled, alpha, k, dead_zone_deg, gain, sign_x,
// sign_y, debounce_ms, screen_w, screen_h, accel_sens, gyro_sens.
SimSetup parse_config(std::istream& in, const std::string& name);
SimSetup load_config(const std::filesystem::path& path);

}  // namespace headmouse
