#pragma once

#include <cmath>
#include <cstdint>

#include "headmouse/trace.hpp"

namespace headmouse::test {

// Level pose: gravity along +z at the default ±2 g scale.
inline TraceRow rest_row(std::int64_t t_ms) {
    TraceRow row;
    row.t_ms = t_ms;
    row.az = 16384;
    return row;
}

// Pose pitched forward by `pitch_deg` (counts quantized like a real read).
inline TraceRow pitch_row(std::int64_t t_ms, double pitch_deg) {
    const double rad = pitch_deg * M_PI / 180.0;
    TraceRow row;
    row.t_ms = t_ms;
    row.ax = static_cast<std::int16_t>(std::llround(-std::sin(rad) * 16384.0));
    row.az = static_cast<std::int16_t>(std::llround(std::cos(rad) * 16384.0));
    return row;
}

// Pose rolled by `roll_deg` about the x axis.
inline TraceRow roll_row(std::int64_t t_ms, double roll_deg) {
    const double rad = roll_deg * M_PI / 180.0;
    TraceRow row;
    row.t_ms = t_ms;
    row.ay = static_cast<std::int16_t>(std::llround(std::sin(rad) * 16384.0));
    row.az = static_cast<std::int16_t>(std::llround(std::cos(rad) * 16384.0));
    return row;
}

}  // namespace headmouse::test
