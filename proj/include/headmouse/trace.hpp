#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "headmouse/input_buttons.hpp"

namespace headmouse {

// One recorded sensor+pedal sample. t_ms is strictly increasing over a trace.
struct TraceRow {
    std::int64_t t_ms = 0;
    std::int16_t ax = 0, ay = 0, az = 0;
    std::int16_t gx = 0, gy = 0, gz = 0;
    Level pedal_l = Level::Low;
    Level pedal_r = Level::Low;
    bool a_attached = true;
    bool b_attached = true;
};

using Trace = std::vector<TraceRow>;

inline constexpr std::string_view kTraceHeader =
    "t_ms,ax,ay,az,gx,gy,gz,pedal_l,pedal_r,a_attached,b_attached";

// CSV format: the header above, then integer fields; pedal levels and the
// attached flags are 0/1. Throws ParseError, RangeError, or NonMonotonicTime
// with the offending line number in the message.
Trace parse_trace(std::istream& in, const std::string& name);
Trace load_trace(const std::filesystem::path& path);

void write_trace(const Trace& tr, std::ostream& out);
void save_trace(const Trace& tr, const std::filesystem::path& path);

}  // namespace headmouse
