#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "headmouse/controller.hpp"
#include "headmouse/trace.hpp"

namespace headmouse {

struct Screen {
    int width = 1920;
    int height = 1080;
};

struct TimedReport {
    std::int64_t t_ms = 0;
    HidReport report{};
};

struct CursorPoint {
    std::int64_t t_ms = 0;
    int x = 0;
    int y = 0;
};

// Virtual cursor track, clamped to the screen after every step (1 count = 1 px).
struct CursorPath {
    std::vector<CursorPoint> positions;
    Screen screen{};
};

struct JitterStats {
    double rms_px = 0.0;
    double peak_px = 0.0;
};

struct ReplayOutput {
    std::vector<TimedReport> reports;
    std::vector<ButtonEvent> events;
    CursorPath path;
    std::vector<std::pair<std::int64_t, DiagnosticState>> diag_log;
};

struct FeatureRow {
    std::string name;
    std::string answer;
};

using FeatureReport = std::vector<FeatureRow>;

// Row 0 initializes the controller (and the neutral pose); every following
// row is one tick at its recorded t_ms. The cursor starts at screen center.
// Controller errors surface as ReplayError carrying the row index.
ReplayOutput run_replay(const Trace& tr, const ControllerConfig& cfg, Screen screen = {});

// Accumulates report deltas from (start_x, start_y), clamping after each step.
CursorPath integrate_cursor(const std::vector<TimedReport>& reports, int start_x, int start_y,
                            Screen screen, std::int64_t start_t_ms = 0);

// RMS and peak Euclidean displacement from the mean position over
// [from_ms, to_ms]. Throws WindowEmpty with fewer than two samples inside.
JitterStats static_jitter(const CursorPath& path, std::int64_t from_ms, std::int64_t to_ms);

// The 11 qualitative feature rows this device answers, keyed by mode.
FeatureReport feature_matrix(const ControllerConfig& cfg);

// One line per report: "<t_ms> <b0> <b1> <b2>", bytes in two-digit lowercase hex.
void write_report_stream(const std::vector<TimedReport>& reports, std::ostream& out);

// One line per point: "<t_ms> <x> <y>".
void write_cursor_path(const CursorPath& path, std::ostream& out);

}  // namespace headmouse
