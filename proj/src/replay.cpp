#include "headmouse/replay.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "headmouse/errors.hpp"

namespace headmouse {

ReplayOutput run_replay(const Trace& tr, const ControllerConfig& cfg, Screen screen) {
    if (tr.empty()) {
        throw ParseError("trace is empty");
    }

    RegisterFile rf = make_mpu6050(tr.front().a_attached);
    ReplayOutput out;
    out.reports.reserve(tr.size());

    auto raw_of = [](const TraceRow& row) {
        return RawImuSample{row.ax, row.ay, row.az, 0, row.gx, row.gy, row.gz};
    };

    store_sample(rf, raw_of(tr.front()));
    ControllerState st;
    try {
        st = init_controller(cfg, rf, raw_to_physical(raw_of(tr.front()), cfg.scale));
    } catch (const Error& e) {
        throw ReplayError(0, e.what());
    }

    for (std::size_t i = 1; i < tr.size(); ++i) {
        const TraceRow& row = tr[i];
        rf.present = row.a_attached;
        if (rf.present) {
            store_sample(rf, raw_of(row));
        }
        TickOutput tick_out;
        try {
            tick_out = tick(st, cfg, rf, PedalLevels{row.pedal_l, row.pedal_r}, row.b_attached,
                            row.t_ms);
        } catch (const Error& e) {
            throw ReplayError(i, e.what());
        }
        out.diag_log.emplace_back(row.t_ms, tick_out.diag);
        if (tick_out.report) {
            out.reports.push_back({row.t_ms, *tick_out.report});
        }
        out.events.insert(out.events.end(), tick_out.events.begin(), tick_out.events.end());
    }

    out.path = integrate_cursor(out.reports, screen.width / 2, screen.height / 2, screen,
                                tr.front().t_ms);
    return out;
}

CursorPath integrate_cursor(const std::vector<TimedReport>& reports, int start_x, int start_y,
                            Screen screen, std::int64_t start_t_ms) {
    CursorPath path;
    path.screen = screen;
    path.positions.reserve(reports.size() + 1);
    int x = start_x;
    int y = start_y;
    path.positions.push_back({start_t_ms, x, y});
    for (const TimedReport& r : reports) {
        x = std::clamp(x + r.report.dx, 0, screen.width - 1);
        y = std::clamp(y + r.report.dy, 0, screen.height - 1);
        path.positions.push_back({r.t_ms, x, y});
    }
    return path;
}

JitterStats static_jitter(const CursorPath& path, std::int64_t from_ms, std::int64_t to_ms) {
    std::vector<const CursorPoint*> window;
    for (const CursorPoint& p : path.positions) {
        if (p.t_ms >= from_ms && p.t_ms <= to_ms) {
            window.push_back(&p);
        }
    }
    if (window.size() < 2) {
        throw WindowEmpty("jitter window [" + std::to_string(from_ms) + ", " +
                          std::to_string(to_ms) + "] holds " + std::to_string(window.size()) +
                          " samples");
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const CursorPoint* p : window) {
        mean_x += p->x;
        mean_y += p->y;
    }
    mean_x /= static_cast<double>(window.size());
    mean_y /= static_cast<double>(window.size());

    double sum_sq = 0.0;
    double peak = 0.0;
    for (const CursorPoint* p : window) {
        const double dx = p->x - mean_x;
        const double dy = p->y - mean_y;
        const double d2 = dx * dx + dy * dy;
        sum_sq += d2;
        peak = std::max(peak, std::sqrt(d2));
    }
    return JitterStats{std::sqrt(sum_sq / static_cast<double>(window.size())), peak};
}

FeatureReport feature_matrix(const ControllerConfig& cfg) {
    const bool improved = cfg.mode == Mode::Improved;
    return FeatureReport{
        {"Wired USB type A connectivity", "Yes"},
        {"Full cursor control", "Yes"},
        {"Static cursor stability", "No"},
        {"Correct cursor movement (non-erratic)", "Yes"},
        {"Scroll Wheel", "No"},
        {"Compatible with PC and Laptop", "Yes"},
        {"Right and left-click buttons", "Yes"},
        {"Compatible with Windows 10", "Yes"},
        {"Detects button press when moving", improved ? "Yes" : "No"},
        {"Normal delay when detecting button press", "Yes"},
        {"Number of buttons", "2"},
    };
}

namespace {

void put_hex_byte(std::ostream& out, std::uint8_t b) {
    static const char digits[] = "0123456789abcdef";
    out << digits[b >> 4] << digits[b & 0x0F];
}

}  // namespace

void write_report_stream(const std::vector<TimedReport>& reports, std::ostream& out) {
    for (const TimedReport& r : reports) {
        const auto bytes = serialize_report(r.report);
        out << r.t_ms << ' ';
        put_hex_byte(out, bytes[0]);
        out << ' ';
        put_hex_byte(out, bytes[1]);
        out << ' ';
        put_hex_byte(out, bytes[2]);
        out << '\n';
    }
}

void write_cursor_path(const CursorPath& path, std::ostream& out) {
    for (const CursorPoint& p : path.positions) {
        out << p.t_ms << ' ' << p.x << ' ' << p.y << '\n';
    }
}

}  // namespace headmouse
