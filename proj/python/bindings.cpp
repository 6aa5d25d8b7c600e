#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <sstream>
#include <string>

#include "headmouse/config.hpp"
#include "headmouse/errors.hpp"
#include "headmouse/noise.hpp"
#include "headmouse/replay.hpp"
#include "headmouse/trace.hpp"

namespace py = pybind11;
using namespace headmouse;

namespace {

py::bytes to_bytes(const std::uint8_t* data, std::size_t size) {
    return py::bytes(reinterpret_cast<const char*>(data), size);
}

std::span<const std::uint8_t> as_span(const std::string& s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deterministic head-mouse simulator: sensor emulation, tilt mapping, "
              "pedal debouncing, HID reports, and trace replay";

    py::register_exception<Error>(m, "Error");

    // enums
    py::enum_<Level>(m, "Level").value("LOW", Level::Low).value("HIGH", Level::High);
    py::enum_<Pedal>(m, "Pedal").value("L", Pedal::L).value("R", Pedal::R);
    py::enum_<EventKind>(m, "EventKind")
        .value("PRESS", EventKind::Press)
        .value("RELEASE", EventKind::Release);
    py::enum_<Mode>(m, "Mode").value("FAITHFUL", Mode::Faithful).value("IMPROVED", Mode::Improved);
    py::enum_<Led>(m, "Led")
        .value("OK", Led::Ok)
        .value("MISSING_A", Led::MissingA)
        .value("MISSING_B", Led::MissingB)
        .value("FAULT", Led::Fault);

    // device model
    py::class_<RegisterFile>(m, "RegisterFile")
        .def(py::init<>())
        .def_readwrite("present", &RegisterFile::present);
    m.def("make_mpu6050", &make_mpu6050, py::arg("present") = true);
    m.def("write_register", &write_register, py::arg("rf"), py::arg("addr"), py::arg("value"));
    m.def("store_sample", &store_sample, py::arg("rf"), py::arg("sample"));
    m.def("probe_identity", &probe_identity, py::arg("rf"));
    m.def(
        "emulate_read",
        [](const RegisterFile& rf, std::uint8_t start, std::size_t count) {
            const auto v = emulate_read(rf, start, count);
            return to_bytes(v.data(), v.size());
        },
        py::arg("rf"), py::arg("start"), py::arg("count"));

    py::class_<RawImuSample>(m, "RawImuSample")
        .def(py::init<>())
        .def(py::init([](int ax, int ay, int az, int temp, int gx, int gy, int gz) {
                 return RawImuSample{
                     static_cast<std::int16_t>(ax),   static_cast<std::int16_t>(ay),
                     static_cast<std::int16_t>(az),   static_cast<std::int16_t>(temp),
                     static_cast<std::int16_t>(gx),   static_cast<std::int16_t>(gy),
                     static_cast<std::int16_t>(gz)};
             }),
             py::arg("ax") = 0, py::arg("ay") = 0, py::arg("az") = 0, py::arg("temp") = 0,
             py::arg("gx") = 0, py::arg("gy") = 0, py::arg("gz") = 0)
        .def_readwrite("ax", &RawImuSample::ax)
        .def_readwrite("ay", &RawImuSample::ay)
        .def_readwrite("az", &RawImuSample::az)
        .def_readwrite("temp", &RawImuSample::temp)
        .def_readwrite("gx", &RawImuSample::gx)
        .def_readwrite("gy", &RawImuSample::gy)
        .def_readwrite("gz", &RawImuSample::gz);

    py::class_<ScaleConfig>(m, "ScaleConfig")
        .def(py::init<>())
        .def_readwrite("accel_sensitivity", &ScaleConfig::accel_sensitivity)
        .def_readwrite("gyro_sensitivity", &ScaleConfig::gyro_sensitivity);

    py::class_<PhysicalSample>(m, "PhysicalSample")
        .def(py::init<>())
        .def(py::init([](std::array<double, 3> accel, std::array<double, 3> gyro) {
                 PhysicalSample p;
                 p.accel = accel;
                 p.gyro = gyro;
                 return p;
             }),
             py::arg("accel"), py::arg("gyro") = std::array<double, 3>{})
        .def_readwrite("accel", &PhysicalSample::accel)
        .def_readwrite("gyro", &PhysicalSample::gyro);

    m.def(
        "decode_burst", [](const py::bytes& b) { return decode_burst(as_span(b)); },
        py::arg("bytes"));
    m.def(
        "encode_burst",
        [](const RawImuSample& s) {
            const auto b = encode_burst(s);
            return to_bytes(b.data(), b.size());
        },
        py::arg("sample"));
    m.def("raw_to_physical", &raw_to_physical, py::arg("sample"),
          py::arg("scale") = ScaleConfig{});

    // orientation
    py::class_<TiltAngles>(m, "TiltAngles")
        .def(py::init<>())
        .def(py::init([](double pitch, double roll) { return TiltAngles{pitch, roll}; }),
             py::arg("pitch"), py::arg("roll"))
        .def_readwrite("pitch", &TiltAngles::pitch)
        .def_readwrite("roll", &TiltAngles::roll);

    py::class_<SmootherState>(m, "SmootherState")
        .def(py::init<>())
        .def(py::init([](TiltAngles current, double alpha) {
                 return SmootherState{current, alpha};
             }),
             py::arg("current"), py::arg("alpha") = 0.2)
        .def_readwrite("current", &SmootherState::current)
        .def_readwrite("alpha", &SmootherState::alpha);

    py::class_<FusionState>(m, "FusionState")
        .def(py::init<>())
        .def(py::init([](TiltAngles angles, double k) { return FusionState{angles, k}; }),
             py::arg("angles"), py::arg("k") = 0.98)
        .def_readwrite("angles", &FusionState::angles)
        .def_readwrite("k", &FusionState::k);

    m.def("wrap_degrees", &wrap_degrees, py::arg("deg"));
    m.def("tilt_from_accel", &tilt_from_accel, py::arg("sample"));
    m.def("smooth_ema", &smooth_ema, py::arg("state"), py::arg("target"));
    m.def("complementary_update", &complementary_update, py::arg("state"), py::arg("sample"),
          py::arg("dt_s"));

    // pointer mapping
    py::class_<NeutralPose>(m, "NeutralPose")
        .def(py::init<>())
        .def_readwrite("pitch0", &NeutralPose::pitch0)
        .def_readwrite("roll0", &NeutralPose::roll0);

    py::class_<MountConfig>(m, "MountConfig")
        .def(py::init<>())
        .def_readwrite("swap_axes", &MountConfig::swap_axes)
        .def_readwrite("sign_x", &MountConfig::sign_x)
        .def_readwrite("sign_y", &MountConfig::sign_y);

    py::class_<MappingConfig>(m, "MappingConfig")
        .def(py::init<>())
        .def_readwrite("dead_zone_deg", &MappingConfig::dead_zone_deg)
        .def_readwrite("gain", &MappingConfig::gain)
        .def_readwrite("max_count", &MappingConfig::max_count);

    py::class_<PointerDelta>(m, "PointerDelta")
        .def(py::init<>())
        .def(py::init([](int dx, int dy) { return PointerDelta{dx, dy}; }), py::arg("dx"),
             py::arg("dy"))
        .def_readwrite("dx", &PointerDelta::dx)
        .def_readwrite("dy", &PointerDelta::dy);

    m.def("set_neutral", &set_neutral, py::arg("tilt"));
    m.def("map_tilt_to_delta", &map_tilt_to_delta, py::arg("tilt"), py::arg("neutral"),
          py::arg("mount") = MountConfig{}, py::arg("mapping") = MappingConfig{});

    // buttons
    py::class_<PedalLevels>(m, "PedalLevels")
        .def(py::init<>())
        .def(py::init([](Level l, Level r) { return PedalLevels{l, r}; }), py::arg("l_level"),
             py::arg("r_level"))
        .def_readwrite("l_level", &PedalLevels::l_level)
        .def_readwrite("r_level", &PedalLevels::r_level);

    py::class_<PedalState>(m, "PedalState")
        .def(py::init<>())
        .def(py::init([](bool l, bool r) { return PedalState{l, r}; }), py::arg("l_pressed"),
             py::arg("r_pressed"))
        .def_readwrite("l_pressed", &PedalState::l_pressed)
        .def_readwrite("r_pressed", &PedalState::r_pressed);

    py::class_<ButtonEvent>(m, "ButtonEvent")
        .def_readonly("pedal", &ButtonEvent::pedal)
        .def_readonly("kind", &ButtonEvent::kind)
        .def_readonly("t_ms", &ButtonEvent::t_ms);

    py::class_<PedalDebounce>(m, "PedalDebounce")
        .def(py::init<>())
        .def_readwrite("stable_pressed", &PedalDebounce::stable_pressed);

    py::class_<DebounceState>(m, "DebounceState")
        .def(py::init<>())
        .def_readwrite("l", &DebounceState::l)
        .def_readwrite("r", &DebounceState::r)
        .def_readwrite("window_ms", &DebounceState::window_ms);

    m.def("debounce_step", &debounce_step, py::arg("state"), py::arg("raw"), py::arg("t_ms"));
    m.def("edge_events", &edge_events, py::arg("prev"), py::arg("next"), py::arg("t_ms"));

    // HID report
    py::class_<HidReport>(m, "HidReport")
        .def(py::init<>())
        .def_readwrite("buttons", &HidReport::buttons)
        .def_readwrite("dx", &HidReport::dx)
        .def_readwrite("dy", &HidReport::dy);

    m.def("make_report", &make_report, py::arg("pedals"), py::arg("delta"));
    m.def(
        "serialize_report",
        [](const HidReport& r) {
            const auto b = serialize_report(r);
            return to_bytes(b.data(), b.size());
        },
        py::arg("report"));

    // controller
    py::class_<ControllerConfig>(m, "ControllerConfig")
        .def(py::init<>())
        .def_readwrite("tick_hz", &ControllerConfig::tick_hz)
        .def_readwrite("mode", &ControllerConfig::mode)
        .def_readwrite("fusion_enabled", &ControllerConfig::fusion_enabled)
        .def_readwrite("alpha", &ControllerConfig::alpha)
        .def_readwrite("fusion_k", &ControllerConfig::fusion_k)
        .def_readwrite("mapping", &ControllerConfig::mapping)
        .def_readwrite("mount", &ControllerConfig::mount)
        .def_readwrite("scale", &ControllerConfig::scale)
        .def_readwrite("debounce_window_ms", &ControllerConfig::debounce_window_ms);

    py::class_<DiagnosticState>(m, "DiagnosticState")
        .def(py::init<>())
        .def_readwrite("led", &DiagnosticState::led);

    m.def("diagnostics_update", &diagnostics_update, py::arg("a_ok"), py::arg("b_attached"));

    // trace + replay
    py::class_<TraceRow>(m, "TraceRow")
        .def(py::init<>())
        .def_readwrite("t_ms", &TraceRow::t_ms)
        .def_readwrite("ax", &TraceRow::ax)
        .def_readwrite("ay", &TraceRow::ay)
        .def_readwrite("az", &TraceRow::az)
        .def_readwrite("gx", &TraceRow::gx)
        .def_readwrite("gy", &TraceRow::gy)
        .def_readwrite("gz", &TraceRow::gz)
        .def_readwrite("pedal_l", &TraceRow::pedal_l)
        .def_readwrite("pedal_r", &TraceRow::pedal_r)
        .def_readwrite("a_attached", &TraceRow::a_attached)
        .def_readwrite("b_attached", &TraceRow::b_attached);

    m.attr("TRACE_HEADER") = std::string(kTraceHeader);

    m.def(
        "load_trace", [](const std::string& path) { return load_trace(path); }, py::arg("path"));
    m.def(
        "save_trace",
        [](const Trace& tr, const std::string& path) { save_trace(tr, path); }, py::arg("trace"),
        py::arg("path"));
    m.def(
        "parse_trace_text",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_trace(in, "<text>");
        },
        py::arg("text"));
    m.def(
        "trace_to_text",
        [](const Trace& tr) {
            std::ostringstream out;
            write_trace(tr, out);
            return out.str();
        },
        py::arg("trace"));

    m.def("inject_noise", &inject_noise, py::arg("trace"), py::arg("seed"),
          py::arg("sigma_counts"));

    py::class_<SplitMix64>(m, "SplitMix64")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next", &SplitMix64::next);
    m.def("next_gaussian", &next_gaussian, py::arg("rng"));

    py::class_<Screen>(m, "Screen")
        .def(py::init<>())
        .def(py::init([](int w, int h) { return Screen{w, h}; }), py::arg("width"),
             py::arg("height"))
        .def_readwrite("width", &Screen::width)
        .def_readwrite("height", &Screen::height);

    py::class_<TimedReport>(m, "TimedReport")
        .def_readonly("t_ms", &TimedReport::t_ms)
        .def_readonly("report", &TimedReport::report);

    py::class_<CursorPoint>(m, "CursorPoint")
        .def_readonly("t_ms", &CursorPoint::t_ms)
        .def_readonly("x", &CursorPoint::x)
        .def_readonly("y", &CursorPoint::y);

    py::class_<CursorPath>(m, "CursorPath")
        .def(py::init<>())
        .def_readwrite("positions", &CursorPath::positions)
        .def_readwrite("screen", &CursorPath::screen);

    py::class_<JitterStats>(m, "JitterStats")
        .def_readonly("rms_px", &JitterStats::rms_px)
        .def_readonly("peak_px", &JitterStats::peak_px);

    py::class_<ReplayOutput>(m, "ReplayOutput")
        .def_readonly("reports", &ReplayOutput::reports)
        .def_readonly("events", &ReplayOutput::events)
        .def_readonly("path", &ReplayOutput::path)
        .def_readonly("diag_log", &ReplayOutput::diag_log);

    py::class_<FeatureRow>(m, "FeatureRow")
        .def_readonly("name", &FeatureRow::name)
        .def_readonly("answer", &FeatureRow::answer);

    m.def("run_replay", &run_replay, py::arg("trace"), py::arg("config") = ControllerConfig{},
          py::arg("screen") = Screen{});
    m.def("integrate_cursor", &integrate_cursor, py::arg("reports"), py::arg("start_x"),
          py::arg("start_y"), py::arg("screen") = Screen{}, py::arg("start_t_ms") = 0);
    m.def("static_jitter", &static_jitter, py::arg("path"), py::arg("from_ms"),
          py::arg("to_ms"));
    m.def("feature_matrix", &feature_matrix, py::arg("config") = ControllerConfig{});
    m.def(
        "report_stream_text",
        [](const std::vector<TimedReport>& reports) {
            std::ostringstream out;
            write_report_stream(reports, out);
            return out.str();
        },
        py::arg("reports"));

    // config files
    py::class_<SimSetup>(m, "SimSetup")
        .def(py::init<>())
        .def_readwrite("controller", &SimSetup::controller)
        .def_readwrite("screen", &SimSetup::screen);
    m.def(
        "parse_config_text",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_config(in, "<text>");
        },
        py::arg("text"));
}
