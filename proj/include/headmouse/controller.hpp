#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "headmouse/device_model.hpp"
#include "headmouse/hid_report.hpp"
#include "headmouse/input_buttons.hpp"
#include "headmouse/orientation.hpp"
#include "headmouse/pointer_mapping.hpp"

namespace headmouse {

// faithful reproduces the prototype's documented behavior, including its
// limitations; improved keeps pedal sampling active during head motion.
enum class Mode : std::uint8_t { Faithful, Improved };

struct ControllerConfig {
    double tick_hz = 100.0;
    Mode mode = Mode::Faithful;
    bool fusion_enabled = false;
    double alpha = 0.2;      // smoother weight
    double fusion_k = 0.98;  // complementary-filter gyro weight
    MappingConfig mapping{};
    MountConfig mount{};
    ScaleConfig scale{};
    std::int64_t debounce_window_ms = 20;
};

enum class Led : std::uint8_t { Ok, MissingA, MissingB, Fault };

struct DiagnosticState {
    Led led = Led::Ok;
};

struct ControllerState {
    NeutralPose neutral{};
    SmootherState smoother{};
    FusionState fusion{};
    DebounceState debounce{};
    TiltAngles last_tilt{};  // held through freefall-ambiguous samples
    bool initialized = false;
    std::int64_t last_t_ms = std::numeric_limits<std::int64_t>::min();
};

struct TickOutput {
    std::optional<HidReport> report;  // absent on unhealthy ticks
    DiagnosticState diag{};
    std::vector<ButtonEvent> events;
};

// Ok iff both accessories check out; a missing sensor outranks missing pedals.
DiagnosticState diagnostics_update(bool a_ok, bool b_attached);

// Setup phase: probes the sensor, wakes it (PWR_MGMT_1 <- 0), and captures the
// neutral pose from the first sample. Throws AccessoryAbsent when the probe
// fails and FreefallAmbiguous when the first sample is degenerate.
ControllerState init_controller(const ControllerConfig& cfg, RegisterFile& rf,
                                const PhysicalSample& first_sample);

// One fixed-rate loop iteration: check accessories, read and decode the
// sensor, estimate tilt, map to a delta, debounce pedals, emit one report.
// Unhealthy ticks emit nothing and leave the state untouched. In faithful
// mode pedal sampling is skipped on any tick whose mapped delta is nonzero.
TickOutput tick(ControllerState& st, const ControllerConfig& cfg, const RegisterFile& rf,
                const PedalLevels& pedals, bool b_attached, std::int64_t t_ms);

}  // namespace headmouse
