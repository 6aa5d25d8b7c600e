#include "headmouse/controller.hpp"

#include <string>

#include "headmouse/errors.hpp"

namespace headmouse {

DiagnosticState diagnostics_update(bool a_ok, bool b_attached) {
    if (!a_ok) return {Led::MissingA};
    if (!b_attached) return {Led::MissingB};
    return {Led::Ok};
}

ControllerState init_controller(const ControllerConfig& cfg, RegisterFile& rf,
                                const PhysicalSample& first_sample) {
    if (!probe_identity(rf)) {
        throw AccessoryAbsent("sensor probe failed during init");
    }
    write_register(rf, kRegPwrMgmt1, 0x00);  // wake from sleep

    const TiltAngles tilt = tilt_from_accel(first_sample);
    ControllerState st;
    st.neutral = set_neutral(tilt);
    st.smoother = SmootherState{tilt, cfg.alpha};
    st.fusion = FusionState{tilt, cfg.fusion_k};
    st.debounce = DebounceState{};
    st.debounce.window_ms = cfg.debounce_window_ms;
    st.last_tilt = tilt;
    st.initialized = true;
    return st;
}

TickOutput tick(ControllerState& st, const ControllerConfig& cfg, const RegisterFile& rf,
                const PedalLevels& pedals, bool b_attached, std::int64_t t_ms) {
    if (!st.initialized) {
        throw NotInitialized();
    }
    if (t_ms < st.last_t_ms) {
        throw TimeWentBackwards("tick time " + std::to_string(t_ms) + " after " +
                                std::to_string(st.last_t_ms));
    }

    TickOutput out;
    out.diag = diagnostics_update(probe_identity(rf), b_attached);
    if (out.diag.led != Led::Ok) {
        return out;  // no report, state untouched
    }
    st.last_t_ms = t_ms;

    const auto bytes = emulate_read(rf, kRegAccelXoutH, kBurstLength);
    const PhysicalSample sample = raw_to_physical(decode_burst(bytes), cfg.scale);

    // Instantaneous estimate; the last valid tilt is held through freefall.
    TiltAngles instant = st.last_tilt;
    try {
        if (cfg.fusion_enabled) {
            st.fusion = complementary_update(st.fusion, sample, 1.0 / cfg.tick_hz);
            instant = st.fusion.angles;
        } else {
            instant = tilt_from_accel(sample);
        }
        st.last_tilt = instant;
    } catch (const FreefallAmbiguous&) {
    }

    st.smoother = smooth_ema(st.smoother, instant);
    const PointerDelta delta =
        map_tilt_to_delta(st.smoother.current, st.neutral, cfg.mount, cfg.mapping);

    // The prototype loses presses while the cursor moves: pedal sampling is
    // skipped whenever the mapped delta is nonzero. Improved mode always samples.
    PedalState pedal_state{st.debounce.l.stable_pressed, st.debounce.r.stable_pressed};
    const bool moving = delta.dx != 0 || delta.dy != 0;
    if (cfg.mode == Mode::Improved || !moving) {
        const PedalState prev = pedal_state;
        auto [next_debounce, next_state] = debounce_step(st.debounce, pedals, t_ms);
        st.debounce = next_debounce;
        pedal_state = next_state;
        out.events = edge_events(prev, pedal_state, t_ms);
    }

    out.report = make_report(pedal_state, delta);
    return out;
}

}  // namespace headmouse
