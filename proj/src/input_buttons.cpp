#include "headmouse/input_buttons.hpp"

#include <string>

#include "headmouse/errors.hpp"

namespace headmouse {

namespace {

void step_pedal(PedalDebounce& pd, Level raw, std::int64_t t_ms, std::int64_t window_ms) {
    const bool raw_pressed = raw == Level::High;
    if (raw_pressed == pd.stable_pressed) {
        pd.has_candidate = false;
        return;
    }
    if (!pd.has_candidate) {
        pd.has_candidate = true;
        pd.candidate_since_ms = t_ms;
    }
    if (t_ms - pd.candidate_since_ms >= window_ms) {
        pd.stable_pressed = raw_pressed;
        pd.has_candidate = false;
    }
}

}  // namespace

std::pair<DebounceState, PedalState> debounce_step(DebounceState st, const PedalLevels& raw,
                                                   std::int64_t t_ms) {
    if (t_ms < st.last_t_ms) {
        throw TimeWentBackwards("debounce time " + std::to_string(t_ms) + " after " +
                                std::to_string(st.last_t_ms));
    }
    st.last_t_ms = t_ms;
    step_pedal(st.l, raw.l_level, t_ms, st.window_ms);
    step_pedal(st.r, raw.r_level, t_ms, st.window_ms);
    return {st, PedalState{st.l.stable_pressed, st.r.stable_pressed}};
}

std::vector<ButtonEvent> edge_events(const PedalState& prev, const PedalState& next,
                                     std::int64_t t_ms) {
    std::vector<ButtonEvent> events;
    if (prev.l_pressed != next.l_pressed) {
        events.push_back({Pedal::L, next.l_pressed ? EventKind::Press : EventKind::Release, t_ms});
    }
    if (prev.r_pressed != next.r_pressed) {
        events.push_back({Pedal::R, next.r_pressed ? EventKind::Press : EventKind::Release, t_ms});
    }
    return events;
}

}  // namespace headmouse
