#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace headmouse {

// Pull-down wiring on both pedal inputs: HIGH means physically pressed.
enum class Level : std::uint8_t { Low = 0, High = 1 };

struct PedalLevels {
    Level l_level = Level::Low;
    Level r_level = Level::Low;
};

// Debounced logical state of the two pedals.
struct PedalState {
    bool l_pressed = false;
    bool r_pressed = false;
};

enum class Pedal : std::uint8_t { L, R };
enum class EventKind : std::uint8_t { Press, Release };

struct ButtonEvent {
    Pedal pedal;
    EventKind kind;
    std::int64_t t_ms;
};

struct PedalDebounce {
    bool stable_pressed = false;
    bool has_candidate = false;          // raw currently disagrees with stable
    std::int64_t candidate_since_ms = 0; // when the disagreement began
};

struct DebounceState {
    PedalDebounce l{};
    PedalDebounce r{};
    std::int64_t window_ms = 20;
    std::int64_t last_t_ms = std::numeric_limits<std::int64_t>::min();
};

// One sampling step. A pedal's stable state flips only once its raw level has
// disagreed with it continuously for >= window_ms; samples are treated as
// constant until the next step. Throws TimeWentBackwards if t decreases.
std::pair<DebounceState, PedalState> debounce_step(DebounceState st, const PedalLevels& raw,
                                                   std::int64_t t_ms);

// Press where false->true, Release where true->false; L before R.
std::vector<ButtonEvent> edge_events(const PedalState& prev, const PedalState& next,
                                     std::int64_t t_ms);

}  // namespace headmouse
