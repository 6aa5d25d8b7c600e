#pragma once

#include <array>
#include <cstdint>

#include "headmouse/input_buttons.hpp"
#include "headmouse/pointer_mapping.hpp"

namespace headmouse {

inline constexpr std::uint8_t kButtonLeft = 0x01;
inline constexpr std::uint8_t kButtonRight = 0x02;

// Boot-protocol mouse report. bits 2..7 of buttons stay zero; dx/dy are
// limited to [-127, 127] so negation is always representable.
struct HidReport {
    std::uint8_t buttons = 0;
    std::int8_t dx = 0;
    std::int8_t dy = 0;
};

// Throws RangeError when the delta is outside [-127, 127].
HidReport make_report(const PedalState& p, const PointerDelta& d);

// The exact 3 bytes a host receives: buttons, dx, dy (two's complement).
// Throws RangeError if reserved button bits are set.
std::array<std::uint8_t, 3> serialize_report(const HidReport& r);

}  // namespace headmouse
