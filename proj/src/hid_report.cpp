#include "headmouse/hid_report.hpp"

#include <string>

#include "headmouse/errors.hpp"

namespace headmouse {

HidReport make_report(const PedalState& p, const PointerDelta& d) {
    if (d.dx < -127 || d.dx > 127 || d.dy < -127 || d.dy > 127) {
        throw RangeError("pointer delta (" + std::to_string(d.dx) + ", " + std::to_string(d.dy) +
                         ") outside [-127, 127]");
    }
    HidReport r;
    if (p.l_pressed) r.buttons |= kButtonLeft;
    if (p.r_pressed) r.buttons |= kButtonRight;
    r.dx = static_cast<std::int8_t>(d.dx);
    r.dy = static_cast<std::int8_t>(d.dy);
    return r;
}

std::array<std::uint8_t, 3> serialize_report(const HidReport& r) {
    if ((r.buttons & 0xFC) != 0) {
        throw RangeError("reserved button bits set");
    }
    if (r.dx == -128 || r.dy == -128) {
        throw RangeError("delta -128 is not representable");
    }
    return {r.buttons, static_cast<std::uint8_t>(r.dx), static_cast<std::uint8_t>(r.dy)};
}

}  // namespace headmouse
