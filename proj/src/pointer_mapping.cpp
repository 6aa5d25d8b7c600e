#include "headmouse/pointer_mapping.hpp"

#include <cmath>

namespace headmouse {

NeutralPose set_neutral(const TiltAngles& t) { return NeutralPose{t.pitch, t.roll}; }

namespace {

// Piecewise-linear transfer on one axis. Gain applies to the deflection past
// the dead-zone edge, so there is no jump when leaving the band.
int axis_counts(double rel, const MappingConfig& cfg) {
    const double mag = std::fabs(rel);
    if (mag <= cfg.dead_zone_deg) {
        return 0;
    }
    long counts = std::lround((mag - cfg.dead_zone_deg) * cfg.gain);
    if (counts > cfg.max_count) {
        counts = cfg.max_count;
    }
    return rel < 0 ? -static_cast<int>(counts) : static_cast<int>(counts);
}

}  // namespace

PointerDelta map_tilt_to_delta(const TiltAngles& t, const NeutralPose& n, const MountConfig& mc,
                               const MappingConfig& cfg) {
    const double rel_pitch = wrap_degrees(t.pitch - n.pitch0);
    const double rel_roll = wrap_degrees(t.roll - n.roll0);
    const int pitch_counts = axis_counts(rel_pitch, cfg);
    const int roll_counts = axis_counts(rel_roll, cfg);
    const int vertical = mc.swap_axes ? roll_counts : pitch_counts;
    const int horizontal = mc.swap_axes ? pitch_counts : roll_counts;
    return PointerDelta{mc.sign_x * horizontal, mc.sign_y * vertical};
}

}  // namespace headmouse
