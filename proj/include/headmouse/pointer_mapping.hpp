#pragma once

#include "headmouse/orientation.hpp"

namespace headmouse {

// Zero-displacement pose captured at calibration time.
struct NeutralPose {
    double pitch0 = 0.0;
    double roll0 = 0.0;
};

// Physical mount remap. With swap_axes false, relative pitch drives the
// vertical (dy) axis and relative roll the horizontal (dx) axis; signs flip
// the screen direction. Defaults match the sensor worn on the right side of
// the head pointing downwards: nod down moves the cursor down.
struct MountConfig {
    bool swap_axes = false;
    int sign_x = 1;
    int sign_y = 1;
};

struct MappingConfig {
    double dead_zone_deg = 2.0;  // no motion inside this band
    double gain = 3.0;           // counts per degree per tick
    int max_count = 127;         // HID report limit
};

// Per-tick relative displacement in counts. dx, dy ∈ [-127, 127].
struct PointerDelta {
    int dx = 0;
    int dy = 0;
};

NeutralPose set_neutral(const TiltAngles& t);

// rel = wrap(t - n) per axis; zero inside the dead zone, otherwise
// sign(rel) * round((|rel| - dead_zone) * gain) clamped to ±max_count,
// then permuted and sign-flipped per MountConfig.
PointerDelta map_tilt_to_delta(const TiltAngles& t, const NeutralPose& n,
                               const MountConfig& mc, const MappingConfig& cfg);

}  // namespace headmouse
