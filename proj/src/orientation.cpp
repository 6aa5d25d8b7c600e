#include "headmouse/orientation.hpp"

#include <algorithm>
#include <cmath>

#include "headmouse/errors.hpp"

namespace headmouse {

namespace {

constexpr double kRadToDeg = 180.0 / M_PI;

double clamp_pitch(double deg) { return std::clamp(deg, -90.0, 90.0); }

}  // namespace

double wrap_degrees(double deg) {
    deg = std::fmod(deg, 360.0);
    if (deg <= -180.0) {
        deg += 360.0;
    } else if (deg > 180.0) {
        deg -= 360.0;
    }
    return deg;
}

TiltAngles tilt_from_accel(const PhysicalSample& p) {
    const double ax = p.accel[0], ay = p.accel[1], az = p.accel[2];
    const double mag = std::sqrt(ax * ax + ay * ay + az * az);
    if (mag <= kFreefallThresholdG) {
        throw FreefallAmbiguous();
    }
    TiltAngles t;
    t.pitch = std::atan2(-ax, std::sqrt(ay * ay + az * az)) * kRadToDeg;
    t.roll = wrap_degrees(std::atan2(ay, az) * kRadToDeg);
    return t;
}

SmootherState smooth_ema(SmootherState st, const TiltAngles& target) {
    st.current.pitch =
        clamp_pitch(st.current.pitch + st.alpha * wrap_degrees(target.pitch - st.current.pitch));
    st.current.roll =
        wrap_degrees(st.current.roll + st.alpha * wrap_degrees(target.roll - st.current.roll));
    return st;
}

FusionState complementary_update(FusionState fs, const PhysicalSample& p, double dt_s) {
    // Gyro rates: x drives roll, y drives pitch.
    double pitch = fs.angles.pitch + p.gyro[1] * dt_s;
    double roll = fs.angles.roll + p.gyro[0] * dt_s;
    if (fs.k < 1.0) {
        const TiltAngles accel_tilt = tilt_from_accel(p);
        pitch = fs.k * pitch + (1.0 - fs.k) * accel_tilt.pitch;
        roll = roll + (1.0 - fs.k) * wrap_degrees(accel_tilt.roll - roll);
    }
    fs.angles.pitch = clamp_pitch(pitch);
    fs.angles.roll = wrap_degrees(roll);
    return fs;
}

}  // namespace headmouse
