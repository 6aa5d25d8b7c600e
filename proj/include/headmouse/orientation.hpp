#pragma once

#include "headmouse/device_model.hpp"

namespace headmouse {

// Head tilt in degrees. pitch ∈ [-90, 90], roll ∈ (-180, 180].
struct TiltAngles {
    double pitch = 0.0;
    double roll = 0.0;
};

// First-order low-pass over tilt. alpha ∈ (0, 1]; 1 disables smoothing.
struct SmootherState {
    TiltAngles current{};
    double alpha = 0.2;
};

// Complementary-filter state. k is the gyro weight; k = 0 degenerates to the
// accelerometer tilt, k = 1 to pure rate integration.
struct FusionState {
    TiltAngles angles{};
    double k = 0.98;
};

// Below this accel magnitude (in g) gravity direction is unobservable.
inline constexpr double kFreefallThresholdG = 0.05;

// Maps an angle difference or angle into (-180, 180].
double wrap_degrees(double deg);

// Tilt from the gravity direction:
//   pitch = atan2(-ax, sqrt(ay^2 + az^2)), roll = atan2(ay, az).
// Throws FreefallAmbiguous when |accel| <= 0.05 g.
TiltAngles tilt_from_accel(const PhysicalSample& p);

// Per axis: current += alpha * wrap(target - current), then renormalized.
SmootherState smooth_ema(SmootherState st, const TiltAngles& target);

// angle <- k*(angle + rate*dt) + (1-k)*accel_tilt, renormalized to the
// TiltAngles ranges. Pitch rate is the y gyro component, roll rate the x
// component. With k = 1 the accelerometer is never consulted; with k < 1
// FreefallAmbiguous propagates from tilt_from_accel.
FusionState complementary_update(FusionState fs, const PhysicalSample& p, double dt_s);

}  // namespace headmouse
