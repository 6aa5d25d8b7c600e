#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace headmouse {

// MPU-6050 register addresses used by the emulation.
inline constexpr std::uint8_t kRegAccelXoutH = 0x3B;  // start of the ACCEL/TEMP/GYRO block
inline constexpr std::uint8_t kRegPwrMgmt1 = 0x6B;
inline constexpr std::uint8_t kRegWhoAmI = 0x75;
inline constexpr std::uint8_t kWhoAmIValue = 0x68;
inline constexpr std::size_t kBurstLength = 14;  // ax..az, temp, gx..gz as big-endian pairs

// Register-level stand-in for the GY-521 board on port A: 256 byte-wide
// registers plus an attached/detached flag. Unwritten registers read 0x00.
struct RegisterFile {
    std::array<std::uint8_t, 256> registers{};
    bool present = false;
};

// One burst read, still in signed 16-bit counts.
struct RawImuSample {
    std::int16_t ax = 0, ay = 0, az = 0;
    std::int16_t temp = 0;
    std::int16_t gx = 0, gy = 0, gz = 0;
};

// Counts per physical unit at the device power-on full scales (±2 g, ±250 °/s).
struct ScaleConfig {
    double accel_sensitivity = 16384.0;  // counts per g
    double gyro_sensitivity = 131.0;     // counts per °/s
};

// Sample converted to g and °/s. Component order is x, y, z.
struct PhysicalSample {
    std::array<double, 3> accel{};
    std::array<double, 3> gyro{};
};

// A fresh device with the identity register seeded; everything else reads 0.
RegisterFile make_mpu6050(bool present = true);

void write_register(RegisterFile& rf, std::uint8_t addr, std::uint8_t value);

// Loads a sample into the 0x3B..0x48 block the way the real part latches it.
void store_sample(RegisterFile& rf, const RawImuSample& s);

// Burst read of `count` bytes starting at `start`. Addresses wrap at 0xFF.
// Pure with respect to rf. Throws AccessoryAbsent when nothing is attached.
std::vector<std::uint8_t> emulate_read(const RegisterFile& rf, std::uint8_t start,
                                       std::size_t count);

// Decodes the 14-byte burst: big-endian two's-complement pairs in the order
// ax, ay, az, temp, gx, gy, gz. Throws WrongLength for any other size.
RawImuSample decode_burst(std::span<const std::uint8_t> bytes);

std::array<std::uint8_t, kBurstLength> encode_burst(const RawImuSample& s);

PhysicalSample raw_to_physical(const RawImuSample& s, const ScaleConfig& cfg);

// True iff the device is attached and WHO_AM_I reads 0x68.
bool probe_identity(const RegisterFile& rf);

}  // namespace headmouse
