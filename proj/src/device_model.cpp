#include "headmouse/device_model.hpp"

#include "headmouse/errors.hpp"

namespace headmouse {

RegisterFile make_mpu6050(bool present) {
    RegisterFile rf;
    rf.present = present;
    rf.registers[kRegWhoAmI] = kWhoAmIValue;
    return rf;
}

void write_register(RegisterFile& rf, std::uint8_t addr, std::uint8_t value) {
    rf.registers[addr] = value;
}

void store_sample(RegisterFile& rf, const RawImuSample& s) {
    const auto bytes = encode_burst(s);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        rf.registers[static_cast<std::uint8_t>(kRegAccelXoutH + i)] = bytes[i];
    }
}

std::vector<std::uint8_t> emulate_read(const RegisterFile& rf, std::uint8_t start,
                                       std::size_t count) {
    if (!rf.present) {
        throw AccessoryAbsent();
    }
    std::vector<std::uint8_t> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(rf.registers[static_cast<std::uint8_t>(start + i)]);
    }
    return out;
}

namespace {

std::int16_t decode_pair(std::uint8_t hi, std::uint8_t lo) {
    return static_cast<std::int16_t>(static_cast<std::uint16_t>(hi) << 8 |
                                     static_cast<std::uint16_t>(lo));
}

void encode_pair(std::int16_t v, std::uint8_t& hi, std::uint8_t& lo) {
    const auto u = static_cast<std::uint16_t>(v);
    hi = static_cast<std::uint8_t>(u >> 8);
    lo = static_cast<std::uint8_t>(u & 0xFF);
}

}  // namespace

RawImuSample decode_burst(std::span<const std::uint8_t> bytes) {
    if (bytes.size() != kBurstLength) {
        throw WrongLength("expected " + std::to_string(kBurstLength) + " bytes, got " +
                          std::to_string(bytes.size()));
    }
    RawImuSample s;
    s.ax = decode_pair(bytes[0], bytes[1]);
    s.ay = decode_pair(bytes[2], bytes[3]);
    s.az = decode_pair(bytes[4], bytes[5]);
    s.temp = decode_pair(bytes[6], bytes[7]);
    s.gx = decode_pair(bytes[8], bytes[9]);
    s.gy = decode_pair(bytes[10], bytes[11]);
    s.gz = decode_pair(bytes[12], bytes[13]);
    return s;
}

std::array<std::uint8_t, kBurstLength> encode_burst(const RawImuSample& s) {
    std::array<std::uint8_t, kBurstLength> b{};
    encode_pair(s.ax, b[0], b[1]);
    encode_pair(s.ay, b[2], b[3]);
    encode_pair(s.az, b[4], b[5]);
    encode_pair(s.temp, b[6], b[7]);
    encode_pair(s.gx, b[8], b[9]);
    encode_pair(s.gy, b[10], b[11]);
    encode_pair(s.gz, b[12], b[13]);
    return b;
}

PhysicalSample raw_to_physical(const RawImuSample& s, const ScaleConfig& cfg) {
    PhysicalSample p;
    p.accel = {s.ax / cfg.accel_sensitivity, s.ay / cfg.accel_sensitivity,
               s.az / cfg.accel_sensitivity};
    p.gyro = {s.gx / cfg.gyro_sensitivity, s.gy / cfg.gyro_sensitivity,
              s.gz / cfg.gyro_sensitivity};
    return p;
}

bool probe_identity(const RegisterFile& rf) {
    return rf.present && rf.registers[kRegWhoAmI] == kWhoAmIValue;
}

}  // namespace headmouse
