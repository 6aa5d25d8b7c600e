#include <doctest.h>

#include <array>
#include <random>

#include "headmouse/errors.hpp"
#include "headmouse/hid_report.hpp"

using namespace headmouse;

namespace {

// Test-side inverse of serialize_report.
HidReport deserialize(const std::array<std::uint8_t, 3>& bytes) {
    HidReport r;
    r.buttons = bytes[0];
    r.dx = static_cast<std::int8_t>(bytes[1]);
    r.dy = static_cast<std::int8_t>(bytes[2]);
    return r;
}

}  // namespace

TEST_CASE("left press with motion") {
    const HidReport r = make_report(PedalState{true, false}, PointerDelta{5, -3});
    CHECK(r.buttons == 0x01);
    CHECK(r.dx == 5);
    CHECK(r.dy == -3);
    CHECK(serialize_report(r) == std::array<std::uint8_t, 3>{0x01, 0x05, 0xFD});
}

TEST_CASE("both pedals set both low bits") {
    const HidReport r = make_report(PedalState{true, true}, PointerDelta{0, 0});
    CHECK(r.buttons == 0x03);
}

TEST_CASE("idle state is the all-zero report") {
    const HidReport r = make_report(PedalState{false, false}, PointerDelta{0, 0});
    CHECK(serialize_report(r) == std::array<std::uint8_t, 3>{0x00, 0x00, 0x00});
}

TEST_CASE("two's-complement byte layout") {
    CHECK(serialize_report(HidReport{0x00, -127, 127}) ==
          std::array<std::uint8_t, 3>{0x00, 0x81, 0x7F});
    CHECK(serialize_report(HidReport{0x02, 0, 0}) ==
          std::array<std::uint8_t, 3>{0x02, 0x00, 0x00});
}

TEST_CASE("deltas outside the report range are rejected") {
    CHECK_THROWS_AS(make_report(PedalState{}, PointerDelta{128, 0}), RangeError);
    CHECK_THROWS_AS(make_report(PedalState{}, PointerDelta{0, -128}), RangeError);
}

TEST_CASE("reserved button bits are rejected") {
    CHECK_THROWS_AS(serialize_report(HidReport{0x04, 0, 0}), RangeError);
    CHECK_THROWS_AS(serialize_report(HidReport{0x80, 0, 0}), RangeError);
}

TEST_CASE("serialize/deserialize round-trips valid reports") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> delta(-127, 127);
    std::uniform_int_distribution<int> pressed(0, 1);
    for (int i = 0; i < 2000; ++i) {
        const HidReport r = make_report(
            PedalState{pressed(rng) == 1, pressed(rng) == 1}, PointerDelta{delta(rng), delta(rng)});
        const auto bytes = serialize_report(r);
        CHECK((bytes[0] & 0xFC) == 0);
        const HidReport back = deserialize(bytes);
        CHECK(back.buttons == r.buttons);
        CHECK(back.dx == r.dx);
        CHECK(back.dy == r.dy);
    }
}
