#include <doctest.h>

#include <cmath>
#include <vector>

#include "headmouse/controller.hpp"
#include "headmouse/errors.hpp"

using namespace headmouse;

namespace {

RawImuSample rest_sample() { return RawImuSample{0, 0, 16384, 0, 0, 0, 0}; }

RawImuSample pitch_sample(double pitch_deg) {
    const double rad = pitch_deg * M_PI / 180.0;
    RawImuSample s;
    s.ax = static_cast<std::int16_t>(std::llround(-std::sin(rad) * 16384.0));
    s.az = static_cast<std::int16_t>(std::llround(std::cos(rad) * 16384.0));
    return s;
}

ControllerState init_at(const ControllerConfig& cfg, RegisterFile& rf, const RawImuSample& raw) {
    store_sample(rf, raw);
    return init_controller(cfg, rf, raw_to_physical(raw, cfg.scale));
}

// Feeds a pitch-hold run with a pedal press in the middle and returns the
// events plus the emitted reports.
std::pair<std::vector<ButtonEvent>, std::vector<HidReport>> press_during_motion(Mode mode) {
    ControllerConfig cfg;
    cfg.mode = mode;
    RegisterFile rf = make_mpu6050();
    ControllerState st = init_at(cfg, rf, rest_sample());

    std::vector<ButtonEvent> events;
    std::vector<HidReport> reports;
    for (std::int64_t t = 10; t <= 3000; t += 10) {
        store_sample(rf, pitch_sample(10.0));
        const Level l = (t >= 1000 && t < 1200) ? Level::High : Level::Low;
        TickOutput out = tick(st, cfg, rf, PedalLevels{l, Level::Low}, true, t);
        events.insert(events.end(), out.events.begin(), out.events.end());
        REQUIRE(out.report.has_value());
        reports.push_back(*out.report);
    }
    return {events, reports};
}

}  // namespace

TEST_CASE("init captures the neutral pose and wakes the device") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    write_register(rf, kRegPwrMgmt1, 0x40);  // sleep bit as after power-on
    const ControllerState st = init_at(cfg, rf, rest_sample());
    CHECK(st.initialized);
    CHECK(st.neutral.pitch0 == doctest::Approx(0.0));
    CHECK(st.neutral.roll0 == doctest::Approx(0.0));
    CHECK(rf.registers[kRegPwrMgmt1] == 0x00);
}

TEST_CASE("init fails without the sensor") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050(false);
    CHECK_THROWS_AS(init_controller(cfg, rf, raw_to_physical(rest_sample(), cfg.scale)),
                    AccessoryAbsent);

    RegisterFile corrupt = make_mpu6050();
    write_register(corrupt, kRegWhoAmI, 0x12);
    CHECK_THROWS_AS(init_controller(cfg, corrupt, raw_to_physical(rest_sample(), cfg.scale)),
                    AccessoryAbsent);
}

TEST_CASE("init fails on a degenerate first sample") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    CHECK_THROWS_AS(init_controller(cfg, rf, PhysicalSample{}), FreefallAmbiguous);
}

TEST_CASE("a healthy tick at the neutral pose emits the all-zero report") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    ControllerState st = init_at(cfg, rf, rest_sample());
    const TickOutput out = tick(st, cfg, rf, PedalLevels{}, true, 10);
    CHECK(out.diag.led == Led::Ok);
    REQUIRE(out.report.has_value());
    CHECK(serialize_report(*out.report) == std::array<std::uint8_t, 3>{0x00, 0x00, 0x00});
    CHECK(out.events.empty());
}

TEST_CASE("a tilted init becomes the zero pose") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    ControllerState st = init_at(cfg, rf, pitch_sample(10.0));
    CHECK(st.neutral.pitch0 == doctest::Approx(10.0).epsilon(1e-3));
    const TickOutput out = tick(st, cfg, rf, PedalLevels{}, true, 10);
    REQUIRE(out.report.has_value());
    CHECK(out.report->dx == 0);
    CHECK(out.report->dy == 0);
}

TEST_CASE("tick requires init and monotonic time") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    store_sample(rf, rest_sample());
    ControllerState uninit;
    CHECK_THROWS_AS(tick(uninit, cfg, rf, PedalLevels{}, true, 0), NotInitialized);

    ControllerState st = init_at(cfg, rf, rest_sample());
    tick(st, cfg, rf, PedalLevels{}, true, 100);
    CHECK_THROWS_AS(tick(st, cfg, rf, PedalLevels{}, true, 90), TimeWentBackwards);
}

TEST_CASE("unhealthy ticks emit nothing and keep the state") {
    ControllerConfig cfg;
    RegisterFile rf = make_mpu6050();
    ControllerState st = init_at(cfg, rf, rest_sample());
    tick(st, cfg, rf, PedalLevels{}, true, 10);

    SUBCASE("pedals missing") {
        const TickOutput out = tick(st, cfg, rf, PedalLevels{}, false, 20);
        CHECK(out.diag.led == Led::MissingB);
        CHECK_FALSE(out.report.has_value());
        CHECK(st.last_t_ms == 10);  // untouched
    }
    SUBCASE("sensor missing") {
        rf.present = false;
        const TickOutput out = tick(st, cfg, rf, PedalLevels{}, true, 20);
        CHECK(out.diag.led == Led::MissingA);
        CHECK_FALSE(out.report.has_value());
    }
    SUBCASE("sensor missing outranks pedals missing") {
        rf.present = false;
        const TickOutput out = tick(st, cfg, rf, PedalLevels{}, false, 20);
        CHECK(out.diag.led == Led::MissingA);
    }
}

TEST_CASE("diagnostics_update case analysis") {
    CHECK(diagnostics_update(true, true).led == Led::Ok);
    CHECK(diagnostics_update(false, true).led == Led::MissingA);
    CHECK(diagnostics_update(true, false).led == Led::MissingB);
    CHECK(diagnostics_update(false, false).led == Led::MissingA);
}

TEST_CASE("faithful mode misses a press held during continuous motion") {
    const auto [events, reports] = press_during_motion(Mode::Faithful);
    CHECK(events.empty());
    for (const HidReport& r : reports) {
        CHECK(r.buttons == 0x00);
    }
}

TEST_CASE("improved mode detects the same press after one debounce window") {
    const auto [events, reports] = press_during_motion(Mode::Improved);
    REQUIRE(events.size() == 2);
    CHECK(events[0].pedal == Pedal::L);
    CHECK(events[0].kind == EventKind::Press);
    CHECK(events[0].t_ms == 1020);
    CHECK(events[1].kind == EventKind::Release);
    CHECK(events[1].t_ms == 1220);
}

TEST_CASE("identical inputs give byte-identical output") {
    auto run = [] {
        ControllerConfig cfg;
        RegisterFile rf = make_mpu6050();
        ControllerState st = init_at(cfg, rf, rest_sample());
        std::vector<std::array<std::uint8_t, 3>> bytes;
        for (std::int64_t t = 10; t <= 500; t += 10) {
            store_sample(rf, pitch_sample(t < 250 ? 8.0 : -4.0));
            const Level l = t % 70 < 30 ? Level::High : Level::Low;
            const TickOutput out = tick(st, cfg, rf, PedalLevels{l, Level::Low}, true, t);
            if (out.report) bytes.push_back(serialize_report(*out.report));
        }
        return bytes;
    };
    CHECK(run() == run());
}

TEST_CASE("with a motionless pose faithful and improved match") {
    auto run = [](Mode mode) {
        ControllerConfig cfg;
        cfg.mode = mode;
        RegisterFile rf = make_mpu6050();
        ControllerState st = init_at(cfg, rf, rest_sample());
        std::vector<std::array<std::uint8_t, 3>> bytes;
        for (std::int64_t t = 10; t <= 1000; t += 10) {
            const Level l = (t >= 300 && t < 600) ? Level::High : Level::Low;
            const TickOutput out = tick(st, cfg, rf, PedalLevels{l, Level::Low}, true, t);
            REQUIRE(out.report.has_value());
            bytes.push_back(serialize_report(*out.report));
        }
        return bytes;
    };
    CHECK(run(Mode::Faithful) == run(Mode::Improved));
}
